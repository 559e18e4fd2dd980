#pragma once

#include <span>
#include <vector>

#include "hmchisq/evidence.hpp"

namespace hmchisq {

struct BoundsRow {
    double alpha_H;
    int n;
    double necessary;
    double sufficient;
};

/// Necessary per-study p-value bound 1 - Phi(sqrt(c_H)/n): a study above
/// this value makes overall success at alpha_H impossible.
double necessary_bound(const SignificanceSpec& spec);

/// Sufficient per-study bound 1 - Phi(sqrt(c_H/n)): all studies at or
/// below it guarantee overall success at alpha_H.
double sufficient_bound(const SignificanceSpec& spec);

/// Full grid of bounds for every (alpha, n) combination.
std::vector<BoundsRow> bounds_table(std::span<const double> alphas,
                                    std::span<const int> ns);

/// Significance level of the k-sigma rule, 1 - Phi(k).
double sigma_level(double k) noexcept;

}  // namespace hmchisq
