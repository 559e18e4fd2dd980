#pragma once

#include <vector>

#include "hmchisq/evidence.hpp"

namespace hmchisq {

/// Shifted test statistic (effect - mu) / se for the point null theta = mu.
double shifted_z(const Study& study, double mu);

/// Two-sided p-value 2 * p_H at the hypothesized effect mu.
///
/// Exact when the shifted estimates share a strict sign; equal to the
/// boundary value 1/2^{n-1} when some shifted z is exactly zero; otherwise
/// the inequality "> 1/2^{n-1}".
PValue two_sided_p(const StudySet& set, double mu,
                   WeightMode mode = WeightMode::none);

enum class Scale { analysis, exponentiated };

struct ConfidenceInterval {
    double level;
    double lower;
    double upper;
    Scale scale = Scale::analysis;
    bool multiple_crossings = false;
};

struct InversionOptions {
    WeightMode weights = WeightMode::none;
    Scale scale = Scale::analysis;
    int scan_points = 512;      // grid points per side when hunting a bracket
    double scan_span_se = 20.0; // window: [min effect - span*max se, ...]
    double root_tol = 1e-10;
};

/// Confidence interval at level gamma > 1 - 1/2^{n-1} by test inversion:
/// the set of mu with two_sided_p(mu) > 1 - gamma. Endpoints are bracketed
/// by an outward grid scan and polished by root finding; if several
/// crossings exist on one side the outermost one is used and the interval
/// is flagged (its convex hull is reported).
ConfidenceInterval confidence_interval(const StudySet& set, Probability gamma,
                                       const InversionOptions& options = {});

struct PValuePoint {
    double mu;
    PValue p;
};

/// Two-sided p-value as a function of mu, for plotting.
struct PValueFunction {
    std::vector<PValuePoint> points;
};

PValueFunction p_value_curve(const StudySet& set, double mu_lo, double mu_hi,
                             int points, WeightMode mode = WeightMode::none);

}  // namespace hmchisq
