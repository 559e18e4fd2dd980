#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "hmchisq/rng.hpp"

namespace hmchisq {

/// Monte Carlo check of the chi-squared(1) null law of the statistic.
struct CalibrationReport {
    std::int64_t n_sims = 0;
    int n_studies = 0;
    std::vector<double> weights;  // empty = unweighted
    double rho = 0.0;             // equicorrelation of the z's; 0 = independent
    double ks_distance = 0.0;
    // (tail probability probe, relative error of the empirical tail)
    std::vector<std::pair<double, double>> tail_errors;
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

/// Draws from the Levy(0, c) distribution via Y = c / Z^2, Z standard normal.
std::vector<double> sample_levy(RngStream& rng, double c, std::int64_t n);

/// Draws from the inverse-gamma IG(1/2, rate) distribution as the reciprocal
/// of a Marsaglia-Tsang gamma sample; IG(1/2, c/2) equals Levy(0, c) in law,
/// giving an independent sampling route for distribution tests.
std::vector<double> sample_inverse_gamma_half(RngStream& rng, double rate,
                                              std::int64_t n);

/// Levy(0, c) distribution function 2[1 - Phi(sqrt(c/y))].
double levy_cdf(double y, double c = 1.0);

/// One-sample Kolmogorov-Smirnov distance of the sample to a continuous cdf.
double ks_distance(std::vector<double> sample,
                   const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov distance.
double two_sample_ks(std::vector<double> a, std::vector<double> b);

/// Simulated null statistics under i.i.d. standard normal z's (unweighted
/// when weights is empty) with optional equicorrelation rho.
std::vector<double> simulate_null_statistics(int n_studies,
                                             std::span<const double> weights,
                                             double rho, std::int64_t n_sims,
                                             const RngStream& rng);

CalibrationReport verify_null_unweighted(int n_studies, std::int64_t n_sims,
                                         const RngStream& rng);

CalibrationReport verify_null_weighted(std::span<const double> weights,
                                       std::int64_t n_sims,
                                       const RngStream& rng);

/// Same checks with exchangeable equicorrelated z's; the chi-squared(1)
/// law is predicted to hold under dependence. Requires
/// rho in (-1/(n-1), 1) for a positive-definite correlation matrix.
CalibrationReport verify_null_dependent(double rho, int n_studies,
                                        std::int64_t n_sims,
                                        const RngStream& rng);

/// Empirical Type I error of the directional harmonic test at alpha_H
/// under the global null (z_i i.i.d. standard normal).
double harmonic_type_i_error(double alpha_H, int n_studies,
                             std::int64_t n_sims, const RngStream& rng);

}  // namespace hmchisq
