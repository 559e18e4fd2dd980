#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hmchisq/evidence.hpp"
#include "hmchisq/rng.hpp"

namespace hmchisq {

/// Two-trials rule: both studies significant at the one-sided level alpha.
bool two_trials_decide(Probability p1, Probability p2, Probability alpha);

/// Fisher's combined test: -2 sum(log p_i) against chi-squared(2n).
CombinationResult fisher_combined(std::span<const double> ps);

/// Stouffer's pooled test, p = 1 - Phi(sum z_i / sqrt(n)).
CombinationResult stouffer_pooled(std::span<const double> ps);

/// Weighted Stouffer, p = 1 - Phi(sum sqrt(w_i) z_i / sqrt(sum w_i)).
/// With w_i = 1/se_i^2 this coincides with the fixed-effects meta-analysis
/// z statistic on effects reconstructed as z_i * se_i.
CombinationResult stouffer_pooled_weighted(std::span<const double> ps,
                                           std::span<const double> ws);

struct MetaResult {
    double estimate;
    double se;
    double lower;
    double upper;
    double p_two_sided;
    double level;
};

/// Fixed-effects (inverse-variance) meta-analysis with a symmetric normal
/// confidence interval at the given level.
MetaResult fixed_effects_meta(std::span<const double> effects,
                              std::span<const double> ses,
                              double level = 0.95);

/// An n=2 approval rule with its operating characteristics.
struct DecisionRule {
    enum class Kind {
        two_trials,
        harmonic_controlled,
        harmonic_liberal,
        fisher,
        stouffer,
        stouffer_weighted,
    };

    Kind kind;
    double level;            // overall one-sided Type I error
    double per_trial_alpha;  // two_trials only
    double critical;         // c_H, c_F = exp(-q/2), or pooled z threshold
    double w1 = 1.0, w2 = 1.0;

    static DecisionRule two_trials(Probability per_trial_alpha = 0.025);
    static DecisionRule harmonic(Probability alpha_H = 0.000625);
    static DecisionRule harmonic_liberal();
    static DecisionRule fisher(Probability alpha_H = 0.000625);
    static DecisionRule stouffer(Probability alpha_H = 0.000625);
    static DecisionRule stouffer_weighted(Probability alpha_H, double w1,
                                          double w2);

    bool approves_p(double p1, double p2) const;
    bool approves_z(double z1, double z2) const;

    /// Largest p with approves(p, p): the rule's equal-p boundary.
    double equal_p_boundary() const;

    std::string_view name() const noexcept;
};

/// The liberal harmonic variant: critical value solving
/// 1 - Phi(sqrt(c/2)) = 0.025 (= 7.68), so that two-trials approval always
/// implies harmonic approval; its exact Type I error is [1 - Phi(sqrt(c))]/2.
DecisionRule liberal_harmonic_rule();

/// Power to complete the rule with a replicate trial of equal design,
/// conditional on the first study's p-value, under Z2 ~ N(z1, 1).
double conditional_power(const DecisionRule& rule, Probability p1);

/// Design alternative for a two-trial program: Z1, Z2 i.i.d. N(mu_alt, 1)
/// with mu_alt = Phi^{-1}(1 - alpha) + Phi^{-1}(power).
struct PowerSpec {
    double per_trial_alpha;
    double per_trial_power;
    double mu_alt;
    std::int64_t n_sims;
    RngStream rng;

    PowerSpec(Probability per_trial_alpha, Probability per_trial_power,
              std::int64_t n_sims, RngStream rng);
};

/// Monte Carlo project power of one rule.
double project_power(const DecisionRule& rule, const PowerSpec& spec);

/// Project power of several rules on common random numbers.
std::vector<double> project_power(std::span<const DecisionRule> rules,
                                  const PowerSpec& spec);

struct BoundaryPoint {
    double p1;
    std::optional<double> p2;  // largest approving p2; nullopt when none works
};

/// Rejection-region boundary of the rule over a grid of p1 values.
std::vector<BoundaryPoint> rejection_boundary(const DecisionRule& rule,
                                              std::span<const double> p1_grid);

}  // namespace hmchisq
