#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hmchisq/numerics.hpp"

namespace hmchisq {

/// Z-score for a one-sided p-value, Z = Phi^{-1}(1 - p). Strictly
/// decreasing in p; positive z means evidence in the hypothesized direction.
double z_from_p(Probability p);

/// One trial's evidence. At least one of p_one_sided / z must be present;
/// when both are given they must agree (|z - z_from_p(p)| <= 1e-6), anything
/// else is rejected rather than silently reconciled, because log-rank
/// p-values and Wald z = effect/se can legitimately disagree.
struct Study {
    std::string id;
    std::optional<double> p_one_sided;  // one-sided, benefit direction
    std::optional<double> z;            // positive = evidence for benefit
    std::optional<double> effect;       // analysis scale, e.g. log hazard ratio
    std::optional<double> se;           // standard error of effect
    std::optional<double> weight;
    std::optional<long long> sample_size;

    /// The study's z-score, from z or derived from p_one_sided.
    double z_score() const;

    /// Wald z = effect / se (may differ from z_score; see above).
    double wald_z() const;
};

/// Throws std::invalid_argument if any Study invariant is violated.
void validate_study(const Study& study);

enum class Direction { benefit_is_positive_z };

/// Ordered collection of studies with a consistent direction convention.
class StudySet {
public:
    explicit StudySet(std::vector<Study> studies,
                      Direction direction = Direction::benefit_is_positive_z);

    const std::vector<Study>& studies() const noexcept { return studies_; }
    std::size_t size() const noexcept { return studies_.size(); }
    Direction direction() const noexcept { return direction_; }

    std::vector<double> z_scores() const;
    std::vector<double> effects() const;  // throws if any study lacks effect
    std::vector<double> ses() const;      // throws if any study lacks se

private:
    std::vector<Study> studies_;
    Direction direction_;
};

enum class WeightMode { none, inverse_variance, explicit_weights };

std::string_view weight_mode_name(WeightMode mode) noexcept;

/// Weights for the given mode: empty for none, 1/se^2 for inverse_variance,
/// the studies' weight fields for explicit_weights. Throws if a required
/// field is missing.
std::vector<double> resolve_weights(const StudySet& set, WeightMode mode);

/// Overall p-value that may be reported as an inequality "p > value" when
/// the effect directions disqualify an exact value.
struct PValue {
    double value = 1.0;
    bool is_lower_bound = false;

    static PValue exact(double p) { return {p, false}; }
    static PValue greater_than(double bound) { return {bound, true}; }

    /// Decision p <= alpha; an inequality result is never significant
    /// (its bound 1/2^n always exceeds any admissible alpha_H).
    bool significant_at(double alpha) const noexcept {
        return !is_lower_bound && value <= alpha;
    }
};

enum class Method {
    harmonic,
    harmonic_weighted,
    fisher,
    stouffer,
    stouffer_weighted,
    two_trials,
    fixed_effects_meta,
};

std::string_view method_name(Method method) noexcept;

struct CombinationResult {
    Method method;
    std::optional<double> statistic;
    PValue p_overall;
    int n = 0;
};

/// Overall one-sided level alpha_H with its derived critical value
/// c_H = [Phi^{-1}(1 - 2^{n-1} alpha_H)]^2. Requires alpha_H < 1/2^n.
struct SignificanceSpec {
    double alpha_H;
    int n;
    double c_H;

    SignificanceSpec(Probability alpha_H, int n);
};

double critical_value(const SignificanceSpec& spec) noexcept;

/// Scaled harmonic mean of squared z-scores, n^2 / sum(1/z_i^2).
/// Permutation- and sign-flip-invariant; any z_i == 0 gives the limit 0.
double harmonic_stat(std::span<const double> zs);

/// Weighted form (sum sqrt(w_i))^2 / sum(w_i / z_i^2); reduces to
/// harmonic_stat for constant weights.
double harmonic_stat_weighted(std::span<const double> zs,
                              std::span<const double> ws);

/// Effect-factorized route with precision weights w_i = 1/se_i^2:
/// (sum 1/se_i)^2 * theta_H^2 / n where theta_H^2 = n / sum(1/effect_i^2).
/// Algebraically identical to harmonic_stat_weighted(effect/se, 1/se^2).
double harmonic_stat_effect_form(std::span<const double> effects,
                                 std::span<const double> ses);

/// Overall p-value of the harmonic mean chi-squared test.
///
/// With all z_i > 0: p_H = [1 - Phi(x)] / 2^{n-1} with x^2 the (weighted)
/// statistic. If any z_i <= 0 the result is the inequality p_H > 1/2^n;
/// the numeric statistic is still attached for plotting.
CombinationResult harmonic_p_value(const StudySet& set,
                                   WeightMode mode = WeightMode::none);

/// Same computation on raw z-scores; ws empty selects the unweighted form.
CombinationResult harmonic_p_value_z(std::span<const double> zs,
                                     std::span<const double> ws = {});

}  // namespace hmchisq
