#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hmchisq/evidence.hpp"

namespace hmchisq {

/// Thrown for unreadable/unwritable files; content problems use
/// std::invalid_argument (validation).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StudyRow {
    std::string id;
    std::optional<double> p_one_sided;
    std::optional<double> effect;     // reported, analysis scale (log HR)
    std::optional<double> se;
    std::optional<double> ci_lower;   // exponentiated scale (e.g. HR)
    std::optional<double> ci_upper;
    std::optional<double> weight;
    std::optional<long long> sample_size;
};

struct StudyTable {
    std::vector<StudyRow> rows;
    std::string source;
};

/// Sign convention linking the analysis-scale effect to the benefit
/// direction (Carvedilol: benefit = negative log hazard ratio).
enum class BenefitDirection { negative_effect, positive_effect };

std::string_view benefit_direction_name(BenefitDirection d) noexcept;

/// Parse a CSV study table. Header required; recognized columns are
/// id, p_one_sided, effect, se, ci_lower, ci_upper, weight, sample_size;
/// unknown columns are ignored; "NA" or empty means missing. Errors carry
/// the offending row and column.
StudyTable parse_csv(std::string_view text, std::string source);
StudyTable load_csv(const std::filesystem::path& path);

/// Canonical CSV serialization (recognized columns, shortest round-trip
/// float formatting); load(write(t)) == t field-for-field.
std::string to_canonical_csv(const StudyTable& table);
void write_csv(const StudyTable& table, const std::filesystem::path& path);

/// FNV-1a hash (hex) of the canonical CSV bytes; pins dataset identity.
std::string table_hash(const StudyTable& table);

/// Standard error of the log effect from confidence limits on the
/// exponentiated scale: (log upper - log lower) / (2 * Phi^{-1}((1+level)/2)).
double se_from_ci(double lower, double upper, Probability level);

/// One-sided Wald p-value of effect/se in the benefit direction.
Probability wald_p_one_sided(double effect, double se,
                             BenefitDirection direction);

/// The five Carvedilol mortality trials (one-sided log-rank p-values,
/// reported log hazard ratios, standard errors reconstructed from the
/// original confidence intervals).
StudyTable carvedilol_dataset();

/// Build the analysis model from a table. z comes from p_one_sided when
/// present (else from the Wald statistic in the benefit direction); se
/// falls back to se_from_ci when only confidence limits are given; the
/// reported effect is kept when present and otherwise reconstructed as
/// z * se in the benefit direction.
StudySet to_study_set(const StudyTable& table, BenefitDirection direction);

/// Effects reconstructed from the evidence (z * se, benefit-oriented on
/// the analysis scale), the convention used for meta-analysis when the
/// reported effect scale is not trusted.
std::vector<double> reconstructed_effects(const StudySet& set,
                                          BenefitDirection direction);

}  // namespace hmchisq
