#pragma once

// Witness searches for the density criteria. Every search is truncated:
// running out of candidates is its own outcome and never a refutation.

#include "wlp/space.hpp"
#include "wlp/subset.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wlp {

/// s with value = max(w(s), w(s^-1)) (or a sup over a translated set)
/// strictly below threshold; index is the position in the enumeration.
struct InfWitness {
    GroupElement element;
    DyadicValue value;
    DyadicValue threshold;
    std::size_t index = 0;
};

/// One threshold of a search. No witness means the horizon ran out.
struct ThresholdResult {
    DyadicValue threshold;
    std::optional<InfWitness> witness;
    std::size_t scanned = 0;

    bool found() const noexcept { return witness.has_value(); }
};

DyadicValue symmetric_value(const Weight& weight, const GroupElement& s);

/// For each threshold, the first candidate with max(w(s), w(s^-1)) < threshold.
std::vector<ThresholdResult> abelian_inf_search(const SubsetSpec& s, const Weight& weight,
                                                const std::vector<DyadicValue>& thresholds, std::size_t horizon);

/// sup of w over sK u s^-1 K.
DyadicValue sup_over_translates(const Weight& weight, const GroupElement& s, const FiniteSet& k);

/// First candidate with sup over sK u s^-1 K below epsilon.
ThresholdResult esssup_sufficient_check(const SubsetSpec& s, const Weight& weight, const FiniteSet& k,
                                        const DyadicValue& epsilon, std::size_t horizon);

// ---------------------------------------------------------------- series criterion

/// c_k ||w||^p over s_n s_k^-1 F_k, summed over n != k. Index 0 is s_0 = e
/// with F_0 empty, so only the terms (0, k) survive from row 0; they are the
/// p-th power of the norm of the assembled vector itself.
struct SeriesTerms {
    std::vector<std::vector<Rational>> term;  // term[n][k]
    Rational total = 0;

    Rational row_sum(std::size_t n) const;
};

/// Exact double sum for fixed witnesses. witnesses[0] must be e and sets[0]
/// empty when include_origin is used. Requires SpaceParams::exact().
SeriesTerms series_terms(const SpaceParams& params, const std::vector<GroupElement>& witnesses,
                         const std::vector<FiniteSet>& sets, const std::vector<Rational>& coefficients);

struct StageRecord {
    unsigned stage = 0;
    std::size_t candidate_index = 0;  // position of s_n in the enumeration of S
    std::size_t scanned = 0;
    std::size_t forbidden_size = 0;   // |union over k < n of F_n F_k^-1 s_k|
    Rational increment = 0;
    Rational budget = 0;
    unsigned backtracks = 0;
};

struct SeriesCertificate {
    std::vector<GroupElement> witnesses;  // s_0 = e, s_1 .. s_N
    /// F_0 = {} .. F_N; in the discrete case E_n = F_n.
    std::vector<FiniteSet> sets;
    std::vector<Rational> coefficients;   // c_0 (unused) .. c_N
    Rational total = 0;
    std::vector<StageRecord> stages;

    unsigned depth() const noexcept { return static_cast<unsigned>(witnesses.size()) - 1; }
};

enum class SeriesFailureReason { Budget, Cap, EnumeratorExhausted };
std::string to_string(SeriesFailureReason r);

struct SeriesFailure {
    SeriesFailureReason reason;
    unsigned stage = 0;
    std::optional<Rational> best_increment;
    Rational budget = 0;
    std::string message;
    /// Stages committed before the failing one.
    SeriesCertificate partial;
};

struct SeriesOptions {
    Rational budget0 = 1;
    /// Candidates examined per stage.
    std::size_t horizon = 256;
    /// c_1 .. c_N; all 1 when empty.
    std::vector<Rational> coefficients;
    /// Alternatives tried at stage n-1 when stage n fails.
    unsigned backtrack_limit = 4;
    /// Disjointness and the series make sense for any finite sets; the
    /// criterion itself asks for an increasing exhaustion.
    bool require_increasing = true;
};

struct SeriesResult {
    std::optional<SeriesCertificate> certificate;
    std::optional<SeriesFailure> failure;

    bool ok() const noexcept { return certificate.has_value(); }
};

/// Greedy search with single-level backtracking. Stage n draws s_n from S
/// outside the forbidden region, takes the smallest exact increment (ties by
/// enumeration index) and accepts it when it is at most 2^-n * budget0.
/// sets holds F_1 .. F_N.
SeriesResult series_criterion_search(const SubsetSpec& s, const SpaceParams& params, const std::vector<FiniteSet>& sets,
                                     const SeriesOptions& options);

struct CertificateCheck {
    bool disjoint = true;
    std::optional<std::pair<unsigned, unsigned>> collision;
    Rational recomputed_total = 0;
    bool total_matches = true;

    bool ok() const noexcept { return disjoint && total_matches; }
};

/// Re-verifies a certificate from its witnesses alone: pairwise disjointness of
/// the s_n^-1 F_n by set intersection, and the total by fresh summation.
CertificateCheck recheck_certificate(const SeriesCertificate& cert, const SpaceParams& params);

// ---------------------------------------------------------------- single operators

struct SingleTranslationReport {
    GroupElement generator;
    std::vector<ThresholdResult> thresholds;
    /// n <= horizon with w(g^n) != 1 or w(g^-n) != 1.
    std::vector<std::size_t> non_unit_powers;
    /// min over n <= horizon of max(w(g^n), w(g^-n)).
    DyadicValue min_value;
};

SingleTranslationReport single_translation_check(const GroupElement& g, const Weight& weight,
                                                 const std::vector<DyadicValue>& thresholds, std::size_t horizon);

}  // namespace wlp
