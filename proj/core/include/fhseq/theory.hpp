#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fhseq/correlation.hpp"
#include "fhseq/cyclotomy.hpp"

namespace fhseq {

/// A closed-form correlation value together with the branch that produced
/// it. Exactly one branch fires for every (pair, shift); branch selection
/// depends on the cell of the shift and the parity of |f1 - f2|.
struct TheoremPrediction {
    std::int64_t shift = 0;
    std::int64_t value = 0;
    std::string_view case_tag;
};

/// Closed-form autocorrelation at a nonzero shift (every sequence of the set
/// has the same autocorrelation function). Throws std::invalid_argument for
/// shift = 0 unless allow_peak is set, in which case the peak L is returned
/// under the "auto/peak" tag.
TheoremPrediction predict_auto(const CyclotomicTables& tables, std::int64_t shift,
                               bool allow_peak = false);

/// Closed-form crosscorrelation of sequences k and l (labels of the
/// generated set) at any shift. The generated sequences are alphabet
/// rotations, so the table depends on the labels only through (l - k) mod e;
/// that difference selects one of the three case families.
TheoremPrediction predict_cross(const CyclotomicTables& tables, std::int64_t k, std::int64_t l,
                                std::int64_t shift);

/// Closed-form average auto- and crosscorrelation of the full set, as exact
/// reduced fractions.
std::pair<Rational, Rational> predict_averages(const Params& params);

struct TheoremMismatch {
    std::int64_t k = 0;
    std::int64_t l = 0;  // equals k for autocorrelation entries
    std::int64_t shift = 0;
    std::string case_tag;
    std::int64_t predicted = 0;
    std::int64_t actual = 0;
};

struct VerificationReport {
    Params params;
    std::int64_t total_checks = 0;
    std::vector<TheoremMismatch> mismatches;
    std::map<std::string, std::int64_t> case_histogram;

    bool passed() const { return mismatches.empty(); }
};

/// Compares every closed-form prediction against the brute-force profile:
/// every sequence, every ordered pair, every shift. Mismatches are data,
/// never corrected.
VerificationReport verify_theorem1(const FHSequenceSet& set, const CyclotomicTables& tables,
                                   const CorrelationProfile& profile);

/// Convenience overload that computes the brute-force profile itself.
VerificationReport verify_theorem1(const FHSequenceSet& set, const CyclotomicTables& tables);

/// Outcome of checking the closed-form averages against a measured profile
/// and the average-correlation limit.
struct AverageCheck {
    Rational predicted_auto;
    Rational predicted_cross;
    Rational measured_auto;
    Rational measured_cross;
    bool averages_match = false;
    AverageBoundCheck bound;

    bool passed() const { return averages_match && bound.met_with_equality; }
};

AverageCheck verify_theorem2(const CorrelationProfile& profile, const Params& params);

/// The three optimality verdicts for a measured set: per-sequence sidelobe
/// optimality, minimality of the (Ha, Hc) pair, and average-bound equality.
struct OptimalityReport {
    std::vector<LempelGreenbergerCheck> lempel_greenberger;
    bool all_sequences_lg_optimal = false;
    PengFanCheck peng_fan;
    AverageBoundCheck average_bound;
    bool average_optimal = false;
};

OptimalityReport optimality_report(const CorrelationProfile& profile, const Params& params);

}  // namespace fhseq
