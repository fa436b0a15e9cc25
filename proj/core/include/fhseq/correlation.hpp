#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fhseq/construction.hpp"
#include "fhseq/rational.hpp"

namespace fhseq {

/// Periodic Hamming correlation of x against y shifted by `shift`:
/// the number of positions t with x[t] == y[(t + shift) mod L].
/// Throws std::invalid_argument on length mismatch.
std::int64_t hamming_correlation(std::span<const std::int32_t> x,
                                 std::span<const std::int32_t> y, std::int64_t shift);

/// Full per-shift correlation tables plus aggregate statistics, computed by
/// direct counting. No closed forms and no floating point are involved, so
/// the profile serves as the ground-truth oracle for the predictors.
struct CorrelationProfile {
    Params params;
    /// One row per sequence, row[shift] = autocorrelation at that shift.
    std::vector<std::vector<std::int64_t>> auto_rows;
    /// One row per ordered pair (k, l), k != l, in pair_row order.
    std::vector<std::vector<std::int64_t>> cross_rows;
    std::int64_t max_auto_sidelobe = 0;  // max over sequences, shifts in [1, L)
    std::int64_t max_cross = 0;          // max over ordered pairs, all shifts
    std::int64_t total_auto = 0;         // sum of all auto sidelobes
    std::int64_t total_cross = 0;        // half the sum over ordered pairs
    Rational average_auto;               // total_auto / (M(L-1))
    Rational average_cross;              // 2 total_cross / (L M (M-1))

    std::size_t pair_row(std::int64_t k, std::int64_t l) const;
    const std::vector<std::int64_t>& cross(std::int64_t k, std::int64_t l) const;
};

/// Computes the profile for all sequences and ordered pairs. Work is split
/// across `threads` workers (0 = hardware concurrency); each row is owned by
/// one worker, so the result is identical regardless of thread count.
CorrelationProfile correlation_profile(const FHSequenceSet& set, unsigned threads = 0);

/// Smallest possible maximum autocorrelation sidelobe for any sequence of
/// the given length over a library of `library_size` frequencies:
/// ceil((L-b)(L+b-v) / (v(L-1))) with b = L mod v.
std::int64_t lempel_greenberger_bound(std::int64_t length, std::int64_t library_size);

struct LempelGreenbergerCheck {
    std::int64_t sequence = 0;
    std::int64_t bound = 0;
    std::int64_t achieved = 0;
    bool optimal = false;  // achieved == bound
};

/// Evaluation of the set-level sidelobe/crosscorrelation tradeoff
/// (L-1) v Ha + (M-1) L v Hc >= (LM - v) L.
struct PengFanCheck {
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool satisfied = false;
    /// True iff no pair dominated by (Ha, Hc) also satisfies the inequality.
    bool minimal_pair = false;
    /// All Pareto-minimal satisfying pairs inside [0, Ha] x [0, Hc].
    std::vector<std::pair<std::int64_t, std::int64_t>> pareto_minimal_pairs;
    /// floor(LM / v); recorded alongside the inequality but not used by it.
    std::int64_t floor_lm_over_v = 0;
};

PengFanCheck peng_fan_check(std::int64_t length, std::int64_t family_size,
                            std::int64_t library_size, std::int64_t max_auto,
                            std::int64_t max_cross);

/// Exact-rational evaluation of the average-correlation limit
/// Aa/(L(M-1)) + Ac/(L-1) >= (LM - v) / (v(L-1)(M-1)).
struct AverageBoundCheck {
    Rational lhs;
    Rational rhs;
    bool met_with_equality = false;
};

AverageBoundCheck average_bound_check(std::int64_t length, std::int64_t family_size,
                                      std::int64_t library_size, const Rational& average_auto,
                                      const Rational& average_cross);

struct BoundsReport {
    std::vector<LempelGreenbergerCheck> lempel_greenberger;  // one per sequence
    PengFanCheck peng_fan;
    AverageBoundCheck average_bound;
};

/// Evaluates all three bounds against a measured profile (library size = e).
BoundsReport bounds_report(const CorrelationProfile& profile);

}  // namespace fhseq
