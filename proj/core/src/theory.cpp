#include "fhseq/theory.hpp"

#include <stdexcept>

namespace fhseq {

namespace {

// (pq - 1)/e and (p - q)/e are exact integers: e divides both p-1 and q-1.
// Asserted here so a malformed Params fails loudly instead of silently
// truncating.
std::int64_t exact_div(std::int64_t num, std::int64_t den) {
    if (num % den != 0) throw std::logic_error("theory: expected exact divisibility");
    return num / den;
}

struct BranchContext {
    std::int64_t unit_hits;   // (pq - 1)/e
    std::int64_t p_bias;      // (p - q)/e = f1 - f2
    std::int64_t half;        // e/2
    bool odd_parity;          // |f1 - f2| odd
};

BranchContext make_context(const Params& prm) {
    return {exact_div(prm.L - 1, prm.e), exact_div(prm.p - prm.q, prm.e), prm.e / 2,
            prm.parity_odd()};
}

}  // namespace

TheoremPrediction predict_auto(const CyclotomicTables& tables, std::int64_t shift,
                               bool allow_peak) {
    const Params& prm = tables.params;
    if (shift == 0) {
        if (!allow_peak)
            throw std::invalid_argument("predict_auto: shift 0 is the peak, not a sidelobe");
        return {0, prm.L, "auto/peak"};
    }
    const BranchContext ctx = make_context(prm);
    const CellId cell = cell_of(tables, shift);
    switch (cell.kind) {
        case CellId::Kind::InP:
            return {shift, ctx.unit_hits + ctx.p_bias + prm.q - prm.p - 1, "auto/P"};
        case CellId::Kind::InQ:
            return {shift, ctx.unit_hits - ctx.p_bias + prm.p - prm.q + 1, "auto/Q"};
        case CellId::Kind::InR:
            throw std::logic_error("predict_auto: unreachable cell");
        case CellId::Kind::ClassD: break;
    }
    const std::int64_t i = cell.index;
    if (ctx.odd_parity) {
        if (i == 0 || i == ctx.half) return {shift, ctx.unit_hits, "auto/D0-or-mid-odd"};
        return {shift, ctx.unit_hits + 1, "auto/D-other"};
    }
    if (i == ctx.half) return {shift, ctx.unit_hits - 1, "auto/Dmid-even"};
    if (i == 0) return {shift, ctx.unit_hits + 1, "auto/D0-even"};
    return {shift, ctx.unit_hits + 1, "auto/D-other"};
}

TheoremPrediction predict_cross(const CyclotomicTables& tables, std::int64_t k, std::int64_t l,
                                std::int64_t shift) {
    const Params& prm = tables.params;
    const std::int64_t e = prm.e;
    if (k < 0 || k >= e || l < 0 || l >= e)
        throw std::out_of_range("predict_cross: label outside [0, e)");
    if (k == l) throw std::invalid_argument("predict_cross: labels must differ");

    // The generated sequences follow the rotated-alphabet orientation, under
    // which the case families are selected directly by delta = (l - k) mod e.
    const std::int64_t delta = ((l - k) % e + e) % e;
    const BranchContext ctx = make_context(prm);

    if (delta == ctx.half) {  // opposite labels
        if (shift == 0) return {0, 0, "cross-opposite/zero"};
        const CellId cell = cell_of(tables, shift);
        switch (cell.kind) {
            case CellId::Kind::InP:
                return {shift, ctx.unit_hits + ctx.p_bias + 2, "cross-opposite/P"};
            case CellId::Kind::InQ:
                return {shift, ctx.unit_hits - ctx.p_bias, "cross-opposite/Q"};
            case CellId::Kind::InR:
                throw std::logic_error("predict_cross: unreachable cell");
            case CellId::Kind::ClassD: break;
        }
        const std::int64_t i = cell.index;
        if (ctx.odd_parity) {
            if (i == 0 || i == ctx.half)
                return {shift, ctx.unit_hits + 1, "cross-opposite/D0-or-mid-odd"};
            return {shift, ctx.unit_hits + 2, "cross-opposite/D-other"};
        }
        if (i == ctx.half) return {shift, ctx.unit_hits + 2, "cross-opposite/Dmid-even"};
        if (i == 0) return {shift, ctx.unit_hits, "cross-opposite/D0-even"};
        return {shift, ctx.unit_hits + 2, "cross-opposite/D-other"};
    }

    if ((2 * delta) % e == ctx.half) {  // quarter-offset labels
        if (shift == 0) return {0, 0, "cross-quarter/zero"};
        const CellId cell = cell_of(tables, shift);
        switch (cell.kind) {
            case CellId::Kind::InP:
                return {shift, ctx.unit_hits + ctx.p_bias, "cross-quarter/P"};
            case CellId::Kind::InQ:
                return {shift, ctx.unit_hits - ctx.p_bias, "cross-quarter/Q"};
            case CellId::Kind::InR:
                throw std::logic_error("predict_cross: unreachable cell");
            case CellId::Kind::ClassD: break;
        }
        const std::int64_t i = cell.index;
        const std::int64_t mid = (delta + ctx.half) % e;
        if (ctx.odd_parity) {
            if (i == delta) return {shift, ctx.unit_hits - 2, "cross-quarter/Ddelta-odd"};
            if (i == mid) return {shift, ctx.unit_hits, "cross-quarter/Ddelta-mid-odd"};
            return {shift, ctx.unit_hits, "cross-quarter/D-other"};
        }
        if (i == delta || i == mid)
            return {shift, ctx.unit_hits - 1, "cross-quarter/Ddelta-pair-even"};
        return {shift, ctx.unit_hits, "cross-quarter/D-other"};
    }

    // generic labels
    if (shift == 0) return {0, 0, "cross-generic/zero"};
    const CellId cell = cell_of(tables, shift);
    switch (cell.kind) {
        case CellId::Kind::InP:
            return {shift, ctx.unit_hits + ctx.p_bias, "cross-generic/P"};
        case CellId::Kind::InQ:
            return {shift, ctx.unit_hits - ctx.p_bias, "cross-generic/Q"};
        case CellId::Kind::InR:
            throw std::logic_error("predict_cross: unreachable cell");
        case CellId::Kind::ClassD: break;
    }
    const std::int64_t i = cell.index;
    const std::int64_t mid = (delta + ctx.half) % e;
    const std::int64_t mirror = ((ctx.half - delta) % e + e) % e;
    if (i == delta)
        return ctx.odd_parity ? TheoremPrediction{shift, ctx.unit_hits - 1, "cross-generic/Ddelta-odd"}
                              : TheoremPrediction{shift, ctx.unit_hits, "cross-generic/Ddelta-even"};
    if (i == mid)
        return ctx.odd_parity
                   ? TheoremPrediction{shift, ctx.unit_hits, "cross-generic/Ddelta-mid-odd"}
                   : TheoremPrediction{shift, ctx.unit_hits - 1, "cross-generic/Ddelta-mid-even"};
    if (i == mirror) return {shift, ctx.unit_hits - 1, "cross-generic/Dmirror"};
    return {shift, ctx.unit_hits, "cross-generic/D-other"};
}

std::pair<Rational, Rational> predict_averages(const Params& prm) {
    const Int128 p = prm.p;
    const Int128 q = prm.q;
    const Int128 e = prm.e;
    const Int128 pq1 = p * q - 1;
    const Int128 auto_num = pq1 * pq1 + e * (q * q + p * p) + e * (1 - p * q) - 2 * e * q -
                            (q - 1) * (q - 1) - (p - 1) * (p - 1);
    const Int128 cross_num = (e - 1) * pq1 * pq1 + 2 * e * p * (q - 1) -
                             (e - 1) * (q - 1) * (q - 1) - (e - 1) * (p - 1) * (p - 1);
    return {Rational(auto_num, e * pq1), Rational(cross_num, p * q * e * (e - 1))};
}

VerificationReport verify_theorem1(const FHSequenceSet& set, const CyclotomicTables& tables,
                                   const CorrelationProfile& profile) {
    const Params& prm = tables.params;
    if (set.params != prm || profile.params != prm)
        throw std::invalid_argument("verify_theorem1: set, tables and profile disagree");
    const std::int64_t e = prm.e;
    const std::int64_t L = prm.L;
    VerificationReport report;
    report.params = prm;

    auto record = [&](std::int64_t k, std::int64_t l, const TheoremPrediction& pred,
                      std::int64_t actual) {
        ++report.total_checks;
        ++report.case_histogram[std::string(pred.case_tag)];
        if (pred.value != actual)
            report.mismatches.push_back(
                {k, l, pred.shift, std::string(pred.case_tag), pred.value, actual});
    };

    for (std::int64_t k = 0; k < e; ++k) {
        const auto& row = profile.auto_rows[static_cast<std::size_t>(k)];
        record(k, k, predict_auto(tables, 0, /*allow_peak=*/true), row[0]);
        for (std::int64_t shift = 1; shift < L; ++shift)
            record(k, k, predict_auto(tables, shift), row[static_cast<std::size_t>(shift)]);
    }
    for (std::int64_t k = 0; k < e; ++k) {
        for (std::int64_t l = 0; l < e; ++l) {
            if (k == l) continue;
            const auto& row = profile.cross(k, l);
            for (std::int64_t shift = 0; shift < L; ++shift)
                record(k, l, predict_cross(tables, k, l, shift),
                       row[static_cast<std::size_t>(shift)]);
        }
    }
    return report;
}

VerificationReport verify_theorem1(const FHSequenceSet& set, const CyclotomicTables& tables) {
    return verify_theorem1(set, tables, correlation_profile(set));
}

AverageCheck verify_theorem2(const CorrelationProfile& profile, const Params& params) {
    if (profile.params != params)
        throw std::invalid_argument("verify_theorem2: profile was built for other parameters");
    AverageCheck check;
    auto [predicted_auto, predicted_cross] = predict_averages(params);
    check.predicted_auto = predicted_auto;
    check.predicted_cross = predicted_cross;
    check.measured_auto = profile.average_auto;
    check.measured_cross = profile.average_cross;
    check.averages_match =
        predicted_auto == profile.average_auto && predicted_cross == profile.average_cross;
    check.bound = average_bound_check(params.L, params.e, params.e, profile.average_auto,
                                      profile.average_cross);
    return check;
}

OptimalityReport optimality_report(const CorrelationProfile& profile, const Params& params) {
    if (profile.params != params)
        throw std::invalid_argument("optimality_report: profile was built for other parameters");
    BoundsReport bounds = bounds_report(profile);
    OptimalityReport report;
    report.lempel_greenberger = std::move(bounds.lempel_greenberger);
    report.all_sequences_lg_optimal = true;
    for (const auto& entry : report.lempel_greenberger)
        if (!entry.optimal) report.all_sequences_lg_optimal = false;
    report.peng_fan = std::move(bounds.peng_fan);
    report.average_bound = std::move(bounds.average_bound);
    report.average_optimal = report.average_bound.met_with_equality;
    return report;
}

}  // namespace fhseq
