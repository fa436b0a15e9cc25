#include "fhseq/correlation.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>

namespace fhseq {

std::int64_t hamming_correlation(std::span<const std::int32_t> x,
                                 std::span<const std::int32_t> y, std::int64_t shift) {
    if (x.size() != y.size())
        throw std::invalid_argument("hamming_correlation: sequences differ in length");
    const std::int64_t L = static_cast<std::int64_t>(x.size());
    if (L == 0) return 0;
    if (shift < 0 || shift >= L)
        throw std::invalid_argument("hamming_correlation: shift outside [0, L)");
    std::int64_t hits = 0;
    std::int64_t u = shift;
    for (std::int64_t t = 0; t < L; ++t) {
        if (x[static_cast<std::size_t>(t)] == y[static_cast<std::size_t>(u)]) ++hits;
        if (++u == L) u = 0;
    }
    return hits;
}

std::size_t CorrelationProfile::pair_row(std::int64_t k, std::int64_t l) const {
    const std::int64_t m = params.e;
    if (k < 0 || k >= m || l < 0 || l >= m || k == l)
        throw std::out_of_range("CorrelationProfile: bad ordered pair");
    // Row-major over ordered pairs with the diagonal removed.
    return static_cast<std::size_t>(k * (m - 1) + l - (l > k ? 1 : 0));
}

const std::vector<std::int64_t>& CorrelationProfile::cross(std::int64_t k, std::int64_t l) const {
    return cross_rows[pair_row(k, l)];
}

namespace {

// One full correlation row (all shifts of y against x), by symbol-bucketed
// difference counting: every coincidence x[a] == y[b] contributes one hit at
// shift (b - a) mod L.
std::vector<std::int64_t> correlation_row(std::int64_t L, std::int64_t e,
                                          const std::vector<std::vector<std::int32_t>>& x_pos,
                                          const std::vector<std::vector<std::int32_t>>& y_pos) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(L), 0);
    for (std::int64_t f = 0; f < e; ++f) {
        const auto& xs = x_pos[static_cast<std::size_t>(f)];
        const auto& ys = y_pos[static_cast<std::size_t>(f)];
        for (std::int32_t a : xs) {
            for (std::int32_t b : ys) {
                std::int64_t diff = b - a;
                if (diff < 0) diff += L;
                ++row[static_cast<std::size_t>(diff)];
            }
        }
    }
    return row;
}

}  // namespace

CorrelationProfile correlation_profile(const FHSequenceSet& set, unsigned threads) {
    const Params& prm = set.params;
    const std::int64_t m = prm.e;
    const std::int64_t L = prm.L;
    if (static_cast<std::int64_t>(set.sequences.size()) != m)
        throw std::invalid_argument("correlation_profile: sequence count does not match e");

    // Symbol position buckets per sequence, shared by all rows.
    std::vector<std::vector<std::vector<std::int32_t>>> positions(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) {
        auto& buckets = positions[static_cast<std::size_t>(i)];
        buckets.resize(static_cast<std::size_t>(m));
        const auto& seq = set.sequences[static_cast<std::size_t>(i)];
        if (static_cast<std::int64_t>(seq.size()) != L)
            throw std::invalid_argument("correlation_profile: sequence length does not match L");
        for (std::int64_t t = 0; t < L; ++t) {
            std::int32_t sym = seq[static_cast<std::size_t>(t)];
            if (sym < 0 || sym >= m)
                throw std::invalid_argument("correlation_profile: symbol outside [0, e)");
            buckets[static_cast<std::size_t>(sym)].push_back(static_cast<std::int32_t>(t));
        }
    }

    CorrelationProfile profile;
    profile.params = prm;
    profile.auto_rows.resize(static_cast<std::size_t>(m));
    profile.cross_rows.resize(static_cast<std::size_t>(m * (m - 1)));

    // Work items: auto rows first, then ordered pairs in pair_row order.
    struct Task {
        std::int64_t k, l;  // l == k means an autocorrelation row
    };
    std::vector<Task> tasks;
    tasks.reserve(static_cast<std::size_t>(m * m));
    for (std::int64_t k = 0; k < m; ++k) tasks.push_back({k, k});
    for (std::int64_t k = 0; k < m; ++k)
        for (std::int64_t l = 0; l < m; ++l)
            if (k != l) tasks.push_back({k, l});

    auto run_task = [&](const Task& task) {
        auto row = correlation_row(L, m, positions[static_cast<std::size_t>(task.k)],
                                   positions[static_cast<std::size_t>(task.l)]);
        if (task.k == task.l)
            profile.auto_rows[static_cast<std::size_t>(task.k)] = std::move(row);
        else
            profile.cross_rows[profile.pair_row(task.k, task.l)] = std::move(row);
    };

    unsigned worker_count = threads == 0 ? std::thread::hardware_concurrency() : threads;
    worker_count = std::max(1u, std::min<unsigned>(worker_count, static_cast<unsigned>(tasks.size())));
    if (worker_count == 1) {
        for (const auto& task : tasks) run_task(task);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        for (unsigned w = 0; w < worker_count; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t idx = w; idx < tasks.size(); idx += worker_count)
                    run_task(tasks[idx]);
            });
        }
        for (auto& th : pool) th.join();
    }

    for (std::int64_t k = 0; k < m; ++k) {
        const auto& row = profile.auto_rows[static_cast<std::size_t>(k)];
        if (row[0] != L) throw std::logic_error("correlation_profile: zero-shift peak != L");
        for (std::int64_t shift = 1; shift < L; ++shift) {
            std::int64_t v = row[static_cast<std::size_t>(shift)];
            profile.total_auto += v;
            profile.max_auto_sidelobe = std::max(profile.max_auto_sidelobe, v);
        }
    }
    std::int64_t cross_sum = 0;
    for (const auto& row : profile.cross_rows) {
        for (std::int64_t v : row) {
            cross_sum += v;
            profile.max_cross = std::max(profile.max_cross, v);
        }
    }
    if (cross_sum % 2 != 0)
        throw std::logic_error("correlation_profile: ordered-pair total is odd");
    profile.total_cross = cross_sum / 2;

    profile.average_auto = Rational(profile.total_auto, static_cast<Int128>(m) * (L - 1));
    profile.average_cross =
        Rational(cross_sum, static_cast<Int128>(L) * m * (m - 1));
    return profile;
}

std::int64_t lempel_greenberger_bound(std::int64_t length, std::int64_t library_size) {
    if (length < 2 || library_size < 1)
        throw std::invalid_argument("lempel_greenberger_bound: need L >= 2, v >= 1");
    const std::int64_t b = length % library_size;
    const std::int64_t num = (length - b) * (length + b - library_size);
    const std::int64_t den = library_size * (length - 1);
    return (num + den - 1) / den;  // ceil; num >= 0 here
}

PengFanCheck peng_fan_check(std::int64_t length, std::int64_t family_size,
                            std::int64_t library_size, std::int64_t max_auto,
                            std::int64_t max_cross) {
    if (length < 1 || family_size < 1 || library_size < 1 || max_auto < 0 || max_cross < 0)
        throw std::invalid_argument("peng_fan_check: arguments must be positive");

    const Int128 auto_coeff = static_cast<Int128>(length - 1) * library_size;
    const Int128 cross_coeff = static_cast<Int128>(family_size - 1) * length * library_size;
    const Int128 rhs128 =
        (static_cast<Int128>(length) * family_size - library_size) * length;
    auto holds = [&](std::int64_t ha, std::int64_t hc) {
        return auto_coeff * ha + cross_coeff * hc >= rhs128;
    };

    const Int128 lhs128 = auto_coeff * max_auto + cross_coeff * max_cross;
    constexpr Int128 kInt64Max = std::numeric_limits<std::int64_t>::max();
    if (lhs128 > kInt64Max || rhs128 > kInt64Max)
        throw std::overflow_error("peng_fan_check: bound terms exceed 64-bit range");

    PengFanCheck check;
    check.lhs = static_cast<std::int64_t>(lhs128);
    check.rhs = static_cast<std::int64_t>(rhs128);
    check.satisfied = holds(max_auto, max_cross);
    check.floor_lm_over_v = length * family_size / library_size;

    // Pareto frontier inside [0, max_auto] x [0, max_cross]. The inequality
    // is monotone in both arguments, so for each Ha the smallest feasible Hc
    // is a ceiling division, and the frontier is where it strictly drops.
    std::int64_t prev_hc = -1;
    for (std::int64_t ha = 0; ha <= max_auto; ++ha) {
        Int128 rem = rhs128 - auto_coeff * ha;
        std::int64_t hc_min = 0;
        if (rem > 0) {
            Int128 q = (rem + cross_coeff - 1) / cross_coeff;
            hc_min = static_cast<std::int64_t>(q);
        }
        if (hc_min > max_cross) continue;
        if (prev_hc == -1 || hc_min < prev_hc) {
            check.pareto_minimal_pairs.emplace_back(ha, hc_min);
            prev_hc = hc_min;
        }
        if (hc_min == 0) break;
    }
    check.minimal_pair =
        std::find(check.pareto_minimal_pairs.begin(), check.pareto_minimal_pairs.end(),
                  std::make_pair(max_auto, max_cross)) != check.pareto_minimal_pairs.end();
    return check;
}

AverageBoundCheck average_bound_check(std::int64_t length, std::int64_t family_size,
                                      std::int64_t library_size, const Rational& average_auto,
                                      const Rational& average_cross) {
    if (length < 2 || family_size < 2 || library_size < 1)
        throw std::invalid_argument("average_bound_check: need L >= 2, M >= 2, v >= 1");
    AverageBoundCheck check;
    check.lhs = average_auto / Rational(static_cast<Int128>(length) * (family_size - 1), 1) +
                average_cross / Rational(length - 1);
    check.rhs = Rational(static_cast<Int128>(length) * family_size - library_size,
                         static_cast<Int128>(library_size) * (length - 1) * (family_size - 1));
    check.met_with_equality = check.lhs == check.rhs;
    return check;
}

BoundsReport bounds_report(const CorrelationProfile& profile) {
    const Params& prm = profile.params;
    BoundsReport report;
    const std::int64_t bound = lempel_greenberger_bound(prm.L, prm.e);
    for (std::int64_t k = 0; k < prm.e; ++k) {
        const auto& row = profile.auto_rows[static_cast<std::size_t>(k)];
        std::int64_t achieved = 0;
        for (std::int64_t shift = 1; shift < prm.L; ++shift)
            achieved = std::max(achieved, row[static_cast<std::size_t>(shift)]);
        report.lempel_greenberger.push_back({k, bound, achieved, achieved == bound});
    }
    report.peng_fan =
        peng_fan_check(prm.L, prm.e, prm.e, profile.max_auto_sidelobe, profile.max_cross);
    report.average_bound =
        average_bound_check(prm.L, prm.e, prm.e, profile.average_auto, profile.average_cross);
    return report;
}

}  // namespace fhseq
