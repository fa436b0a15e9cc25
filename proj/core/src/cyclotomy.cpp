#include "fhseq/cyclotomy.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace fhseq {

namespace {

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;
constexpr std::int64_t kMaxIndexedLength = 100'000'000;

bool is_unit_code(std::int32_t code) { return code >= 0; }

}  // namespace

Params build_params(std::int64_t p, std::int64_t q, std::optional<std::int64_t> g_override) {
    if (p == q) throw std::invalid_argument("build_params: p and q must be distinct");
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("build_params: p is not an odd prime");
    if (q < 3 || !is_prime(q)) throw std::invalid_argument("build_params: q is not an odd prime");
    if (p > kMaxModulus / q)
        throw std::length_error("build_params: L = p*q exceeds the supported 2^31 limit");

    Params params;
    params.p = p;
    params.q = q;
    params.L = p * q;
    params.e = std::gcd(p - 1, q - 1);
    params.d = (p - 1) / params.e * (q - 1);
    params.f1 = (p - 1) / params.e;
    params.f2 = (q - 1) / params.e;

    if (g_override) {
        std::int64_t g = *g_override;
        if (g < 2 || g >= params.L)
            throw std::invalid_argument("build_params: g override out of range [2, L)");
        if (g % p == 0 || g % q == 0 || !is_primitive_root(g, p) || !is_primitive_root(g, q))
            throw std::invalid_argument("build_params: g override is not a common primitive root");
        params.g = g;
    } else {
        params.g = find_common_primitive_root(p, q);
    }
    params.x = crt_solve_x(params.g % params.L, p, q);
    return params;
}

CyclotomicTables build_tables(const Params& params) {
    const std::int64_t L = params.L;
    const std::int64_t e = params.e;
    const std::int64_t d = params.d;
    if (L < 15 || e < 2 || e % 2 != 0 || d < 1 || params.g < 2 || params.x < 1 ||
        L != params.p * params.q)
        throw std::invalid_argument("build_tables: malformed Params");
    if (L > kMaxIndexedLength)
        throw std::length_error("build_tables: dense cell index gated to L <= 1e8");

    CyclotomicTables t;
    t.params = params;
    t.cell_index.assign(static_cast<std::size_t>(L), kCellR - 1);  // sentinel: unassigned

    t.classes.resize(static_cast<std::size_t>(e));
    std::int64_t x_power = 1;  // x^i mod L
    for (std::int64_t i = 0; i < e; ++i) {
        auto& cls = t.classes[static_cast<std::size_t>(i)];
        cls.reserve(static_cast<std::size_t>(d));
        std::int64_t v = x_power;  // g^s x^i, s = 0..d-1
        for (std::int64_t s = 0; s < d; ++s) {
            cls.push_back(v);
            auto& slot = t.cell_index[static_cast<std::size_t>(v)];
            if (slot != kCellR - 1)
                throw std::logic_error("build_tables: duplicate element across classes");
            slot = static_cast<std::int32_t>(i);
            v = v * params.g % L;
        }
        x_power = x_power * params.x % L;
    }

    t.p_multiples.reserve(static_cast<std::size_t>(params.q - 1));
    for (std::int64_t k = 1; k < params.q; ++k) {
        std::int64_t v = k * params.p;
        t.p_multiples.push_back(v);
        auto& slot = t.cell_index[static_cast<std::size_t>(v)];
        if (slot != kCellR - 1) throw std::logic_error("build_tables: P overlaps a unit class");
        slot = kCellP;
    }
    t.q_multiples.reserve(static_cast<std::size_t>(params.p - 1));
    for (std::int64_t k = 1; k < params.p; ++k) {
        std::int64_t v = k * params.q;
        t.q_multiples.push_back(v);
        auto& slot = t.cell_index[static_cast<std::size_t>(v)];
        if (slot != kCellR - 1) throw std::logic_error("build_tables: Q overlaps another cell");
        slot = kCellQ;
    }
    t.zero = {0};
    if (t.cell_index[0] != kCellR - 1) throw std::logic_error("build_tables: 0 claimed by a cell");
    t.cell_index[0] = kCellR;

    for (std::int32_t code : t.cell_index)
        if (code == kCellR - 1)
            throw std::logic_error("build_tables: classes and P, Q, R do not cover Z_L");
    return t;
}

CellId cell_of(const CyclotomicTables& tables, std::int64_t w) {
    if (w < 0 || w >= tables.params.L)
        throw std::out_of_range("cell_of: residue outside [0, L)");
    std::int32_t code = tables.cell_index[static_cast<std::size_t>(w)];
    switch (code) {
        case kCellP: return {CellId::Kind::InP, 0};
        case kCellQ: return {CellId::Kind::InQ, 0};
        case kCellR: return {CellId::Kind::InR, 0};
        default: return {CellId::Kind::ClassD, code};
    }
}

std::int64_t cyclotomic_number(const CyclotomicTables& tables, std::int64_t i, std::int64_t j) {
    const std::int64_t e = tables.params.e;
    if (i < 0 || i >= e || j < 0 || j >= e)
        throw std::out_of_range("cyclotomic_number: class index outside [0, e)");
    const std::int64_t L = tables.params.L;
    std::int64_t count = 0;
    for (std::int64_t v : tables.classes[static_cast<std::size_t>(i)]) {
        std::int64_t succ = v + 1 == L ? 0 : v + 1;
        if (tables.cell_index[static_cast<std::size_t>(succ)] == j) ++count;
    }
    return count;
}

namespace {

// Shared state for the lemma enumeration below.
struct LemmaScan {
    const CyclotomicTables& t;
    LemmaReport report;
    LemmaCheck* current = nullptr;

    explicit LemmaScan(const CyclotomicTables& tables) : t(tables) {}

    void begin(std::string name) {
        report.checks.push_back(LemmaCheck{std::move(name), 0, true, std::nullopt});
        current = &report.checks.back();
    }

    void expect(std::int64_t w, std::int64_t i, std::int64_t expected, std::int64_t actual) {
        ++current->cases_checked;
        if (expected != actual && current->passed) {
            current->passed = false;
            current->first_counterexample = LemmaCounterexample{w, i, expected, actual};
        }
    }

    std::int32_t code(std::int64_t w) const {
        return t.cell_index[static_cast<std::size_t>(w)];
    }

    std::int64_t shifted(std::int64_t v, std::int64_t w) const {
        std::int64_t s = v + w;
        return s >= t.params.L ? s - t.params.L : s;
    }

    // |(D_i + w) n {cells selected by pred}|
    template <typename Pred>
    std::int64_t class_shift_count(std::int64_t i, std::int64_t w, Pred pred) const {
        std::int64_t n = 0;
        for (std::int64_t v : t.classes[static_cast<std::size_t>(i)])
            if (pred(code(shifted(v, w)))) ++n;
        return n;
    }

    // |(S + w) n {cells selected by pred}| for an explicit element list S.
    template <typename Pred>
    std::int64_t set_shift_count(const std::vector<std::int64_t>& set, std::int64_t w,
                                 Pred pred) const {
        std::int64_t n = 0;
        for (std::int64_t v : set)
            if (pred(code(shifted(v, w)))) ++n;
        return n;
    }
};

}  // namespace

LemmaReport verify_structure_lemmas(const CyclotomicTables& tables) {
    const Params& prm = tables.params;
    const std::int64_t e = prm.e;
    const std::int64_t L = prm.L;
    const std::int64_t half = e / 2;
    const bool odd_parity = prm.parity_odd();
    // ((p-2)(q-2)-1) is always divisible by e; this is the recurring row-sum base.
    const std::int64_t base = ((prm.p - 2) * (prm.q - 2) - 1) / e;

    LemmaScan scan(tables);

    std::vector<std::vector<std::int64_t>> cyc(static_cast<std::size_t>(e),
                                               std::vector<std::int64_t>(static_cast<std::size_t>(e)));
    for (std::int64_t i = 0; i < e; ++i)
        for (std::int64_t j = 0; j < e; ++j)
            cyc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                cyclotomic_number(tables, i, j);
    auto cyc_at = [&](std::int64_t i, std::int64_t j) {
        return cyc[static_cast<std::size_t>(((i % e) + e) % e)][static_cast<std::size_t>(((j % e) + e) % e)];
    };

    // (i, j) = (e - i, j - i). Counterexample field w carries j.
    scan.begin("cyclotomic-number symmetry (i,j) = (e-i, j-i)");
    for (std::int64_t i = 0; i < e; ++i)
        for (std::int64_t j = 0; j < e; ++j)
            scan.expect(j, i, cyc_at(e - i, j - i), cyc_at(i, j));

    scan.begin("cyclotomic-number column sums");
    for (std::int64_t j = 0; j < e; ++j) {
        std::int64_t sum = 0;
        for (std::int64_t i = 0; i < e; ++i) sum += cyc_at(i, j);
        scan.expect(j, 0, base + (j == 0 ? 1 : 0), sum);
    }

    scan.begin("shifted diagonal sums sum_i (k+i, i)");
    for (std::int64_t k = 0; k < e; ++k) {
        std::int64_t sum = 0;
        for (std::int64_t i = 0; i < e; ++i) sum += cyc_at(k + i, i);
        scan.expect(k, 0, base + (k == 0 ? 1 : 0), sum);
    }

    auto in_p = [](std::int32_t c) { return c == kCellP; };
    auto in_qr = [](std::int32_t c) { return c == kCellQ || c == kCellR; };
    auto in_pr = [](std::int32_t c) { return c == kCellP || c == kCellR; };
    auto in_r = [](std::int32_t c) { return c == kCellR; };

    // sum_i |(D_i + w) n D_i| over all w != 0.
    scan.begin("fixed-class shift sums sum_i |(D_i+w) n D_i|");
    for (std::int64_t w = 1; w < L; ++w) {
        std::int64_t sum = 0;
        for (std::int64_t i = 0; i < e; ++i)
            sum += scan.class_shift_count(i, w, [&](std::int32_t c) { return c == i; });
        std::int32_t wc = scan.code(w);
        std::int64_t expected = wc == kCellP   ? e * prm.f1 * (prm.f2 - 1)
                                : wc == kCellQ ? e * prm.f2 * (prm.f1 - 1)
                                               : base + 1;
        scan.expect(w, 0, expected, sum);
    }

    // sum_i |(D_{i+k} + w) n D_i| for every k != 0 and every w != 0.
    scan.begin("offset-class shift sums sum_i |(D_{i+k}+w) n D_i|");
    for (std::int64_t k = 1; k < e; ++k) {
        for (std::int64_t w = 1; w < L; ++w) {
            std::int64_t sum = 0;
            for (std::int64_t i = 0; i < e; ++i)
                sum += scan.class_shift_count((i + k) % e, w,
                                              [&](std::int32_t c) { return c == i; });
            std::int32_t wc = scan.code(w);
            std::int64_t expected = (wc == kCellP || wc == kCellQ) ? e * prm.f1 * prm.f2 : base;
            scan.expect(w, k, expected, sum);
        }
    }

    std::vector<std::int64_t> q_and_r = tables.q_multiples;
    q_and_r.push_back(0);

    scan.begin("|((QuR)+w) n (QuR)|");
    for (std::int64_t w = 0; w < L; ++w) {
        std::int64_t actual = scan.set_shift_count(q_and_r, w, in_qr);
        std::int32_t wc = scan.code(w);
        scan.expect(w, 0, in_qr(wc) ? prm.p : 0, actual);
    }

    scan.begin("|(P+w) n P|");
    for (std::int64_t w = 0; w < L; ++w) {
        std::int64_t actual = scan.set_shift_count(tables.p_multiples, w, in_p);
        std::int32_t wc = scan.code(w);
        std::int64_t expected = wc == kCellP ? prm.q - 2 : (w == 0 ? prm.q - 1 : 0);
        scan.expect(w, 0, expected, actual);
    }

    scan.begin("|(D_i+w) n (QuR)|");
    for (std::int64_t i = 0; i < e; ++i)
        for (std::int64_t w = 0; w < L; ++w) {
            std::int64_t actual = scan.class_shift_count(i, w, in_qr);
            scan.expect(w, i, in_qr(scan.code(w)) ? 0 : prm.f1, actual);
        }

    scan.begin("|(D_i+w) n (PuR)|");
    for (std::int64_t i = 0; i < e; ++i)
        for (std::int64_t w = 0; w < L; ++w) {
            std::int64_t actual = scan.class_shift_count(i, w, in_pr);
            scan.expect(w, i, in_pr(scan.code(w)) ? 0 : prm.f2, actual);
        }

    // -1 lies in D_0 when |f1 - f2| is even, in D_{e/2} when odd.
    scan.begin("class of -1");
    scan.expect(L - 1, 0, odd_parity ? half : 0, scan.code(L - 1));

    scan.begin("|(D_i+w) n P|");
    for (std::int64_t i = 0; i < e; ++i) {
        const std::int64_t dip = odd_parity ? (i + half) % e : i;  // the depleted class
        for (std::int64_t w = 0; w < L; ++w) {
            std::int64_t actual = scan.class_shift_count(i, w, in_p);
            std::int32_t wc = scan.code(w);
            std::int64_t expected;
            if (in_pr(wc)) expected = 0;
            else if (wc == kCellQ) expected = prm.f2;
            else expected = (wc == dip) ? prm.f2 - 1 : prm.f2;
            scan.expect(w, i, expected, actual);
        }
    }

    scan.begin("|(D_i+w) n R|");
    for (std::int64_t i = 0; i < e; ++i) {
        const std::int64_t dip = odd_parity ? (i + half) % e : i;
        for (std::int64_t w = 0; w < L; ++w) {
            std::int64_t actual = scan.class_shift_count(i, w, in_r);
            std::int32_t wc = scan.code(w);
            std::int64_t expected = is_unit_code(wc) && wc == dip ? 1 : 0;
            scan.expect(w, i, expected, actual);
        }
    }

    scan.begin("|(P+w) n D_i|");
    for (std::int64_t i = 0; i < e; ++i)
        for (std::int64_t w = 0; w < L; ++w) {
            std::int64_t actual =
                scan.set_shift_count(tables.p_multiples, w, [&](std::int32_t c) { return c == i; });
            std::int32_t wc = scan.code(w);
            std::int64_t expected;
            if (in_pr(wc)) expected = 0;
            else if (wc == kCellQ) expected = prm.f2;
            else expected = (wc == i) ? prm.f2 - 1 : prm.f2;
            scan.expect(w, i, expected, actual);
        }

    // Stated for w in Q and w in P u Z_L* only; w = 0 is not covered.
    scan.begin("|(P+w) n (QuR)|");
    for (std::int64_t w = 1; w < L; ++w) {
        std::int32_t wc = scan.code(w);
        std::int64_t actual = scan.set_shift_count(tables.p_multiples, w, in_qr);
        scan.expect(w, 0, wc == kCellQ ? 0 : 1, actual);
    }

    return std::move(scan.report);
}

}  // namespace fhseq
