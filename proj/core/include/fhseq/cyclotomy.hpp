#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fhseq/modmath.hpp"

namespace fhseq {

/// Construction parameters over Z_L with L = p*q for distinct odd primes.
/// All relations between the fields are enforced by build_params:
///   e = gcd(p-1, q-1) (even), d = (p-1)(q-1)/e, f1 = (p-1)/e, f2 = (q-1)/e,
///   g a common primitive root of p and q, x = g (mod p) and x = 1 (mod q).
struct Params {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t e = 0;
    std::int64_t d = 0;
    std::int64_t f1 = 0;
    std::int64_t f2 = 0;
    std::int64_t L = 0;
    std::int64_t g = 0;
    std::int64_t x = 0;

    /// Parity of |f1 - f2|; several correlation formulas branch on this.
    bool parity_odd() const { return ((f1 - f2) % 2) != 0; }

    friend bool operator==(const Params&, const Params&) = default;
};

/// Validates p, q and fills in the derived fields. When g_override is absent
/// the smallest common primitive root is chosen, so the construction is
/// reproducible byte-for-byte. L is capped at 2^31 so every intermediate
/// product fits in 64-bit arithmetic (std::length_error beyond that).
Params build_params(std::int64_t p, std::int64_t q,
                    std::optional<std::int64_t> g_override = std::nullopt);

/// Which cell of Z_L a residue falls in: one of the unit classes D_i, the
/// nonzero multiples of p (P), of q (Q), or zero (R).
struct CellId {
    enum class Kind : std::uint8_t { ClassD, InP, InQ, InR };
    Kind kind = Kind::InR;
    std::int32_t index = 0;  // class index in [0, e); meaningful only for ClassD

    friend bool operator==(const CellId&, const CellId&) = default;
};

// Dense cell codes: a value >= 0 is a class index, negatives are P/Q/R.
inline constexpr std::int32_t kCellP = -1;
inline constexpr std::int32_t kCellQ = -2;
inline constexpr std::int32_t kCellR = -3;

/// The generalized cyclotomic decomposition of Z_L: classes D_i = {g^s x^i},
/// the multiple sets P, Q, R = {0}, and a dense residue -> cell lookup.
/// Immutable after construction; all queries are read-only.
struct CyclotomicTables {
    Params params;
    std::vector<std::vector<std::int64_t>> classes;  // D_0 .. D_{e-1}, each of size d
    std::vector<std::int64_t> p_multiples;           // P = {p, 2p, ..., (q-1)p}
    std::vector<std::int64_t> q_multiples;           // Q = {q, 2q, ..., (p-1)q}
    std::vector<std::int64_t> zero;                  // R = {0}
    std::vector<std::int32_t> cell_index;            // length L, cell codes as above
};

/// Generates the classes and verifies that D_0..D_{e-1}, P, Q, R partition
/// Z_L (a failure signals a Params bug and throws std::logic_error).
/// The dense index is gated to L <= 10^8 (std::length_error).
CyclotomicTables build_tables(const Params& params);

/// O(1) cell lookup. Throws std::out_of_range unless 0 <= w < L.
CellId cell_of(const CyclotomicTables& tables, std::int64_t w);

/// Generalized cyclotomic number (i, j) = |(D_i + 1) n D_j|, computed by
/// enumeration of D_i against the dense index.
std::int64_t cyclotomic_number(const CyclotomicTables& tables, std::int64_t i, std::int64_t j);

struct LemmaCounterexample {
    std::int64_t w = 0;
    std::int64_t i = 0;
    std::int64_t expected = 0;
    std::int64_t actual = 0;
};

struct LemmaCheck {
    std::string lemma;
    std::int64_t cases_checked = 0;
    bool passed = true;
    std::optional<LemmaCounterexample> first_counterexample;
};

struct LemmaReport {
    std::vector<LemmaCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Checks every stated cardinality identity of the cyclotomic structure by
/// exhaustive enumeration: the cyclotomic-number symmetry and row sums, the
/// diagonal sums, the class/P/Q/R intersection counts (including the parity
/// branches and the intermediate |(D_i + w) n R| table), and the class
/// membership of -1. Failures are report entries, never exceptions. Cost is
/// O(L * phi(L)); intended for moderate L.
LemmaReport verify_structure_lemmas(const CyclotomicTables& tables);

}  // namespace fhseq
