#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace fhseq {

/// A positive integer together with its complete prime factorization.
/// Primes are strictly increasing; value == product of prime^exponent.
struct FactoredInteger {
    std::int64_t value = 1;
    std::vector<std::pair<std::int64_t, int>> factors;
};

/// Deterministic primality test (Miller-Rabin with a base set that is
/// exact for the full 64-bit range). n >= 1; returns false for n = 1.
bool is_prime(std::int64_t n);

/// Complete factorization by trial division. Throws std::invalid_argument
/// for n < 2.
FactoredInteger factorize(std::int64_t n);

/// a^s mod m by square-and-multiply. m >= 2, s >= 0; a is reduced first.
std::int64_t pow_mod(std::int64_t a, std::int64_t s, std::int64_t m);

/// True iff g generates the multiplicative group modulo `prime`, i.e. the
/// order of g is prime-1. Checked via g^((prime-1)/r) != 1 for every prime
/// divisor r of prime-1. Throws if `prime` is not prime or g = 0 mod prime.
bool is_primitive_root(std::int64_t g, std::int64_t prime);

/// Smallest g >= 2 that is a primitive root modulo both p and q.
/// p and q must be distinct odd primes; existence is then guaranteed.
std::int64_t find_common_primitive_root(std::int64_t p, std::int64_t q);

/// Unique x in [0, pq) with x = g (mod p) and x = 1 (mod q),
/// for distinct odd primes p, q and 1 <= g < pq.
std::int64_t crt_solve_x(std::int64_t g, std::int64_t p, std::int64_t q);

}  // namespace fhseq
