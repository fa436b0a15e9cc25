#include "fhseq/modmath.hpp"

#include <stdexcept>

namespace fhseq {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod_u64(std::uint64_t a, std::uint64_t s, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (s > 0) {
        if (s & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        s >>= 1;
    }
    return r;
}

// Miller-Rabin witness loop; n odd, n > 2.
bool witness_composite(std::uint64_t a, std::uint64_t n, std::uint64_t d, int r) {
    a %= n;
    if (a == 0) return false;
    std::uint64_t x = pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t s : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == s) return true;
        if (n % s == 0) return false;
    }
    std::uint64_t u = static_cast<std::uint64_t>(n);
    std::uint64_t d = u - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This base set decides primality exactly for all n < 2^64.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (witness_composite(a, u, d, r)) return false;
    }
    return true;
}

FactoredInteger factorize(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
    FactoredInteger out;
    out.value = n;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        if (n % p != 0) continue;
        int exp = 0;
        while (n % p == 0) {
            n /= p;
            ++exp;
        }
        out.factors.emplace_back(p, exp);
    }
    if (n > 1) out.factors.emplace_back(n, 1);
    return out;
}

std::int64_t pow_mod(std::int64_t a, std::int64_t s, std::int64_t m) {
    if (m < 2) throw std::invalid_argument("pow_mod: modulus must be >= 2");
    if (s < 0) throw std::invalid_argument("pow_mod: exponent must be >= 0");
    std::int64_t red = a % m;
    if (red < 0) red += m;
    return static_cast<std::int64_t>(pow_mod_u64(static_cast<std::uint64_t>(red),
                                                 static_cast<std::uint64_t>(s),
                                                 static_cast<std::uint64_t>(m)));
}

bool is_primitive_root(std::int64_t g, std::int64_t prime) {
    if (!is_prime(prime)) throw std::invalid_argument("is_primitive_root: modulus is not prime");
    std::int64_t red = g % prime;
    if (red < 0) red += prime;
    if (red == 0) throw std::invalid_argument("is_primitive_root: g is 0 mod prime");
    if (prime == 2) return true;
    for (const auto& [r, exp] : factorize(prime - 1).factors) {
        (void)exp;
        if (pow_mod(red, (prime - 1) / r, prime) == 1) return false;
    }
    return true;
}

std::int64_t find_common_primitive_root(std::int64_t p, std::int64_t q) {
    if (p == q) throw std::invalid_argument("find_common_primitive_root: p and q must differ");
    if (!is_prime(p) || !is_prime(q) || p < 3 || q < 3)
        throw std::invalid_argument("find_common_primitive_root: p and q must be odd primes");
    for (std::int64_t g = 2;; ++g) {
        if (g % p == 0 || g % q == 0) continue;
        if (is_primitive_root(g, p) && is_primitive_root(g, q)) return g;
    }
}

std::int64_t crt_solve_x(std::int64_t g, std::int64_t p, std::int64_t q) {
    if (p == q || p < 3 || q < 3 || !is_prime(p) || !is_prime(q))
        throw std::invalid_argument("crt_solve_x: p and q must be distinct odd primes");
    if (g < 1 || g >= p * q) throw std::invalid_argument("crt_solve_x: g out of range [1, pq)");
    // x = 1 + q*k with q*k = g-1 (mod p); q is invertible mod p.
    std::int64_t inv_q = pow_mod(q % p, p - 2, p);
    std::int64_t k = ((g - 1) % p) * inv_q % p;
    return 1 + q * k;
}

}  // namespace fhseq
