#include "doctest.h"

#include <stdexcept>

#include <cstdint>
#include <random>

#include "fhseq/modmath.hpp"

using namespace fhseq;

namespace {

// Independent oracle: order of g mod p by walking the full orbit.
bool primitive_root_by_orbit(std::int64_t g, std::int64_t p) {
    std::int64_t v = g % p;
    std::int64_t steps = 1;
    while (v != 1) {
        v = v * (g % p) % p;
        ++steps;
    }
    return steps == p - 1;
}

bool prime_by_trial_division(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("is_prime basics") {
    CHECK(is_prime(17));
    CHECK_FALSE(is_prime(85));  // 5 * 17
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(2));
    CHECK(is_prime(104729));
    CHECK_FALSE(is_prime(std::int64_t{104729} * 104723));
}

TEST_CASE("is_prime agrees with trial division below 100000") {
    for (std::int64_t n = 1; n < 100000; ++n)
        REQUIRE(is_prime(n) == prime_by_trial_division(n));
}

TEST_CASE("factorize") {
    auto f16 = factorize(16);
    REQUIRE(f16.factors.size() == 1);
    CHECK(f16.factors[0] == std::pair<std::int64_t, int>{2, 4});

    auto f84 = factorize(84);
    REQUIRE(f84.factors.size() == 3);
    CHECK(f84.factors[0] == std::pair<std::int64_t, int>{2, 2});
    CHECK(f84.factors[1] == std::pair<std::int64_t, int>{3, 1});
    CHECK(f84.factors[2] == std::pair<std::int64_t, int>{7, 1});

    auto f17 = factorize(17);
    REQUIRE(f17.factors.size() == 1);
    CHECK(f17.factors[0] == std::pair<std::int64_t, int>{17, 1});

    CHECK_THROWS_AS(factorize(1), std::invalid_argument);
}

TEST_CASE("factorize reconstructs its input with prime factors") {
    for (std::int64_t n = 2; n <= 5000; ++n) {
        auto f = factorize(n);
        std::int64_t product = 1;
        std::int64_t prev = 1;
        for (const auto& [prime, exp] : f.factors) {
            CHECK(is_prime(prime));
            CHECK(prime > prev);
            prev = prime;
            for (int i = 0; i < exp; ++i) product *= prime;
        }
        REQUIRE(product == n);
    }
}

TEST_CASE("pow_mod basics") {
    CHECK(pow_mod(3, 0, 85) == 1);
    CHECK(pow_mod(3, 4, 85) == 81);
    CHECK(pow_mod(18, 2, 85) == 69);
    CHECK_THROWS_AS(pow_mod(3, 4, 1), std::invalid_argument);
    // near the top of the supported modulus range
    const std::int64_t m = (std::int64_t{1} << 31) - 1;
    CHECK(pow_mod(2, 31, m) == 1);  // 2^31 = m + 1
}

TEST_CASE("pow_mod agrees with repeated multiplication") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::int64_t> base(0, 999), mod(2, 999), exp(0, 49);
    for (int trial = 0; trial < 2000; ++trial) {
        std::int64_t a = base(rng), m = mod(rng), s = exp(rng);
        std::int64_t expected = 1 % m;
        for (std::int64_t i = 0; i < s; ++i) expected = expected * (a % m) % m;
        REQUIRE(pow_mod(a, s, m) == expected);
    }
}

TEST_CASE("is_primitive_root basics") {
    CHECK(is_primitive_root(3, 5));
    CHECK_FALSE(is_primitive_root(4, 5));  // 4^2 = 16 = 1 (mod 5)
    CHECK(is_primitive_root(3, 17));
    CHECK_THROWS_AS(is_primitive_root(5, 5), std::invalid_argument);   // g = 0 mod p
    CHECK_THROWS_AS(is_primitive_root(3, 15), std::invalid_argument);  // not prime
}

TEST_CASE("is_primitive_root agrees with the orbit oracle for p < 200") {
    for (std::int64_t p = 3; p < 200; ++p) {
        if (!is_prime(p)) continue;
        for (std::int64_t g = 1; g < p; ++g)
            REQUIRE(is_primitive_root(g, p) == primitive_root_by_orbit(g, p));
    }
}

TEST_CASE("find_common_primitive_root picks the smallest") {
    CHECK(find_common_primitive_root(5, 17) == 3);  // 2 fails mod 17
    CHECK(find_common_primitive_root(3, 5) == 2);
    CHECK(find_common_primitive_root(5, 13) == 2);
    CHECK(find_common_primitive_root(7, 13) == 19);
    CHECK_THROWS_AS(find_common_primitive_root(5, 5), std::invalid_argument);
}

TEST_CASE("crt_solve_x basics") {
    CHECK(crt_solve_x(3, 5, 17) == 18);
    CHECK(crt_solve_x(1, 3, 5) == 1);
    CHECK(crt_solve_x(2, 3, 5) == 11);
}

TEST_CASE("crt_solve_x satisfies both congruences") {
    const std::int64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23};
    for (std::int64_t p : primes)
        for (std::int64_t q : primes) {
            if (p == q) continue;
            for (std::int64_t g = 1; g < p * q; g += 7) {
                std::int64_t x = crt_solve_x(g, p, q);
                REQUIRE(x >= 0);
                REQUIRE(x < p * q);
                REQUIRE(x % p == g % p);
                REQUIRE(x % q == 1);
            }
        }
}
