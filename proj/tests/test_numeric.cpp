#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oslo/numeric.hpp"

using oslo::BigInt;

TEST_CASE("factorial and ipow basics") {
    CHECK(oslo::factorial(0) == 1);
    CHECK(oslo::factorial(5) == 120);
    CHECK(oslo::factorial(20) == BigInt("2432902008176640000"));
    CHECK(oslo::ipow(BigInt(3), 5) == 243);
    CHECK(oslo::ipow(BigInt(10), 30) == BigInt("1000000000000000000000000000000"));
    CHECK(oslo::ipow(BigInt(7), 0) == 1);
}

TEST_CASE("u64 isqrt is the exact floor") {
    CHECK(oslo::isqrt(std::uint64_t{0}) == 0);
    CHECK(oslo::isqrt(std::uint64_t{1}) == 1);
    CHECK(oslo::isqrt(std::uint64_t{3}) == 1);
    CHECK(oslo::isqrt(std::uint64_t{4}) == 2);
    CHECK(oslo::isqrt(UINT64_MAX) == 4294967295u);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 20000; ++i) {
        std::uint64_t n = rng();
        std::uint64_t r = oslo::isqrt(n);
        auto rr = static_cast<unsigned __int128>(r);
        CHECK(rr * r <= n);
        CHECK((rr + 1) * (r + 1) > n);
    }
}

TEST_CASE("u128 isqrt handles values above 2^64") {
    unsigned __int128 big = (static_cast<unsigned __int128>(1) << 100) + 12345;
    auto r = oslo::isqrt(big);
    CHECK(r * r <= big);
    CHECK((r + 1) * (r + 1) > big);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 5000; ++i) {
        unsigned __int128 n =
            (static_cast<unsigned __int128>(rng()) << 64) | rng();
        auto s = oslo::isqrt(n);
        CHECK(s * s <= n);
        CHECK((s + 1) * (s + 1) > n);
    }
}

TEST_CASE("iroot recovers exact powers and rejects near misses") {
    std::mt19937_64 rng(3);
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 19u}) {
        for (int i = 0; i < 200; ++i) {
            BigInt y = static_cast<std::uint64_t>(rng() % 1000000) + 2;
            BigInt v = oslo::ipow(y, p);
            CHECK(oslo::iroot(v, p) == y);
            CHECK(oslo::iroot(v - 1, p) == y - 1);
            CHECK(oslo::iroot(v + 1, p) == y);  // floor root, not exact
            CHECK(oslo::ipow(oslo::iroot(v + 1, p), p) != v + 1);
        }
    }
    CHECK(oslo::iroot(BigInt(0), 3) == 0);
    CHECK(oslo::iroot(BigInt(1), 9) == 1);
    CHECK_THROWS_AS(oslo::iroot(BigInt(-1), 2), std::domain_error);
    CHECK_THROWS_AS(oslo::iroot(BigInt(5), 0), std::domain_error);
}

TEST_CASE("trial-division primality") {
    CHECK_FALSE(oslo::is_prime(0));
    CHECK_FALSE(oslo::is_prime(1));
    CHECK(oslo::is_prime(2));
    CHECK(oslo::is_prime(3));
    CHECK_FALSE(oslo::is_prime(561));  // Carmichael
    CHECK(oslo::is_prime(1999));
    CHECK(oslo::is_prime(999983));
    CHECK_FALSE(oslo::is_prime(1000036000099ull));  // 1000003 * 1000033
}

TEST_CASE("sieve agrees with trial division") {
    auto primes = oslo::sieve_primes(2000);
    CHECK(primes.front() == 2);
    CHECK(primes.size() == 303);
    for (auto p : primes) CHECK(oslo::is_prime(p));
    std::size_t idx = 0;
    for (std::uint32_t v = 0; v <= 2000; ++v) {
        bool in_sieve = idx < primes.size() && primes[idx] == v;
        CHECK(in_sieve == oslo::is_prime(v));
        if (in_sieve) ++idx;
    }
}

TEST_CASE("binomial") {
    CHECK(oslo::binomial(14, 7) == 3432);
    CHECK(oslo::binomial(10, 5) == 252);
    CHECK(oslo::binomial(4, 5) == 0);
    CHECK(oslo::binomial(0, 0) == 1);
}
