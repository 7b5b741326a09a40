#pragma once

// Exact integer helpers shared across the verification modules. Everything
// here either is exact by construction or verifies its result with a
// multiply before returning.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oslo {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt ipow(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

/// Floor square root with verification: r*r <= n < (r+1)*(r+1).
inline std::uint64_t isqrt(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    // double rounding can be off by one in either direction near 2^64
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline unsigned __int128 isqrt(unsigned __int128 n) {
    if (n <= UINT64_MAX) return isqrt(static_cast<std::uint64_t>(n));
    auto r = static_cast<unsigned __int128>(std::sqrt(static_cast<long double>(n)));
    // Newton until stable, then nudge to the exact floor
    for (int i = 0; i < 64 && r != 0; ++i) {
        unsigned __int128 next = (r + n / r) >> 1;
        if (next >= r) break;
        r = next;
    }
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r > n || (r + 1) * (r + 1) <= n) throw std::logic_error("isqrt verification failed");
    return r;
}

/// Floor k-th root by bisection, verified exactly.
inline BigInt iroot(const BigInt& n, unsigned k) {
    if (k == 0) throw std::domain_error("iroot with k = 0");
    if (n < 0) throw std::domain_error("iroot of negative value");
    if (n <= 1 || k == 1) return n;
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    BigInt lo = 1;
    BigInt hi = BigInt(1) << (bits / k + 1);
    while (lo < hi) {  // invariant: lo^k <= n < (hi+1)^k is restored at exit
        BigInt mid = (lo + hi + 1) >> 1;
        if (ipow(mid, k) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    if (ipow(lo, k) > n || ipow(lo + 1, k) <= n) throw std::logic_error("iroot verification failed");
    return lo;
}

/// Trial-division primality; intended for desk-scale inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint32_t> sieve_primes(std::uint32_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    return primes;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace oslo
