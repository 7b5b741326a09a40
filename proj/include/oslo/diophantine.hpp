#pragma once

// Exhaustive bounded search for a^p = b! + p with p prime, plus the
// supporting inequalities and divisibility facts used to rule out anything
// beyond (2,2,2) and (3,4,3). All arithmetic is arbitrary precision.

#include <cstdint>
#include <string>
#include <vector>

#include "oslo/numeric.hpp"

namespace oslo::diophantine {

struct Triple {
    BigInt a;
    unsigned b = 0;
    unsigned p = 0;

    bool operator==(const Triple&) const = default;
    bool operator<(const Triple& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return p < o.p;
    }
    std::string str() const {
        return "(" + a.str() + "," + std::to_string(b) + "," + std::to_string(p) + ")";
    }
};

inline bool is_solution(const BigInt& a, unsigned b, unsigned p) {
    if (a < 1 || b < 1 || !is_prime(p)) throw std::invalid_argument("need a,b >= 1 and p prime");
    return ipow(a, p) == factorial(b) + p;
}

/// Every solution with b <= b_max and p <= p_max. a is derived by exact
/// p-th-root extraction from b! + p rather than enumerated.
inline std::vector<Triple> search(unsigned b_max = 20, unsigned p_max = 19) {
    std::vector<Triple> out;
    for (std::uint32_t p : sieve_primes(p_max)) {
        BigInt fact = 1;
        for (unsigned b = 1; b <= b_max; ++b) {
            fact *= b;
            const BigInt value = fact + p;
            const BigInt a = iroot(value, p);
            if (ipow(a, p) == value) out.push_back({a, b, p});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct SweepReport {
    unsigned cases = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// (2p-1)! < p^(2p-1) for every odd prime p <= p_max, via the pairing
/// i(2p-i) < p^2 for 1 <= i <= p-1 (checked as well).
inline SweepReport verify_bound_lemma(unsigned p_max = 50) {
    SweepReport rep;
    for (std::uint32_t p : sieve_primes(p_max)) {
        if (p < 3) continue;
        ++rep.cases;
        if (!(factorial(2 * p - 1) < ipow(BigInt(p), 2 * p - 1)))
            rep.violations.push_back("(2p-1)! >= p^(2p-1) at p=" + std::to_string(p));
        const BigInt p2 = BigInt(p) * p;
        for (std::uint64_t i = 1; i <= p - 1; ++i)
            if (!(BigInt(i) * (2 * p - i) < p2))
                rep.violations.push_back("i(2p-i) >= p^2 at p=" + std::to_string(p) +
                                         ", i=" + std::to_string(i));
    }
    return rep;
}

/// (p+1)^2 never divides p^p - p for primes p >= 5, and the one-line reason:
/// p(p-1)(p^{p-3} + p^{p-5} + ... + p^2 + 1) is congruent to p-1 mod p+1.
inline SweepReport verify_nondivisibility(unsigned p_max = 200) {
    SweepReport rep;
    for (std::uint32_t p : sieve_primes(p_max)) {
        if (p < 5) continue;
        ++rep.cases;
        const BigInt value = ipow(BigInt(p), p) - p;
        const BigInt square = BigInt(p + 1) * (p + 1);
        if (value % square == 0)
            rep.violations.push_back("(p+1)^2 divides p^p-p at p=" + std::to_string(p));

        BigInt geom = 0;  // p^{p-3} + p^{p-5} + ... + p^2 + 1
        for (unsigned e = 0; e + 3 <= p; e += 2) geom += ipow(BigInt(p), e);
        const BigInt product = BigInt(p) * (p - 1) * geom;
        if (product % (p + 1) != p - 1)
            rep.violations.push_back("congruence != p-1 mod p+1 at p=" + std::to_string(p));
        if (value != BigInt(p) * (BigInt(p) * p - 1) * geom)
            rep.violations.push_back("factorization identity broke at p=" + std::to_string(p));
    }
    return rep;
}

/// Solutions other than (2,2,2) must have p < b < 2p.
inline SweepReport verify_window_property(const std::vector<Triple>& solutions) {
    SweepReport rep;
    for (const auto& t : solutions) {
        ++rep.cases;
        if (t.a == 2 && t.b == 2 && t.p == 2) continue;  // the stated exception
        if (!(t.p < t.b && t.b < 2 * t.p))
            rep.violations.push_back("b outside (p, 2p) for " + t.str());
    }
    return rep;
}

}  // namespace oslo::diophantine
