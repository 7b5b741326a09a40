#pragma once

// Exact-rational checks of the unique-partner property: for f on positive
// reals, y is a partner of x when x*f(y) + y*f(x) <= 2. All comparisons in
// this module are exact; no floating point is involved anywhere.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "oslo/numeric.hpp"

namespace oslo::partner_functions {

using oslo::Rational;

inline Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
        BigInt num{std::string(s.substr(0, slash))};
        BigInt den{std::string(s.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: " + std::string(s));
    }
}

/// One of a closed family of candidate functions, kept small so that
/// evaluation stays exact and total on the sampled domain.
class CandidateFunction {
public:
    enum class Kind { reciprocal, scaled_reciprocal, affine_decreasing };

    static CandidateFunction reciprocal() { return CandidateFunction(Kind::reciprocal, 1, 0); }

    static CandidateFunction scaled_reciprocal(Rational c) {
        if (c <= 0) throw std::invalid_argument("scale must be positive");
        return CandidateFunction(Kind::scaled_reciprocal, std::move(c), 0);
    }

    /// f(x) = a - b*x with a, b > 0; positive only on x < a/b, checked at
    /// evaluation time.
    static CandidateFunction affine_decreasing(Rational a, Rational b) {
        if (a <= 0 || b <= 0) throw std::invalid_argument("affine parameters must be positive");
        return CandidateFunction(Kind::affine_decreasing, std::move(a), std::move(b));
    }

    /// "reciprocal" | "scaled:<c>" | "affine:<a>:<b>"
    static CandidateFunction parse(std::string_view text) {
        if (text == "reciprocal") return reciprocal();
        if (text.starts_with("scaled:")) return scaled_reciprocal(parse_rational(text.substr(7)));
        if (text.starts_with("affine:")) {
            auto rest = text.substr(7);
            auto colon = rest.find(':');
            if (colon == std::string_view::npos)
                throw std::invalid_argument("affine needs two parameters a:b");
            return affine_decreasing(parse_rational(rest.substr(0, colon)),
                                     parse_rational(rest.substr(colon + 1)));
        }
        throw std::invalid_argument("unknown candidate: " + std::string(text));
    }

    Rational operator()(const Rational& x) const {
        if (x <= 0) throw std::domain_error("candidate functions are defined on positive inputs");
        Rational v;
        switch (kind_) {
            case Kind::reciprocal: v = Rational(1) / x; break;
            case Kind::scaled_reciprocal: v = c_ / x; break;
            case Kind::affine_decreasing: v = c_ - d_ * x; break;
        }
        if (v <= 0)
            throw std::domain_error("candidate is not positive at x = " + x.str());
        return v;
    }

    Kind kind() const { return kind_; }

    std::string name() const {
        switch (kind_) {
            case Kind::reciprocal: return "reciprocal";
            case Kind::scaled_reciprocal: return "scaled_reciprocal(" + c_.str() + ")";
            case Kind::affine_decreasing:
                return "affine_decreasing(" + c_.str() + "," + d_.str() + ")";
        }
        return "?";
    }

private:
    CandidateFunction(Kind kind, Rational c, Rational d)
        : kind_(kind), c_(std::move(c)), d_(std::move(d)) {}

    Kind kind_;
    Rational c_;  // scale, or affine a
    Rational d_;  // affine b
};

/// x*f(y) + y*f(x), exactly.
inline Rational pair_value(const CandidateFunction& f, const Rational& x, const Rational& y) {
    return x * f(y) + y * f(x);
}

/// Exact subset of the sample whose pair value stays within 2.
inline std::set<Rational> partner_set(const CandidateFunction& f, const Rational& x,
                                      const std::set<Rational>& sample) {
    if (sample.empty()) throw std::invalid_argument("sample must be nonempty");
    std::set<Rational> partners;
    for (const auto& y : sample)
        if (pair_value(f, x, y) <= 2) partners.insert(y);
    return partners;
}

struct IdentityCheck {
    bool identity_holds;      // x/y + y/x - 2 == (x-y)^2/(xy)
    bool equality_iff_equal;  // pair value == 2 exactly when x == y
    Rational excess;          // x/y + y/x - 2
};

inline IdentityCheck verify_reciprocal_identity(const Rational& x, const Rational& y) {
    if (x <= 0 || y <= 0) throw std::domain_error("inputs must be positive");
    Rational value = x / y + y / x;
    Rational excess = value - 2;
    Rational square_form = (x - y) * (x - y) / (x * y);
    return {excess == square_form, (value == 2) == (x == y), excess};
}

enum class MonotonicityVerdict { consistent, violation, inconclusive };

struct MonotonicityReport {
    MonotonicityVerdict verdict;
    std::string detail;               // "uniqueness" or "monotonicity" on violation
    std::vector<Rational> witnesses;  // offending sample points
};

/// Sample-scale check of the decreasingness implication: whenever y2 is a
/// partner of x2 but not of x1 (x1 < x2), a valid candidate must satisfy
/// f(x2) < f(x1). Two partners inside one sample already falsify uniqueness
/// outright; an empty partner set only means the sample was too sparse.
inline MonotonicityReport monotonicity_witness(const CandidateFunction& f, const Rational& x1,
                                               const Rational& x2,
                                               const std::set<Rational>& sample) {
    if (!(x1 < x2)) throw std::invalid_argument("requires x1 < x2");
    auto p1 = partner_set(f, x1, sample);
    auto p2 = partner_set(f, x2, sample);
    if (p1.size() >= 2 || p2.size() >= 2) {
        const auto& multi = p1.size() >= 2 ? p1 : p2;
        return {MonotonicityVerdict::violation, "uniqueness",
                std::vector<Rational>(multi.begin(), multi.end())};
    }
    if (p2.empty())
        return {MonotonicityVerdict::inconclusive, "no partner of x2 in sample", {}};
    for (const auto& y2 : p2) {
        if (p1.contains(y2)) continue;
        if (!(f(x2) < f(x1)))
            return {MonotonicityVerdict::violation, "monotonicity", {y2}};
    }
    return {MonotonicityVerdict::consistent, "", {}};
}

/// {p/q : 1 <= p, q <= max}, deduplicated by exact value.
inline std::set<Rational> default_grid(int max = 20) {
    if (max < 1) throw std::invalid_argument("grid bound must be positive");
    std::set<Rational> grid;
    for (int p = 1; p <= max; ++p)
        for (int q = 1; q <= max; ++q) grid.insert(Rational(p, q));
    return grid;
}

}  // namespace oslo::partner_functions
