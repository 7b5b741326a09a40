#pragma once

// k-friendship between odd primes: p and q are k-friends when
// pq = x^2 + x + k for a nonnegative integer x. Builds friendship graphs
// over finite prime sets and enumerates valid circular arrangements up to
// rotation and reflection.
//
// The hot arithmetic runs in 64/128-bit integers, which is exact for the
// whole uint64 input domain; witnesses are re-validated in arbitrary
// precision at the edges.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "oslo/errors.hpp"
#include "oslo/numeric.hpp"

namespace oslo::prime_circles {

inline constexpr std::size_t kMaxArrangementSize = 12;

inline bool is_odd_prime(std::uint64_t n) { return n != 2 && is_prime(n); }

namespace detail {

/// Solves x^2 + x + k = p*q for nonnegative x, exactly. No input validation.
inline std::optional<std::uint64_t> witness_x(std::uint64_t p, std::uint64_t q, std::uint64_t k,
                                              bool strict_positive) {
    const unsigned __int128 pq = static_cast<unsigned __int128>(p) * q;
    if (k > pq) return std::nullopt;
    // x = (-1 + sqrt(4(pq - k) + 1)) / 2, valid only for square discriminants
    const unsigned __int128 disc = 4 * (pq - k) + 1;
    const unsigned __int128 s = isqrt(disc);
    if (s * s != disc) return std::nullopt;
    const auto x = static_cast<std::uint64_t>((s - 1) / 2);
    if (strict_positive && x == 0) return std::nullopt;
    if (static_cast<unsigned __int128>(x) * x + x + k != pq)
        return std::nullopt;  // unreachable; kept as the verification multiply
    return x;
}

}  // namespace detail

/// Witness for one edge of a friendship graph, with its exact defining
/// equation re-checkable in arbitrary precision.
struct FriendWitness {
    std::uint64_t p;
    std::uint64_t q;
    std::uint64_t k;
    std::uint64_t x;

    bool valid() const {
        if (p == q || !is_odd_prime(p) || !is_odd_prime(q) || k == 0) return false;
        return BigInt(x) * x + x + k == BigInt(p) * q;
    }

    bool operator==(const FriendWitness&) const = default;
};

inline void require_odd_primes(std::uint64_t p, std::uint64_t q) {
    if (p == q) throw std::invalid_argument("primes must be distinct");
    if (!is_odd_prime(p) || !is_odd_prime(q))
        throw std::invalid_argument("inputs must be odd primes");
}

/// The unique nonnegative x with x^2 + x + k = pq, if any.
inline std::optional<std::uint64_t> friend_witness(std::uint64_t p, std::uint64_t q,
                                                   std::uint64_t k,
                                                   bool strict_positive = false) {
    require_odd_primes(p, q);
    if (k == 0) throw std::invalid_argument("k must be positive");
    return detail::witness_x(p, q, k, strict_positive);
}

/// All k-friends of p below p, with witnesses. The overload taking a prime
/// table avoids re-sieving inside sweeps; the table must cover [3, p).
inline std::vector<FriendWitness> smaller_friends(std::uint64_t p, std::uint64_t k,
                                                  std::span<const std::uint32_t> primes,
                                                  bool strict_positive = false) {
    std::vector<FriendWitness> out;
    for (std::uint32_t q : primes) {
        if (q >= p) break;
        if (q == 2) continue;
        if (auto x = detail::witness_x(p, q, k, strict_positive))
            out.push_back({p, q, k, *x});
    }
    return out;
}

inline std::vector<FriendWitness> smaller_friends(std::uint64_t p, std::uint64_t k,
                                                  bool strict_positive = false) {
    if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (k == 0) throw std::invalid_argument("k must be positive");
    if (p > UINT32_MAX) throw std::invalid_argument("sieve bound exceeded");
    auto primes = sieve_primes(static_cast<std::uint32_t>(p - 1));
    return smaller_friends(p, k, primes, strict_positive);
}

/// Structural facts the solution proves about smaller friends: never more
/// than two; and when exactly two exist with witnesses x (larger friend q)
/// and y (smaller friend r), then x + y + 1 = p, q and r are themselves
/// k-friends, and their witness is x - q when x >= q, else q - x - 1.
struct LemmaReport {
    std::uint64_t p = 0;
    std::uint64_t k = 0;
    std::vector<FriendWitness> friends;
    bool at_most_two = true;
    std::optional<bool> sum_identity;
    std::optional<bool> mutual_friendship;
    std::optional<bool> witness_formula;

    bool ok() const {
        return at_most_two && sum_identity.value_or(true) &&
               mutual_friendship.value_or(true) && witness_formula.value_or(true);
    }
};

inline LemmaReport verify_friend_lemmas(std::uint64_t p, std::uint64_t k,
                                        std::span<const std::uint32_t> primes) {
    LemmaReport rep;
    rep.p = p;
    rep.k = k;
    rep.friends = smaller_friends(p, k, primes);
    rep.at_most_two = rep.friends.size() <= 2;
    if (rep.friends.size() == 2) {
        const auto& smaller = rep.friends[0];  // friends come back in increasing q
        const auto& larger = rep.friends[1];
        const std::uint64_t x = larger.x, y = smaller.x;
        rep.sum_identity = (x + y + 1 == p);
        auto mutual = detail::witness_x(larger.q, smaller.q, k, false);
        rep.mutual_friendship = mutual.has_value();
        if (mutual) {
            const std::uint64_t q = larger.q;
            const std::uint64_t derived = x >= q ? x - q : q - x - 1;
            rep.witness_formula = (*mutual == derived);
        } else {
            rep.witness_formula = false;
        }
    }
    return rep;
}

inline LemmaReport verify_friend_lemmas(std::uint64_t p, std::uint64_t k) {
    if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (p > UINT32_MAX) throw std::invalid_argument("sieve bound exceeded");
    auto primes = sieve_primes(static_cast<std::uint32_t>(p - 1));
    return verify_friend_lemmas(p, k, primes);
}

/// Undirected friendship graph over a finite set of odd primes, one
/// validated witness per edge.
class FriendshipGraph {
public:
    FriendshipGraph(std::vector<std::uint64_t> vertices, std::uint64_t k,
                    bool strict_positive = false)
        : vertices_(std::move(vertices)), k_(k) {
        std::sort(vertices_.begin(), vertices_.end());
        if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
            throw std::invalid_argument("vertex set must be distinct");
        if (k_ == 0) throw std::invalid_argument("k must be positive");
        for (auto p : vertices_)
            if (!is_odd_prime(p))
                throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
        const std::size_t n = vertices_.size();
        adjacent_.assign(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (auto x = detail::witness_x(vertices_[i], vertices_[j], k_, strict_positive)) {
                    adjacent_[i][j] = adjacent_[j][i] = true;
                    edges_.push_back({vertices_[j], vertices_[i], k_, *x});
                }
            }
        }
    }

    const std::vector<std::uint64_t>& vertices() const { return vertices_; }
    std::uint64_t k() const { return k_; }
    const std::vector<FriendWitness>& edges() const { return edges_; }
    bool adjacent(std::size_t i, std::size_t j) const { return adjacent_[i][j]; }

private:
    std::vector<std::uint64_t> vertices_;  // sorted
    std::uint64_t k_;
    std::vector<FriendWitness> edges_;
    std::vector<std::vector<bool>> adjacent_;
};

/// A circular placement stored canonically: the lexicographically least
/// sequence among all rotations of both orientations.
class CircularArrangement {
public:
    explicit CircularArrangement(std::vector<std::uint64_t> cycle)
        : order_(canonical_form(std::move(cycle))) {}

    const std::vector<std::uint64_t>& order() const { return order_; }

    static std::vector<std::uint64_t> canonical_form(std::vector<std::uint64_t> cycle) {
        if (cycle.size() < 3) throw std::invalid_argument("a circle needs at least 3 elements");
        std::vector<std::uint64_t> best;
        std::vector<std::uint64_t> cur = cycle;
        for (int orientation = 0; orientation < 2; ++orientation) {
            for (std::size_t r = 0; r < cur.size(); ++r) {
                std::rotate(cur.begin(), cur.begin() + 1, cur.end());
                if (best.empty() || cur < best) best = cur;
            }
            std::reverse(cur.begin(), cur.end());
        }
        return best;
    }

    auto operator<=>(const CircularArrangement&) const = default;

private:
    std::vector<std::uint64_t> order_;
};

/// Every Hamiltonian cycle of the friendship graph, deduplicated up to
/// rotation and reflection. The solution's theorem says there is at most one.
inline std::vector<CircularArrangement> valid_arrangements(const FriendshipGraph& graph) {
    const auto& s = graph.vertices();
    if (s.size() < 3) throw std::invalid_argument("need at least 3 primes for a circle");
    if (s.size() > kMaxArrangementSize)
        throw guard_error("Hamiltonian backtracking bound |S| <= " +
                              std::to_string(kMaxArrangementSize),
                          "refusing arrangement enumeration for |S| = " +
                              std::to_string(s.size()));

    const std::size_t n = s.size();
    std::set<CircularArrangement> found;
    std::vector<std::size_t> path{0};  // cycles all contain vertex 0
    std::vector<bool> used(n, false);
    used[0] = true;
    auto backtrack = [&](auto&& self) -> void {
        if (path.size() == n) {
            if (graph.adjacent(path.back(), 0)) {
                std::vector<std::uint64_t> cycle;
                cycle.reserve(n);
                for (auto idx : path) cycle.push_back(s[idx]);
                found.emplace(std::move(cycle));
            }
            return;
        }
        for (std::size_t next = 1; next < n; ++next) {
            if (used[next] || !graph.adjacent(path.back(), next)) continue;
            used[next] = true;
            path.push_back(next);
            self(self);
            path.pop_back();
            used[next] = false;
        }
    };
    backtrack(backtrack);
    return {found.begin(), found.end()};
}

inline std::vector<CircularArrangement> valid_arrangements(std::vector<std::uint64_t> s,
                                                           std::uint64_t k,
                                                           bool strict_positive = false) {
    return valid_arrangements(FriendshipGraph(std::move(s), k, strict_positive));
}

}  // namespace oslo::prime_circles
