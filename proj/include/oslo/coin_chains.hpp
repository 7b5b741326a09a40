#pragma once

// Coin-row rewriting process: a row of n A-coins and n B-coins, and the
// operation "move the maximal same-type chain containing the k-th coin to
// the left end". Classifies which (n, k) sort every initial ordering.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "oslo/errors.hpp"
#include "oslo/numeric.hpp"

namespace oslo::coin_chains {

inline constexpr int kMaxN = 16;            // rows are stored one bit per coin
inline constexpr int kMaxExhaustiveN = 7;   // C(14,7) = 3432 orderings

/// A row of 2n coins, exactly n of each type. Bit i set means coin i is 'B'.
class CoinRow {
public:
    explicit CoinRow(std::string_view s) {
        if (s.size() < 2 || s.size() % 2 != 0 || s.size() > 2 * kMaxN)
            throw std::invalid_argument("row length must be even, in [2, " +
                                        std::to_string(2 * kMaxN) + "]");
        n_ = static_cast<std::uint8_t>(s.size() / 2);
        bits_ = 0;
        int b_count = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == 'B') {
                bits_ |= 1u << i;
                ++b_count;
            } else if (s[i] != 'A') {
                throw std::invalid_argument("row may contain only A and B");
            }
        }
        if (b_count != n_)
            throw std::invalid_argument("row must contain the same number of A and B coins");
    }

    static CoinRow from_bits(std::uint32_t bits, int n) {
        CoinRow r(uncheck{}, bits, n);
        if (std::popcount(r.bits_) != n) throw std::invalid_argument("bit count mismatch");
        return r;
    }

    int n() const { return n_; }
    int size() const { return 2 * n_; }
    char at(int i) const { return (bits_ >> i) & 1u ? 'B' : 'A'; }
    std::uint32_t bits() const { return bits_; }

    std::string str() const {
        std::string s(static_cast<std::size_t>(size()), 'A');
        for (int i = 0; i < size(); ++i)
            if ((bits_ >> i) & 1u) s[static_cast<std::size_t>(i)] = 'B';
        return s;
    }

    /// True when the leftmost n coins are all of one type.
    bool leftmost_n_uniform() const {
        const std::uint32_t mask = (1u << n_) - 1u;
        const std::uint32_t left = bits_ & mask;
        return left == 0 || left == mask;
    }

    bool operator==(const CoinRow&) const = default;

private:
    struct uncheck {};
    CoinRow(uncheck, std::uint32_t bits, int n)
        : bits_(bits), n_(static_cast<std::uint8_t>(n)) {
        if (n < 1 || n > kMaxN) throw std::invalid_argument("n out of range");
        bits_ &= (n == kMaxN) ? ~0u : ((1u << (2 * n)) - 1u);
    }

    std::uint32_t bits_;
    std::uint8_t n_;
};

struct Run {
    char symbol;
    int length;
    bool operator==(const Run&) const = default;
};

using BlockDecomposition = std::vector<Run>;

/// Maximal-run decomposition; adjacent runs alternate symbols and expand
/// back to the row.
inline BlockDecomposition decompose(const CoinRow& row) {
    BlockDecomposition runs;
    for (int i = 0; i < row.size(); ++i) {
        const char c = row.at(i);
        if (!runs.empty() && runs.back().symbol == c)
            ++runs.back().length;
        else
            runs.push_back({c, 1});
    }
    return runs;
}

inline CoinRow expand(const BlockDecomposition& runs) {
    std::string s;
    for (const auto& r : runs) s.append(static_cast<std::size_t>(r.length), r.symbol);
    return CoinRow(s);
}

inline int block_count(const CoinRow& row) {
    return static_cast<int>(decompose(row).size());
}

/// Moves the maximal chain containing the k-th coin (1-based) to the left end.
inline CoinRow apply_operation(const CoinRow& row, int k) {
    if (k < 1 || k > row.size()) throw std::out_of_range("k must be in [1, 2n]");
    const int i = k - 1;
    int s = i, e = i;
    while (s > 0 && row.at(s - 1) == row.at(i)) --s;
    while (e + 1 < row.size() && row.at(e + 1) == row.at(i)) ++e;
    std::string out;
    out.reserve(static_cast<std::size_t>(row.size()));
    for (int j = s; j <= e; ++j) out.push_back(row.at(j));
    for (int j = 0; j < s; ++j) out.push_back(row.at(j));
    for (int j = e + 1; j < row.size(); ++j) out.push_back(row.at(j));
    return CoinRow(out);
}

enum class Outcome { reached_sorted, entered_cycle };

struct ProcessResult {
    Outcome outcome;
    int step;                        // ops applied when the verdict was reached
    std::vector<CoinRow> trajectory; // distinct states in visiting order
};

/// Runs the deterministic process until the leftmost n coins are uniform or
/// a state repeats. max_steps = 0 uses C(2n,n)+1, a bound on distinct states.
inline ProcessResult run_process(const CoinRow& start, int k, std::uint64_t max_steps = 0) {
    if (max_steps == 0) max_steps = binomial(static_cast<unsigned>(2 * start.n()),
                                             static_cast<unsigned>(start.n())) + 1;
    std::unordered_map<std::uint32_t, int> visited;
    std::vector<CoinRow> trajectory{start};
    CoinRow cur = start;
    for (std::uint64_t step = 0; step <= max_steps; ++step) {
        if (cur.leftmost_n_uniform())
            return {Outcome::reached_sorted, static_cast<int>(step), std::move(trajectory)};
        visited.emplace(cur.bits(), static_cast<int>(step));
        CoinRow next = apply_operation(cur, k);
        if (visited.contains(next.bits()))
            return {Outcome::entered_cycle, static_cast<int>(step) + 1, std::move(trajectory)};
        trajectory.push_back(next);
        cur = next;
    }
    throw inconclusive_error("process exceeded max_steps without sorting or cycling");
}

/// All rows with n of each coin type, in lexicographic order (A < B).
inline std::vector<std::string> all_orderings(int n) {
    std::string s(static_cast<std::size_t>(n), 'A');
    s.append(static_cast<std::size_t>(n), 'B');
    std::vector<std::string> out;
    do {
        out.push_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
}

struct PairVerdict {
    bool all_sorted;
    std::optional<CoinRow> witness;  // lexicographically first failing row
};

inline void check_exhaustive_guard(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > kMaxExhaustiveN)
        throw guard_error("exhaustive enumeration bound n <= " + std::to_string(kMaxExhaustiveN),
                          "refusing non-exhaustive classification for n = " + std::to_string(n));
}

/// True iff every one of the C(2n,n) initial orderings reaches a sorted state.
inline PairVerdict classify_pair(int n, int k) {
    check_exhaustive_guard(n);
    if (k < 1 || k > 2 * n) throw std::out_of_range("k must be in [1, 2n]");
    for (const auto& s : all_orderings(n)) {
        CoinRow row(s);
        if (run_process(row, k).outcome != Outcome::reached_sorted)
            return {false, row};
    }
    return {true, std::nullopt};
}

inline std::set<int> claimed_valid_k(int n) {
    std::set<int> out;
    const int hi = (3 * n + 1) / 2;  // ceil(3n/2)
    for (int k = n; k <= hi; ++k) out.insert(k);
    return out;
}

struct PairClassification {
    int n;
    std::set<int> valid_k;    // exhaustively determined
    std::set<int> claimed_k;  // {k : n <= k <= ceil(3n/2)}
    bool matches;
};

inline PairClassification classify_all(int n) {
    check_exhaustive_guard(n);
    PairClassification pc{n, {}, claimed_valid_k(n), false};
    for (int k = 1; k <= 2 * n; ++k)
        if (classify_pair(n, k).all_sorted) pc.valid_k.insert(k);
    pc.matches = pc.valid_k == pc.claimed_k;
    return pc;
}

}  // namespace oslo::coin_chains
