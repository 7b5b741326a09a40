#pragma once

// Nordic squares: n x n boards holding 1..n^2 once each. Counts uphill
// paths (valley-started, adjacency-stepped, strictly increasing), generates
// the independent-marking/tree pattern, builds squares attaining the
// minimum 2n^2 - 2n + 1, and brute-forces tiny boards as the oracle.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oslo/errors.hpp"
#include "oslo/numeric.hpp"

namespace oslo::nordic {

inline constexpr int kMaxBruteForceN = 3;  // (n^2)! enumeration

using PathCount = BigInt;

/// 1-indexed board cell, row 1 at the top.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

class NordicSquare {
public:
    NordicSquare(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
        if (n_ < 1) throw std::invalid_argument("board size must be positive");
        if (values_.size() != static_cast<std::size_t>(n_) * n_)
            throw std::invalid_argument("value grid does not match board size");
        std::vector<bool> seen(values_.size() + 1, false);
        for (int v : values_) {
            if (v < 1 || v > static_cast<int>(values_.size()) || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("values must be a permutation of 1..n^2");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    int n() const { return n_; }
    int value_at(Cell c) const { return values_[index(c)]; }
    const std::vector<int>& values() const { return values_; }

    Cell cell_of(int value) const {  // linear scan; boards are tiny
        for (std::size_t i = 0; i < values_.size(); ++i)
            if (values_[i] == value)
                return {static_cast<int>(i) / n_ + 1, static_cast<int>(i) % n_ + 1};
        throw std::invalid_argument("value not on board");
    }

    std::vector<Cell> neighbors(Cell c) const {
        std::vector<Cell> out;
        if (c.row > 1) out.push_back({c.row - 1, c.col});
        if (c.row < n_) out.push_back({c.row + 1, c.col});
        if (c.col > 1) out.push_back({c.row, c.col - 1});
        if (c.col < n_) out.push_back({c.row, c.col + 1});
        return out;
    }

private:
    std::size_t index(Cell c) const {
        if (c.row < 1 || c.row > n_ || c.col < 1 || c.col > n_)
            throw std::out_of_range("cell outside board");
        return static_cast<std::size_t>(c.row - 1) * n_ + (c.col - 1);
    }

    int n_;
    std::vector<int> values_;
};

/// Cells adjacent only to larger values.
inline std::vector<Cell> valleys(const NordicSquare& sq) {
    std::vector<Cell> out;
    for (int r = 1; r <= sq.n(); ++r) {
        for (int c = 1; c <= sq.n(); ++c) {
            const Cell cell{r, c};
            const int v = sq.value_at(cell);
            bool valley = true;
            for (Cell nb : sq.neighbors(cell))
                if (sq.value_at(nb) < v) valley = false;
            if (valley) out.push_back(cell);
        }
    }
    return out;
}

/// Per-cell uphill-path counts: f(c) = [c is a valley] + sum of f over the
/// smaller-valued neighbors, filled in increasing value order. The total
/// number of uphill paths is the sum over all cells.
inline std::vector<PathCount> uphill_counts(const NordicSquare& sq) {
    const int n = sq.n();
    std::vector<Cell> by_value(static_cast<std::size_t>(n) * n + 1);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            by_value[static_cast<std::size_t>(sq.value_at({r, c}))] = {r, c};

    std::vector<BigInt> f(static_cast<std::size_t>(n) * n, 0);
    auto at = [&](Cell c) -> BigInt& {
        return f[static_cast<std::size_t>(c.row - 1) * n + (c.col - 1)];
    };
    for (int v = 1; v <= n * n; ++v) {
        const Cell cell = by_value[static_cast<std::size_t>(v)];
        BigInt count = 0;
        bool valley = true;
        for (Cell nb : sq.neighbors(cell)) {
            if (sq.value_at(nb) < v) {
                valley = false;
                count += at(nb);
            }
        }
        if (valley) count = 1;
        at(cell) = count;
    }
    return f;
}

inline PathCount count_uphill_paths(const NordicSquare& sq) {
    auto f = uphill_counts(sq);
    return std::accumulate(f.begin(), f.end(), BigInt(0));
}

inline PathCount min_paths_formula(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return BigInt(2) * n * n - 2 * n + 1;
}

class MarkingPattern {
public:
    MarkingPattern(int rows, int cols, std::set<Cell> marked)
        : rows_(rows), cols_(cols), marked_(std::move(marked)) {
        if (rows_ < 1 || cols_ < 1) throw std::invalid_argument("board must be nonempty");
        for (const Cell& c : marked_)
            if (c.row < 1 || c.row > rows_ || c.col < 1 || c.col > cols_)
                throw std::invalid_argument("mark outside board");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::set<Cell>& marked() const { return marked_; }
    bool is_marked(Cell c) const { return marked_.contains(c); }

private:
    int rows_;
    int cols_;
    std::set<Cell> marked_;
};

struct TreeCheck {
    bool ok = false;
    std::string diagnosis;  // "independence", "connectivity", "cycle", or "ok"
};

/// True iff no two marked cells are edge-adjacent and the unmarked cells
/// induce a tree (connected, edge count = cell count - 1).
inline TreeCheck is_independent_tree(const MarkingPattern& pat) {
    const int m = pat.rows(), n = pat.cols();
    for (const Cell& c : pat.marked()) {
        // marks outside the board cannot exist, so no bounds check needed
        if (pat.is_marked({c.row + 1, c.col})) return {false, "independence"};
        if (pat.is_marked({c.row, c.col + 1})) return {false, "independence"};
    }

    std::vector<Cell> unmarked;
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c <= n; ++c)
            if (!pat.is_marked({r, c})) unmarked.push_back({r, c});
    if (unmarked.empty()) return {false, "connectivity"};

    auto id = [&](Cell c) { return (c.row - 1) * n + (c.col - 1); };
    std::vector<int> component(static_cast<std::size_t>(m) * n, -1);
    std::vector<Cell> stack{unmarked.front()};
    component[static_cast<std::size_t>(id(unmarked.front()))] = 0;
    std::size_t reached = 0;
    long long edges = 0;
    while (!stack.empty()) {
        const Cell cur = stack.back();
        stack.pop_back();
        ++reached;
        const Cell nbs[4] = {{cur.row - 1, cur.col}, {cur.row + 1, cur.col},
                             {cur.row, cur.col - 1}, {cur.row, cur.col + 1}};
        for (const Cell& nb : nbs) {
            if (nb.row < 1 || nb.row > m || nb.col < 1 || nb.col > n) continue;
            if (pat.is_marked(nb)) continue;
            ++edges;  // each unmarked-unmarked edge is seen from both ends
            if (component[static_cast<std::size_t>(id(nb))] == -1) {
                component[static_cast<std::size_t>(id(nb))] = 0;
                stack.push_back(nb);
            }
        }
    }
    if (reached != unmarked.size()) return {false, "connectivity"};
    if (edges != 2 * (static_cast<long long>(unmarked.size()) - 1)) return {false, "cycle"};
    return {true, "ok"};
}

namespace detail {

/// The 6-row base pattern for width n >= 2: rows 1 and 3 marked at even
/// columns, rows 4 and 6 at odd columns past the first, plus cell (5,1).
inline std::set<Cell> base_six_rows(int n) {
    std::set<Cell> marks;
    for (int j = 2; j <= n; j += 2) {
        marks.insert({1, j});
        marks.insert({3, j});
    }
    for (int j = 3; j <= n; j += 2) {
        marks.insert({4, j});
        marks.insert({6, j});
    }
    marks.insert({5, 1});
    return marks;
}

}  // namespace detail

/// Marking for an m x n board: no two marks adjacent, unmarked cells a
/// tree. Stacks copies of the 6-row pattern and deletes rows exactly as
/// prescribed for m = 6q - r (first r rows for r in {1,3,4}; first r-1
/// rows plus the last row for r in {2,5}). Width 1 boards need no marks.
/// The result is validated, not assumed.
inline MarkingPattern generate_marking(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("board must be nonempty");
    std::set<Cell> marks;
    if (n > 1) {
        const int q = (m + 5) / 6;
        const int r = 6 * q - m;
        std::set<Cell> stacked;
        const auto base = detail::base_six_rows(n);
        for (int copy = 0; copy < q; ++copy)
            for (const Cell& c : base) stacked.insert({c.row + 6 * copy, c.col});

        int first_kept = 1, last_kept = 6 * q;
        if (r == 1 || r == 3 || r == 4) {
            first_kept = r + 1;
        } else if (r == 2 || r == 5) {
            first_kept = r;
            last_kept = 6 * q - 1;
        }
        for (const Cell& c : stacked)
            if (c.row >= first_kept && c.row <= last_kept)
                marks.insert({c.row - first_kept + 1, c.col});
    }
    MarkingPattern pattern(m, n, std::move(marks));
    auto check = is_independent_tree(pattern);
    if (!check.ok)
        throw std::logic_error("marking construction failed validation (" + check.diagnosis +
                               ") for " + std::to_string(m) + "x" + std::to_string(n));
    return pattern;
}

/// Builds a square attaining the minimum: 1 goes in a seed-chosen unmarked
/// cell, each next integer in a seed-chosen unmarked cell adjacent to a
/// numbered one, and the leftover (largest) numbers fill the marked cells
/// in seed-shuffled order.
inline NordicSquare build_optimal_square(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const MarkingPattern pattern = generate_marking(n, n);
    std::mt19937_64 rng(seed);
    std::vector<int> values(static_cast<std::size_t>(n) * n, 0);
    auto idx = [&](Cell c) {
        return static_cast<std::size_t>(c.row - 1) * n + (c.col - 1);
    };

    std::vector<Cell> unmarked;
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            if (!pattern.is_marked({r, c})) unmarked.push_back({r, c});

    std::set<Cell> numbered;
    std::set<Cell> frontier;
    auto pick = [&](const std::set<Cell>& from) {
        auto it = from.begin();
        std::advance(it, static_cast<long>(rng() % from.size()));
        return *it;
    };
    auto extend_frontier = [&](Cell placed) {
        const Cell nbs[4] = {{placed.row - 1, placed.col}, {placed.row + 1, placed.col},
                             {placed.row, placed.col - 1}, {placed.row, placed.col + 1}};
        for (const Cell& nb : nbs) {
            if (nb.row < 1 || nb.row > n || nb.col < 1 || nb.col > n) continue;
            if (pattern.is_marked(nb) || numbered.contains(nb)) continue;
            frontier.insert(nb);
        }
    };

    Cell start = unmarked[rng() % unmarked.size()];
    values[idx(start)] = 1;
    numbered.insert(start);
    extend_frontier(start);
    int next = 2;
    while (numbered.size() < unmarked.size()) {
        Cell chosen = pick(frontier);
        frontier.erase(chosen);
        values[idx(chosen)] = next++;
        numbered.insert(chosen);
        extend_frontier(chosen);
    }

    std::vector<Cell> marked(pattern.marked().begin(), pattern.marked().end());
    std::shuffle(marked.begin(), marked.end(), rng);
    for (const Cell& c : marked) values[idx(c)] = next++;

    return NordicSquare(n, std::move(values));
}

struct BruteForceResult {
    PathCount minimum;
    NordicSquare witness;
};

/// Exact minimum over all (n^2)! Nordic squares, permutations enumerated in
/// lexicographic order with no pruning.
inline BruteForceResult brute_force_minimum(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > kMaxBruteForceN)
        throw guard_error("(n^2)! enumeration bound n <= " + std::to_string(kMaxBruteForceN),
                          "refusing brute force for n = " + std::to_string(n));
    std::vector<int> perm(static_cast<std::size_t>(n) * n);
    std::iota(perm.begin(), perm.end(), 1);
    BigInt best = -1;
    std::vector<int> best_perm = perm;
    do {
        NordicSquare sq(n, perm);
        BigInt count = count_uphill_paths(sq);
        if (best < 0 || count < best) {
            best = count;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best, NordicSquare(n, best_perm)};
}

}  // namespace oslo::nordic
