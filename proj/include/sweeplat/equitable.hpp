#pragma once

#include <string>
#include <vector>

#include "modular_sweep.hpp"
#include "words.hpp"

// Balancing arrays and equitability. Letter i of a partitioned word fills a
// cyclic run of columns in an N x m grid, starting at its block index and
// decreasing (wrapping from 0 up to m-1); a partition is equitable when
// every column meets its target count. On top of that sit the two
// constructions: the rightmost equitable partition (move letters out of
// block 0 as forced) and the successful partition reached from any
// equitable start by repeatedly shifting the unvisited residue rightward.

namespace sweeplat {

enum class Fill { less, equitable, more };

struct ColumnStatus {
    int column = 0;
    long long count = 0;
    long long target = 0;
    Fill status = Fill::equitable;
    bool operator==(const ColumnStatus&) const = default;
};

/// Target fill of column j: floor(|u|/m), plus one for columns 1..|u|_m.
inline long long column_target(const ModWord& u, int j) {
    detail::require(0 <= j && j < u.modulus(), "column_target: column out of range");
    const long long base = u.letter_sum() / u.modulus();
    return (1 <= j && j <= u.letter_sum_mod()) ? base + 1 : base;
}

namespace detail {

/// Fill counts of all m columns: letter i in block b with value v fills the
/// v columns b, b-1, ..., b-v+1 (mod m).
inline std::vector<long long> column_counts(const PartitionedWord& p) {
    const int m = p.modulus();
    std::vector<long long> counts(static_cast<std::size_t>(m), 0);
    for (int i = 1; i <= p.size(); ++i) {
        const int b = p.block_of(i);
        const int v = p.letter(i);
        for (int t = 0; t < v; ++t)
            ++counts[static_cast<std::size_t>(((b - t) % m + m) % m)];
    }
    return counts;
}

}  // namespace detail

/// N x m boolean grid; row i has exactly letter(i) filled cells, a cyclic
/// interval decreasing from the letter's block.
struct BalancingArray {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<bool>> cells;  // cells[i-1][k], k a block index

    bool cell(int i, int k) const {
        if (i < 1 || i > rows) throw std::out_of_range("BalancingArray: row out of range");
        if (k < 0 || k >= cols) throw std::out_of_range("BalancingArray: column out of range");
        return cells[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)];
    }

    /// Text grid, columns in display order m-1 ... 0.
    std::string render(bool ascii = false) const {
        const char* filled = ascii ? "#" : "\xe2\x96\xa0";  // '■'
        const char* blank = ascii ? "." : "\xc2\xb7";       // '·'
        std::string out;
        for (int i = 1; i <= rows; ++i) {
            for (int k = cols - 1; k >= 0; --k) {
                if (k != cols - 1) out += ' ';
                out += cell(i, k) ? filled : blank;
            }
            out += '\n';
        }
        return out;
    }
};

inline BalancingArray balancing_array(const PartitionedWord& p) {
    const int m = p.modulus();
    BalancingArray arr;
    arr.rows = p.size();
    arr.cols = m;
    arr.cells.assign(static_cast<std::size_t>(p.size()),
                     std::vector<bool>(static_cast<std::size_t>(m), false));
    for (int i = 1; i <= p.size(); ++i) {
        const int b = p.block_of(i);
        const int v = p.letter(i);
        for (int t = 0; t < v; ++t)
            arr.cells[static_cast<std::size_t>(i - 1)]
                     [static_cast<std::size_t>(((b - t) % m + m) % m)] = true;
    }
    return arr;
}

inline ColumnStatus column_status(const PartitionedWord& p, int j) {
    detail::require(0 <= j && j < p.modulus(), "column_status: column out of range");
    ColumnStatus st;
    st.column = j;
    st.count = detail::column_counts(p)[static_cast<std::size_t>(j)];
    st.target = column_target(p.word(), j);
    st.status = st.count < st.target   ? Fill::less
                : st.count > st.target ? Fill::more
                                       : Fill::equitable;
    return st;
}

inline bool is_equitable(const PartitionedWord& p) {
    const auto counts = detail::column_counts(p);
    for (int j = 0; j < p.modulus(); ++j)
        if (counts[static_cast<std::size_t>(j)] != column_target(p.word(), j)) return false;
    return true;
}

/// One step of an instrumented construction: the selected column and the
/// 1-based index of the letter moved.
struct MoveStep {
    int column = 0;
    int letter_index = 0;
    bool operator==(const MoveStep&) const = default;
};

namespace detail {

inline long long loop_bound(const ModWord& u) {
    return static_cast<long long>(u.size()) * u.modulus() * u.modulus() + 1;
}

}  // namespace detail

/// The rightmost equitable partition: every equitable q of the same word
/// has block(q, i) >= block(result, i) for all i. Starting with every
/// letter in block 0, repeatedly pick the rightmost under-filled column j
/// and move the leading letter of block j-1 into block j. Column 0 stays
/// over-filled until the partition is equitable, so the loop never reaches
/// past block 0.
inline PartitionedWord rightmost_traced(const ModWord& u, std::vector<MoveStep>* steps) {
    const int m = u.modulus();
    PartitionedWord p = PartitionedWord::all_in_block(u, 0);
    std::vector<long long> targets(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) targets[static_cast<std::size_t>(j)] = column_target(u, j);

    for (long long guard = detail::loop_bound(u); guard >= 0; --guard) {
        const auto counts = detail::column_counts(p);
        int j = -1;
        for (int c = 0; c < m; ++c) {
            if (counts[static_cast<std::size_t>(c)] < targets[static_cast<std::size_t>(c)]) {
                j = c;
                break;
            }
        }
        // Counts and targets both sum to |u|, so "no under-filled column"
        // is exactly equitability.
        if (j < 0) return p;
        detail::ensure(counts[0] > targets[0],
                       "rightmost: column 0 not over-filled before equitability");
        detail::ensure(j >= 1 && p.block_size(j - 1) > 0,
                       "rightmost: no letter available to move");
        const int i = p.block_begin(j - 1);
        if (steps != nullptr) steps->push_back(MoveStep{j, i});
        auto sizes = p.display_sizes();
        --sizes[static_cast<std::size_t>(m - 1 - (j - 1))];
        ++sizes[static_cast<std::size_t>(m - 1 - j)];
        p = PartitionedWord(u, std::move(sizes));
    }
    throw invariant_violation("rightmost: loop bound exceeded");
}

inline PartitionedWord rightmost(const ModWord& u) { return rightmost_traced(u, nullptr); }

inline bool is_successful(const PartitionedWord& p) {
    return inverse_presweep_run(p).success;
}

/// Converge from any equitable partition to the successful partition of the
/// same word: run the inverse presweep, and while it fails shift its
/// residue one block rightward. Records each partition reached when given a
/// trace vector (first entry is the input).
inline PartitionedWord successful_from_traced(const PartitionedWord& p,
                                              std::vector<PartitionedWord>* rounds) {
    detail::require(is_equitable(p), "successful_from: input must be equitable");
    const int m = p.modulus();
    PartitionedWord cur = p;
    if (rounds != nullptr) rounds->push_back(cur);
    for (long long guard = detail::loop_bound(p.word()); guard >= 0; --guard) {
        InversePresweepRun run = inverse_presweep_run(cur);
        if (run.success) return cur;
        const PartitionedWord& residue = run.failure->residue;
        detail::ensure(residue.block_size(0) == 0,
                       "successful_from: residue has letters in block 0");
        // Residue letters are per-block suffixes; moving them one block
        // rightward only renames blocks, the underlying word is unchanged.
        auto sizes = cur.display_sizes();
        for (int t = m - 1; t >= 1; --t) {
            const int moved = residue.block_size(t);
            sizes[static_cast<std::size_t>(m - 1 - t)] -= moved;
            sizes[static_cast<std::size_t>(m - 1 - (t - 1))] += moved;
        }
        cur = PartitionedWord(cur.word(), std::move(sizes));
        if (rounds != nullptr) rounds->push_back(cur);
    }
    throw invariant_violation("successful_from: loop bound exceeded");
}

inline PartitionedWord successful_from(const PartitionedWord& p) {
    return successful_from_traced(p, nullptr);
}

/// Children of a successful partition in the success tree: child i prepends
/// the letter i to block (i + |u|_m) mod m.
inline std::vector<PartitionedWord> succ_tree_children(const PartitionedWord& p) {
    detail::require(is_successful(p), "succ_tree_children: input must be successful");
    const int m = p.modulus();
    const int base = p.word().letter_sum_mod();
    std::vector<PartitionedWord> children;
    children.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const int k = (i + base) % m;
        std::vector<int> letters = p.word().letters();
        letters.insert(letters.begin() + (p.block_begin(k) - 1), i);
        auto sizes = p.display_sizes();
        ++sizes[static_cast<std::size_t>(m - 1 - k)];
        children.emplace_back(ModWord(m, std::move(letters)), std::move(sizes));
    }
    return children;
}

/// Inverse of the modular sweep: the inverse presweep applied to the
/// rightmost (= successful) partition of u.
inline ModWord unsweep_mod(const ModWord& u) {
    InversePresweepRun run = inverse_presweep_run(rightmost(u));
    detail::ensure(run.success, "unsweep_mod: inverse presweep failed on the rightmost partition");
    return run.word;
}

}  // namespace sweeplat
