#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "equitable.hpp"
#include "text.hpp"
#include "words.hpp"

// The distributive lattice of equitable partitions of a fixed word.
//
// Order orientation: p <= q iff block(p, i) >= block(q, i) for all i, so a
// rightward shift moves up, the leftmost partition is the bottom and the
// rightmost is the top. Cover relations shift a minimal left balanced
// block-suffix one block to the right; join takes componentwise minima of
// block vectors and meet componentwise maxima.

namespace sweeplat {

/// Per-block suffix lengths (t_{m-1}, ..., t_0) selecting a suffix of each
/// block of a host partition.
class SuffixVector {
public:
    SuffixVector() : display_lengths_{0} {}

    explicit SuffixVector(std::vector<int> lengths_display)
        : display_lengths_(std::move(lengths_display)) {
        detail::require(!display_lengths_.empty(), "SuffixVector: need at least one block");
        for (int t : display_lengths_)
            detail::require(t >= 0, "SuffixVector: negative suffix length");
    }

    int blocks() const noexcept { return static_cast<int>(display_lengths_.size()); }

    int length(int k) const {
        if (k < 0 || k >= blocks())
            throw std::out_of_range("SuffixVector: block index out of range");
        return display_lengths_[static_cast<std::size_t>(blocks() - 1 - k)];
    }

    int total() const noexcept {
        int t = 0;
        for (int x : display_lengths_) t += x;
        return t;
    }

    const std::vector<int>& display_lengths() const noexcept { return display_lengths_; }

    bool operator==(const SuffixVector&) const = default;

private:
    std::vector<int> display_lengths_;
};

/// 1-based letter positions selected by s in p, ascending.
inline std::vector<int> suffix_rows(const PartitionedWord& p, const SuffixVector& s) {
    detail::require(s.blocks() == p.modulus(), "suffix_rows: block count mismatch");
    std::vector<int> rows;
    for (int k = p.modulus() - 1; k >= 0; --k) {
        detail::require(s.length(k) <= p.block_size(k),
                        "suffix_rows: suffix longer than its block");
        const int end = p.block_begin(k) + p.block_size(k);
        for (int i = end - s.length(k); i < end; ++i) rows.push_back(i);
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

namespace detail {

/// Fill counts contributed by the selected letters alone.
inline std::vector<long long> suffix_column_counts(const PartitionedWord& p,
                                                   const SuffixVector& s) {
    const int m = p.modulus();
    std::vector<long long> counts(static_cast<std::size_t>(m), 0);
    for (int i : suffix_rows(p, s)) {
        const int b = p.block_of(i);
        const int v = p.letter(i);
        for (int t = 0; t < v; ++t)
            ++counts[static_cast<std::size_t>(((b - t) % m + m) % m)];
    }
    return counts;
}

/// Balanced: the selection contributes the same number of fills to every
/// column (it is itself an equitable partition of the selected subword; in
/// particular its letter sum is divisible by m).
inline bool suffix_is_balanced(const PartitionedWord& p, const SuffixVector& s) {
    const auto counts = suffix_column_counts(p, s);
    for (long long c : counts)
        if (c != counts.front()) return false;
    return true;
}

}  // namespace detail

/// All nonempty left balanced block-suffixes of p: per-block suffixes,
/// balanced, with empty block 0. Found by exhausting the suffix-length
/// odometer.
inline std::vector<SuffixVector> left_bbs_all(const PartitionedWord& p) {
    const int m = p.modulus();
    std::vector<SuffixVector> out;
    std::vector<int> lengths(static_cast<std::size_t>(m), 0);  // display order
    // Odometer over blocks m-1 .. 1; block 0 (last display slot) stays 0.
    for (;;) {
        int d = m - 2;
        while (d >= 0) {
            const int k = m - 1 - d;
            if (lengths[static_cast<std::size_t>(d)] < p.block_size(k)) {
                ++lengths[static_cast<std::size_t>(d)];
                std::fill(lengths.begin() + d + 1, lengths.end(), 0);
                break;
            }
            --d;
        }
        if (d < 0) break;
        SuffixVector s(lengths);
        if (detail::suffix_is_balanced(p, s)) out.push_back(std::move(s));
    }
    return out;
}

/// The minimal ones: intersection (componentwise minimum) with every other
/// left balanced block-suffix is itself or empty.
inline std::vector<SuffixVector> minimal_left_bbs(const PartitionedWord& p) {
    const auto all = left_bbs_all(p);
    std::vector<SuffixVector> out;
    for (const auto& s : all) {
        bool minimal = true;
        for (const auto& t : all) {
            if (t == s) continue;
            std::vector<int> inter(s.display_lengths().size());
            bool empty = true;
            for (std::size_t d = 0; d < inter.size(); ++d) {
                inter[d] = std::min(s.display_lengths()[d], t.display_lengths()[d]);
                if (inter[d] != 0) empty = false;
            }
            if (!empty && inter != s.display_lengths()) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(s);
    }
    return out;
}

/// Move the letters selected by s one block rightward. The selected letters
/// must form a balanced block-suffix with empty block 0.
inline PartitionedWord shift_right(const PartitionedWord& p, const SuffixVector& s) {
    const int m = p.modulus();
    detail::require(s.blocks() == m, "shift_right: block count mismatch");
    detail::require(s.total() > 0, "shift_right: empty block-suffix");
    detail::require(s.length(0) == 0, "shift_right: block 0 suffix must be empty");
    for (int k = 0; k < m; ++k)
        detail::require(s.length(k) <= p.block_size(k),
                        "shift_right: suffix longer than its block");
    detail::require(detail::suffix_is_balanced(p, s),
                    "shift_right: selection is not balanced");
    auto sizes = p.display_sizes();
    for (int t = m - 1; t >= 1; --t) {
        sizes[static_cast<std::size_t>(m - 1 - t)] -= s.length(t);
        sizes[static_cast<std::size_t>(m - 1 - (t - 1))] += s.length(t);
    }
    return PartitionedWord(p.word(), std::move(sizes));
}

/// Upper covers of an equitable partition, sorted by block vector.
inline std::vector<PartitionedWord> covers(const PartitionedWord& p) {
    detail::require(is_equitable(p), "covers: input must be equitable");
    std::vector<PartitionedWord> out;
    for (const auto& s : minimal_left_bbs(p)) out.push_back(shift_right(p, s));
    std::sort(out.begin(), out.end(), [](const PartitionedWord& a, const PartitionedWord& b) {
        return block_vector(a) < block_vector(b);
    });
    return out;
}

/// The leftmost equitable partition: every equitable q of the same word has
/// block(q, i) <= block(result, i) for all i. Dual construction to
/// rightmost: start with every letter in block m-1 and move the trailing
/// letter of the leftmost over-filled column's block one block rightward.
/// Column 0 never becomes over-filled during the run.
inline PartitionedWord leftmost_traced(const ModWord& u, std::vector<MoveStep>* steps) {
    const int m = u.modulus();
    PartitionedWord p = PartitionedWord::all_in_block(u, m - 1);
    std::vector<long long> targets(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) targets[static_cast<std::size_t>(j)] = column_target(u, j);

    for (long long guard = detail::loop_bound(u); guard >= 0; --guard) {
        const auto counts = detail::column_counts(p);
        int j = -1;
        for (int c = m - 1; c >= 0; --c) {
            if (counts[static_cast<std::size_t>(c)] > targets[static_cast<std::size_t>(c)]) {
                j = c;
                break;
            }
        }
        if (j < 0) return p;
        detail::ensure(counts[0] <= targets[0], "leftmost: column 0 over-filled");
        detail::ensure(j >= 1 && p.block_size(j) > 0, "leftmost: no letter available to move");
        const int i = p.block_begin(j) + p.block_size(j) - 1;
        if (steps != nullptr) steps->push_back(MoveStep{j, i});
        auto sizes = p.display_sizes();
        --sizes[static_cast<std::size_t>(m - 1 - j)];
        ++sizes[static_cast<std::size_t>(m - 1 - (j - 1))];
        p = PartitionedWord(u, std::move(sizes));
    }
    throw invariant_violation("leftmost: loop bound exceeded");
}

inline PartitionedWord leftmost(const ModWord& u) { return leftmost_traced(u, nullptr); }

/// Join: componentwise minimum of block vectors (the lower of the two block
/// indices is the further-right, hence higher, position).
inline PartitionedWord join(const PartitionedWord& p, const PartitionedWord& q) {
    detail::require(p.word() == q.word(), "join: partitions of different words");
    detail::require(is_equitable(p) && is_equitable(q), "join: inputs must be equitable");
    auto vp = block_vector(p), vq = block_vector(q);
    for (std::size_t i = 0; i < vp.size(); ++i) vp[i] = std::min(vp[i], vq[i]);
    return from_block_vector(p.word(), vp);
}

/// Meet: componentwise maximum of block vectors.
inline PartitionedWord meet(const PartitionedWord& p, const PartitionedWord& q) {
    detail::require(p.word() == q.word(), "meet: partitions of different words");
    detail::require(is_equitable(p) && is_equitable(q), "meet: inputs must be equitable");
    auto vp = block_vector(p), vq = block_vector(q);
    for (std::size_t i = 0; i < vp.size(); ++i) vp[i] = std::max(vp[i], vq[i]);
    return from_block_vector(p.word(), vp);
}

/// The lattice of all equitable partitions of a word. Nodes are block
/// vectors sorted lexicographically; covers go from lower to upper.
struct EqLattice {
    ModWord word;
    std::vector<std::vector<int>> nodes;
    std::vector<std::pair<int, int>> cover_edges;
    int bottom = 0;
    int top = 0;

    PartitionedWord node_partition(int idx) const {
        return from_block_vector(word, nodes.at(static_cast<std::size_t>(idx)));
    }

    /// True when the order is total: a single maximal chain.
    bool is_chain() const {
        return cover_edges.size() + 1 == nodes.size() &&
               [&] {
                   std::vector<int> up(nodes.size(), 0), down(nodes.size(), 0);
                   for (auto [lo, hi] : cover_edges) {
                       ++up[static_cast<std::size_t>(lo)];
                       ++down[static_cast<std::size_t>(hi)];
                   }
                   for (std::size_t i = 0; i < nodes.size(); ++i)
                       if (up[i] > 1 || down[i] > 1) return false;
                   return true;
               }();
    }
};

/// Breadth-first closure of the cover relation starting from the leftmost
/// partition.
inline EqLattice enumerate_lattice(const ModWord& u) {
    EqLattice lat;
    lat.word = u;
    std::map<std::vector<int>, int> seen;
    std::vector<std::vector<int>> order;
    std::vector<std::pair<int, int>> edges;

    const auto bottom_vec = block_vector(leftmost(u));
    seen.emplace(bottom_vec, 0);
    order.push_back(bottom_vec);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const PartitionedWord p = from_block_vector(u, order[head]);
        for (const auto& q : covers(p)) {
            auto vq = block_vector(q);
            auto [it, inserted] = seen.emplace(vq, static_cast<int>(order.size()));
            if (inserted) order.push_back(std::move(vq));
            edges.emplace_back(static_cast<int>(head), it->second);
        }
    }

    // Renumber into lexicographic node order for deterministic output.
    lat.nodes.reserve(order.size());
    for (const auto& [vec, idx] : seen) lat.nodes.push_back(vec);
    std::vector<int> renum(order.size());
    for (std::size_t old = 0; old < order.size(); ++old) {
        const auto it = std::lower_bound(lat.nodes.begin(), lat.nodes.end(), order[old]);
        renum[old] = static_cast<int>(it - lat.nodes.begin());
    }
    lat.cover_edges.reserve(edges.size());
    for (auto [lo, hi] : edges)
        lat.cover_edges.emplace_back(renum[static_cast<std::size_t>(lo)],
                                     renum[static_cast<std::size_t>(hi)]);
    std::sort(lat.cover_edges.begin(), lat.cover_edges.end());

    const auto top_vec = block_vector(rightmost(u));
    lat.bottom = renum[0];
    const auto it = std::lower_bound(lat.nodes.begin(), lat.nodes.end(), top_vec);
    detail::ensure(it != lat.nodes.end() && *it == top_vec,
                   "enumerate_lattice: rightmost partition not reached from leftmost");
    lat.top = static_cast<int>(it - lat.nodes.begin());
    return lat;
}

/// Deterministic DOT rendering, bottom-to-top rank direction, nodes labeled
/// in pipe notation.
inline std::string hasse_dot(const EqLattice& lat) {
    std::string out = "digraph equitable_lattice {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
        out += "  n" + std::to_string(i) + " [label=\"" +
               format_partitioned_word(lat.node_partition(static_cast<int>(i))) + "\"];\n";
    }
    for (auto [lo, hi] : lat.cover_edges)
        out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace sweeplat
