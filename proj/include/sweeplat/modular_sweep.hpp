#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "words.hpp"

// The modular sweep pipeline: presweep splits a word into level-indexed
// blocks, forget concatenates the blocks back into a word, and the sweep is
// their composition. The inverse presweep peels letters off block fronts,
// tracking the running level; it either rebuilds the original word or stops
// on an empty block, leaving a residue.

namespace sweeplat {

/// Sort w into blocks by modular level: block k holds, in right-to-left
/// input order, exactly the letters whose level equals k.
inline PartitionedWord presweep(const ModWord& w) {
    const int m = w.modulus();
    const LevelSequence lv = levels_mod(w);
    std::vector<std::vector<int>> buckets(static_cast<std::size_t>(m));
    for (int j = 1; j <= w.size(); ++j)
        buckets[static_cast<std::size_t>(lv.level(j))].push_back(w.letter(j));
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(w.size()));
    std::vector<int> sizes;
    sizes.reserve(static_cast<std::size_t>(m));
    for (int k = m - 1; k >= 0; --k) {
        auto& b = buckets[static_cast<std::size_t>(k)];
        letters.insert(letters.end(), b.rbegin(), b.rend());
        sizes.push_back(static_cast<int>(b.size()));
    }
    return PartitionedWord(ModWord(m, std::move(letters)), std::move(sizes));
}

/// Concatenate the blocks in display order m-1 ... 0.
inline ModWord forget(const PartitionedWord& p) { return p.word(); }

inline ModWord sweep_mod(const ModWord& w) { return forget(presweep(w)); }

/// One letter taken by the inverse presweep: its 1-based position in the
/// partitioned word and the level (= block) it was taken from.
struct PresweepVisit {
    int letter_index = 0;
    int level = 0;
    bool operator==(const PresweepVisit&) const = default;
};

/// Outcome of a failed inverse presweep: the unvisited letters, kept in
/// their blocks (a block-suffix of the input), plus the visit order.
struct PresweepFailure {
    PartitionedWord residue;
    std::vector<PresweepVisit> visited_order;
};

/// Snapshot after i letters have been removed: the running level, the word
/// recovered so far, and what remains of the partition.
struct InversePresweepState {
    int level = 0;
    std::vector<int> recovered;
    PartitionedWord remaining;
    bool operator==(const InversePresweepState&) const = default;
};

struct InversePresweepRun {
    bool success = false;
    ModWord word;                           // set on success
    std::optional<PresweepFailure> failure; // set on failure
    std::vector<PresweepVisit> visits;
    std::vector<InversePresweepState> states;  // only when recording
};

namespace detail {

/// Residue of a partially consumed partition: taken[k] letters are gone
/// from the front of block k.
inline PartitionedWord block_suffix_rest(const PartitionedWord& p,
                                         const std::vector<int>& taken) {
    const int m = p.modulus();
    std::vector<int> letters;
    std::vector<int> sizes;
    sizes.reserve(static_cast<std::size_t>(m));
    for (int k = m - 1; k >= 0; --k) {
        const int rest = p.block_size(k) - taken[static_cast<std::size_t>(k)];
        sizes.push_back(rest);
        const int begin = p.block_begin(k) + taken[static_cast<std::size_t>(k)];
        for (int i = begin; i < p.block_begin(k) + p.block_size(k); ++i)
            letters.push_back(p.letter(i));
    }
    return PartitionedWord(ModWord(m, std::move(letters)), std::move(sizes));
}

}  // namespace detail

/// Run the inverse presweep. Starting from level |u|_m, repeatedly take the
/// first remaining letter of the block named by the current level, subtract
/// it, and prepend it to the output word. Stops early when that block is
/// empty; this is a normal outcome, not an error. An empty partition
/// succeeds with the empty word.
inline InversePresweepRun inverse_presweep_run(const PartitionedWord& p,
                                               bool record_states = false) {
    const int m = p.modulus();
    const int n = p.size();
    InversePresweepRun run;
    std::vector<int> taken(static_cast<std::size_t>(m), 0);
    std::vector<int> recovered_rev;  // recovered word, built back to front
    recovered_rev.reserve(static_cast<std::size_t>(n));

    int level = p.word().letter_sum_mod();
    auto snapshot = [&]() {
        InversePresweepState st;
        st.level = level;
        st.recovered.assign(recovered_rev.rbegin(), recovered_rev.rend());
        st.remaining = detail::block_suffix_rest(p, taken);
        run.states.push_back(std::move(st));
    };
    if (record_states) snapshot();

    for (int i = 0; i < n; ++i) {
        const std::size_t k = static_cast<std::size_t>(level);
        if (taken[k] >= p.block_size(level)) {
            run.success = false;
            run.failure = PresweepFailure{detail::block_suffix_rest(p, taken), run.visits};
            return run;
        }
        const int pos = p.block_begin(level) + taken[k];
        const int x = p.letter(pos);
        ++taken[k];
        run.visits.push_back(PresweepVisit{pos, level});
        recovered_rev.push_back(x);
        level = static_cast<int>(((level - x) % m + m) % m);
        if (record_states) snapshot();
    }

    run.success = true;
    run.word = ModWord(m, std::vector<int>(recovered_rev.rbegin(), recovered_rev.rend()));
    return run;
}

inline std::variant<ModWord, PresweepFailure> inverse_presweep(const PartitionedWord& p) {
    InversePresweepRun run = inverse_presweep_run(p);
    if (run.success) return run.word;
    return *std::move(run.failure);
}

}  // namespace sweeplat
