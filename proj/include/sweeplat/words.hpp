#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

// Core value types shared by the whole library: words over {0,...,m-1},
// words split into m blocks, and level sequences.
//
// Conventions used everywhere:
//   - letter positions i are 1-based (position 1 is the first letter);
//   - block indices k run from 0 to m-1, and blocks are displayed in the
//     order m-1 | m-2 | ... | 0 (block m-1 leftmost, block 0 rightmost);
//   - block contents are stored as sizes in display order, never as
//     divider positions, and empty blocks are legal everywhere.
// All types are immutable values after construction.

namespace sweeplat {

/// Thrown when an internal state contradicts a proven result; this always
/// indicates a bug, never bad input.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

inline void ensure(bool ok, const std::string& what) {
    if (!ok) throw invariant_violation(what);
}

}  // namespace detail

/// A word over the alphabet {0, 1, ..., m-1} together with its modulus m.
class ModWord {
public:
    ModWord() : modulus_(1) {}

    ModWord(int modulus, std::vector<int> letters)
        : modulus_(modulus), letters_(std::move(letters)) {
        detail::require(modulus_ >= 1, "ModWord: modulus must be >= 1");
        for (int x : letters_)
            detail::require(0 <= x && x < modulus_,
                            "ModWord: letter out of range [0, m)");
    }

    int modulus() const noexcept { return modulus_; }
    int size() const noexcept { return static_cast<int>(letters_.size()); }
    bool empty() const noexcept { return letters_.empty(); }
    const std::vector<int>& letters() const noexcept { return letters_; }

    /// 1-based letter access.
    int letter(int i) const {
        if (i < 1 || i > size())
            throw std::out_of_range("ModWord: letter index out of range");
        return letters_[static_cast<std::size_t>(i - 1)];
    }

    /// |u|: the plain integer sum of the letters.
    long long letter_sum() const noexcept {
        return std::accumulate(letters_.begin(), letters_.end(), 0LL);
    }

    /// |u| mod m.
    int letter_sum_mod() const noexcept {
        return static_cast<int>(letter_sum() % modulus_);
    }

    bool operator==(const ModWord&) const = default;

private:
    int modulus_;
    std::vector<int> letters_;
};

/// A ModWord split into m consecutive blocks, indexed m-1 down to 0 in
/// display order. The underlying word is exactly the concatenation of the
/// blocks read left to right.
class PartitionedWord {
public:
    PartitionedWord() : word_(), display_sizes_{0}, display_starts_{0, 0} {}

    /// sizes_display holds the block sizes in display order, i.e.
    /// sizes_display[0] is the size of block m-1 and sizes_display[m-1]
    /// the size of block 0.
    PartitionedWord(ModWord word, std::vector<int> sizes_display)
        : word_(std::move(word)), display_sizes_(std::move(sizes_display)) {
        detail::require(static_cast<int>(display_sizes_.size()) == word_.modulus(),
                        "PartitionedWord: need exactly m block sizes");
        long long total = 0;
        for (int s : display_sizes_) {
            detail::require(s >= 0, "PartitionedWord: negative block size");
            total += s;
        }
        detail::require(total == word_.size(),
                        "PartitionedWord: block sizes must sum to word length");
        display_starts_.resize(display_sizes_.size() + 1, 0);
        for (std::size_t d = 0; d < display_sizes_.size(); ++d)
            display_starts_[d + 1] = display_starts_[d] + display_sizes_[d];
    }

    /// All letters placed in a single block k, the seed state of the
    /// rightmost (k = 0) and leftmost (k = m-1) constructions.
    static PartitionedWord all_in_block(const ModWord& w, int k) {
        detail::require(0 <= k && k < w.modulus(),
                        "PartitionedWord: block index out of range");
        std::vector<int> sizes(static_cast<std::size_t>(w.modulus()), 0);
        sizes[static_cast<std::size_t>(w.modulus() - 1 - k)] = w.size();
        return PartitionedWord(w, std::move(sizes));
    }

    const ModWord& word() const noexcept { return word_; }
    int modulus() const noexcept { return word_.modulus(); }
    int size() const noexcept { return word_.size(); }
    int letter(int i) const { return word_.letter(i); }

    int block_size(int k) const {
        check_block(k);
        return display_sizes_[display_index(k)];
    }

    /// 1-based position of the first letter of block k (size()+1 when all
    /// blocks from k leftward are empty).
    int block_begin(int k) const {
        check_block(k);
        return display_starts_[display_index(k)] + 1;
    }

    /// Letters of block k in order.
    std::vector<int> block_content(int k) const {
        const int b = block_begin(k), s = block_size(k);
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(s));
        for (int i = b; i < b + s; ++i) out.push_back(word_.letter(i));
        return out;
    }

    /// Block index of the 1-based letter position i.
    int block_of(int i) const {
        if (i < 1 || i > size())
            throw std::out_of_range("PartitionedWord: letter index out of range");
        // display_starts_ is nondecreasing; find the display slot holding i-1.
        auto it = std::upper_bound(display_starts_.begin(), display_starts_.end(), i - 1);
        const int d = static_cast<int>(it - display_starts_.begin()) - 1;
        return modulus() - 1 - d;
    }

    const std::vector<int>& display_sizes() const noexcept { return display_sizes_; }

    bool operator==(const PartitionedWord& other) const {
        return word_ == other.word_ && display_sizes_ == other.display_sizes_;
    }

private:
    void check_block(int k) const {
        if (k < 0 || k >= modulus())
            throw std::out_of_range("PartitionedWord: block index out of range");
    }
    std::size_t display_index(int k) const {
        return static_cast<std::size_t>(modulus() - 1 - k);
    }

    ModWord word_;
    std::vector<int> display_sizes_;
    std::vector<int> display_starts_;  // prefix sums, length m+1
};

/// Sequence of levels attached to letter positions 1..N; entries are
/// residues in [0, m) when modular, plain integers otherwise.
struct LevelSequence {
    std::vector<long long> levels;
    bool modular = false;

    int size() const noexcept { return static_cast<int>(levels.size()); }

    /// 1-based access.
    long long level(int j) const {
        if (j < 1 || j > size())
            throw std::out_of_range("LevelSequence: index out of range");
        return levels[static_cast<std::size_t>(j - 1)];
    }

    bool operator==(const LevelSequence&) const = default;
};

/// Modular levels: level(j) = (sum of the first j letters) mod m.
inline LevelSequence levels_mod(const ModWord& w) {
    LevelSequence out;
    out.modular = true;
    out.levels.reserve(static_cast<std::size_t>(w.size()));
    long long acc = 0;
    for (int x : w.letters()) {
        acc = (acc + x) % w.modulus();
        out.levels.push_back(acc);
    }
    return out;
}

/// Block index of letter position i.
inline int block_of(const PartitionedWord& p, int i) { return p.block_of(i); }

/// The nonincreasing sequence (block_of(p,1), ..., block_of(p,N)).
inline std::vector<int> block_vector(const PartitionedWord& p) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(p.size()));
    for (int k = p.modulus() - 1; k >= 0; --k)
        out.insert(out.end(), static_cast<std::size_t>(p.block_size(k)), k);
    return out;
}

/// Inverse of block_vector: rebuild a partition of w from a nonincreasing
/// block-index sequence.
inline PartitionedWord from_block_vector(const ModWord& w, const std::vector<int>& v) {
    detail::require(static_cast<int>(v.size()) == w.size(),
                    "from_block_vector: index sequence length must equal word length");
    std::vector<int> sizes(static_cast<std::size_t>(w.modulus()), 0);
    int prev = w.modulus() - 1;
    for (int k : v) {
        detail::require(0 <= k && k < w.modulus(),
                        "from_block_vector: block index out of range");
        detail::require(k <= prev, "from_block_vector: sequence must be nonincreasing");
        prev = k;
        ++sizes[static_cast<std::size_t>(w.modulus() - 1 - k)];
    }
    return PartitionedWord(w, std::move(sizes));
}

}  // namespace sweeplat
