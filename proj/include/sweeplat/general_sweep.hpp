#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <vector>

#include "equitable.hpp"
#include "words.hpp"

// The sweep map on words over the integers, inverted by lifting to residues
// modulo a large enough m, plus the Dyck-word restriction and the zeta map
// on the two-letter rational case.

namespace sweeplat {

/// Declared letter multiset: e_j copies of a_j with distinct values a_j.
class Content {
public:
    Content() = default;

    explicit Content(std::vector<std::pair<int, int>> items) : items_(std::move(items)) {
        std::sort(items_.begin(), items_.end());
        for (std::size_t i = 0; i < items_.size(); ++i) {
            detail::require(items_[i].second >= 1, "Content: multiplicity must be >= 1");
            detail::require(i == 0 || items_[i - 1].first != items_[i].first,
                            "Content: duplicate letter value");
        }
    }

    /// (value, multiplicity) pairs, sorted by value.
    const std::vector<std::pair<int, int>>& items() const noexcept { return items_; }

    int total_count() const noexcept {
        int n = 0;
        for (auto [a, e] : items_) n += e;
        return n;
    }

    long long weighted_abs_sum() const noexcept {
        long long s = 0;
        for (auto [a, e] : items_) s += static_cast<long long>(e) * std::abs(a);
        return s;
    }

    bool operator==(const Content&) const = default;

private:
    std::vector<std::pair<int, int>> items_;
};

/// A word over the integers realizing a declared content.
class IntWord {
public:
    IntWord() = default;

    IntWord(Content content, std::vector<int> letters)
        : content_(std::move(content)), letters_(std::move(letters)) {
        std::map<int, int> counts;
        for (int x : letters_) ++counts[x];
        const std::vector<std::pair<int, int>> seen(counts.begin(), counts.end());
        detail::require(seen == content_.items(),
                        "IntWord: letters do not realize the declared content");
    }

    static IntWord from_letters(std::vector<int> letters) {
        std::map<int, int> counts;
        for (int x : letters) ++counts[x];
        return IntWord(Content({counts.begin(), counts.end()}), std::move(letters));
    }

    const Content& content() const noexcept { return content_; }
    const std::vector<int>& letters() const noexcept { return letters_; }
    int size() const noexcept { return static_cast<int>(letters_.size()); }

    /// 1-based letter access.
    int letter(int j) const {
        if (j < 1 || j > size())
            throw std::out_of_range("IntWord: letter index out of range");
        return letters_[static_cast<std::size_t>(j - 1)];
    }

    bool operator==(const IntWord&) const = default;

private:
    Content content_;
    std::vector<int> letters_;
};

/// Two-letter rational Dyck content: the letter a occurs -b times and the
/// letter b occurs a times, so complete words sum to zero.
struct DyckParams {
    int a = 1;
    int b = -1;

    DyckParams() = default;
    DyckParams(int a_, int b_) : a(a_), b(b_) {
        detail::require(a > 0, "DyckParams: a must be positive");
        detail::require(b < 0, "DyckParams: b must be negative");
    }

    Content content() const { return Content({{a, -b}, {b, a}}); }

    bool operator==(const DyckParams&) const = default;
};

/// Plain integer levels: level(j) = sum of the first j letters.
inline LevelSequence levels_int(const IntWord& w) {
    LevelSequence out;
    out.modular = false;
    out.levels.reserve(static_cast<std::size_t>(w.size()));
    long long acc = 0;
    for (int x : w.letters()) {
        acc += x;
        out.levels.push_back(acc);
    }
    return out;
}

/// Sort letters by integer level: negative levels first in decreasing order
/// (-1, -2, ...), then the positive levels decreasing down to 0; within a
/// level, right-to-left input order.
inline IntWord sweep_int(const IntWord& w) {
    const LevelSequence lv = levels_int(w);
    std::map<long long, std::vector<int>> buckets;  // level -> letters in input order
    for (int j = 1; j <= w.size(); ++j) buckets[lv.level(j)].push_back(w.letter(j));

    std::vector<long long> level_order;
    for (auto it = buckets.rbegin(); it != buckets.rend(); ++it)
        if (it->first < 0) level_order.push_back(it->first);  // -1, -2, ...
    for (auto it = buckets.rbegin(); it != buckets.rend(); ++it)
        if (it->first >= 0) level_order.push_back(it->first);  // max, ..., 1, 0

    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(w.size()));
    for (long long k : level_order) {
        const auto& b = buckets[k];
        out.insert(out.end(), b.rbegin(), b.rend());
    }
    return IntWord(w.content(), std::move(out));
}

/// Smallest modulus strictly exceeding the total absolute letter weight, so
/// that distinct letters and distinct reachable levels stay distinct mod m.
inline int modulus_bound(const Content& c) {
    const long long m = 1 + c.weighted_abs_sum();
    detail::require(m <= 1'000'000'000LL, "modulus_bound: content too heavy");
    return static_cast<int>(m);
}

/// Replace each letter by its nonnegative residue mod m.
inline ModWord lift_mod(const IntWord& w, int m) {
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(w.size()));
    for (int x : w.letters()) letters.push_back(static_cast<int>(((x % m) + m) % m));
    return ModWord(m, std::move(letters));
}

/// Inverse of sweep_int via the modulus lift: lift, invert the modular
/// sweep, and map residues back to the unique content letters.
inline IntWord unsweep_int(const IntWord& u) {
    const int m = modulus_bound(u.content());
    std::map<int, int> back;  // residue -> letter value
    for (auto [a, e] : u.content().items()) {
        const int r = static_cast<int>(((a % m) + m) % m);
        detail::ensure(back.emplace(r, a).second, "unsweep_int: residue collision");
    }
    const ModWord w = unsweep_mod(lift_mod(u, m));
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(w.size()));
    for (int r : w.letters()) {
        const auto it = back.find(r);
        detail::ensure(it != back.end(), "unsweep_int: residue without a content letter");
        letters.push_back(it->second);
    }
    return IntWord(u.content(), std::move(letters));
}

/// Dyck words: all integer levels nonnegative.
inline bool is_dyck(const IntWord& w) {
    long long acc = 0;
    for (int x : w.letters()) {
        acc += x;
        if (acc < 0) return false;
    }
    return true;
}

namespace detail {

inline IntWord negate(const IntWord& w) {
    std::vector<std::pair<int, int>> items;
    for (auto [a, e] : w.content().items()) items.emplace_back(-a, e);
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(w.size()));
    for (int x : w.letters()) letters.push_back(-x);
    return IntWord(Content(std::move(items)), std::move(letters));
}

inline IntWord reverse(const IntWord& w) {
    std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
    return IntWord(w.content(), std::move(letters));
}

inline void check_dyck_input(const IntWord& w, const DyckParams& p, const char* who) {
    require(w.content() == p.content(),
            std::string(who) + ": word does not realize the a,b content");
    require(is_dyck(w), std::string(who) + ": word is not Dyck");
}

}  // namespace detail

/// The zeta map, computed as -(rev . sweep . rev)(-w).
inline IntWord zeta(const IntWord& w, const DyckParams& p) {
    detail::check_dyck_input(w, p, "zeta");
    return detail::negate(detail::reverse(sweep_int(detail::reverse(detail::negate(w)))));
}

/// Direct description of zeta: sort letters by the level at the start of
/// their step (the sum of the letters before them), for k = 0, 1, 2, ...
/// and then k = min, ..., -2, -1, reading left to right within each k.
/// Agrees with zeta; kept as an independent cross-check.
inline IntWord zeta_direct(const IntWord& w, const DyckParams& p) {
    detail::check_dyck_input(w, p, "zeta_direct");
    std::map<long long, std::vector<int>> buckets;  // start level -> letters
    long long acc = 0;
    for (int x : w.letters()) {
        buckets[acc].push_back(x);
        acc += x;
    }
    std::vector<long long> level_order;
    for (const auto& [k, b] : buckets)
        if (k >= 0) level_order.push_back(k);  // 0, 1, 2, ...
    for (const auto& [k, b] : buckets)
        if (k < 0) level_order.push_back(k);  // min, ..., -1
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(w.size()));
    for (long long k : level_order) {
        const auto& b = buckets[k];
        out.insert(out.end(), b.begin(), b.end());
    }
    return IntWord(w.content(), std::move(out));
}

/// Inverse of zeta: -(rev . unsweep . rev)(-u).
inline IntWord unzeta(const IntWord& u, const DyckParams& p) {
    detail::check_dyck_input(u, p, "unzeta");
    return detail::negate(detail::reverse(unsweep_int(detail::reverse(detail::negate(u)))));
}

/// All Dyck words of a content, in lexicographic order, by backtracking on
/// nonnegative prefix sums.
inline std::vector<IntWord> enumerate_dyck(const Content& c) {
    std::vector<IntWord> out;
    std::vector<int> word;
    std::vector<int> remaining;
    for (auto [a, e] : c.items()) remaining.push_back(e);
    const int n = c.total_count();

    auto rec = [&](auto&& self, long long prefix) -> void {
        if (static_cast<int>(word.size()) == n) {
            out.emplace_back(c, word);
            return;
        }
        for (std::size_t j = 0; j < c.items().size(); ++j) {
            const int a = c.items()[j].first;
            if (remaining[j] == 0 || prefix + a < 0) continue;
            --remaining[j];
            word.push_back(a);
            self(self, prefix + a);
            word.pop_back();
            ++remaining[j];
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace sweeplat
