#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "equitable.hpp"
#include "general_sweep.hpp"
#include "lattice.hpp"
#include "text.hpp"
#include "words.hpp"

// Exhaustive small-instance verification. Each check re-derives its
// expected answer by brute force (full enumeration of words, divider
// placements, or Dyck sets) rather than through the construction it is
// checking, so agreement is evidence rather than tautology.

namespace sweeplat {

struct CheckResult {
    std::string claim;
    bool pass = true;
    long long cases = 0;
    std::string counterexample;  // empty when passing, always set when failing
};

struct VerifyReport {
    std::string instance;
    std::vector<CheckResult> checks;
    long long words_examined = 0;
    long long partitions_examined = 0;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.pass; });
    }

    std::string render_text() const {
        std::string out = instance + "\n";
        for (const auto& c : checks) {
            out += (c.pass ? "  pass  " : "  FAIL  ") + c.claim + " (" +
                   std::to_string(c.cases) + " cases)";
            if (!c.pass) out += "  counterexample: " + c.counterexample;
            out += '\n';
        }
        out += "  words examined: " + std::to_string(words_examined) +
               ", partitions examined: " + std::to_string(partitions_examined) + "\n";
        return out;
    }
};

struct VerifyBudget {
    long long max_words = 1'000'000;
    long long max_partitions_per_word = 1'000'000;
};

namespace detail {

class Checker {
public:
    explicit Checker(std::string claim) { result_.claim = std::move(claim); }

    void observe(bool ok, const std::string& witness) {
        ++result_.cases;
        if (!ok && result_.pass) {
            result_.pass = false;
            result_.counterexample = witness;
        }
    }

    CheckResult take() { return std::move(result_); }

private:
    CheckResult result_;
};

/// Step to the next weak composition of the same total. Enumeration starts
/// from (n, 0, ..., 0): move one unit from the rightmost positive non-final
/// slot into the slot after it, gathering everything further right there.
inline bool next_composition(std::vector<int>& sizes) {
    const int m = static_cast<int>(sizes.size());
    int d = m - 2;
    while (d >= 0 && sizes[static_cast<std::size_t>(d)] == 0) --d;
    if (d < 0) return false;
    --sizes[static_cast<std::size_t>(d)];
    int tail = 1;
    for (int e = d + 1; e < m; ++e) {
        tail += sizes[static_cast<std::size_t>(e)];
        sizes[static_cast<std::size_t>(e)] = 0;
    }
    sizes[static_cast<std::size_t>(d + 1)] = tail;
    return true;
}

inline long long compositions_count(int n, int parts) {
    // C(n + parts - 1, parts - 1), capped to avoid overflow.
    long long r = 1;
    for (int i = 1; i < parts; ++i) {
        r = r * (n + i) / i;
        if (r > 1'000'000'000'000LL) return r;
    }
    return r;
}

inline bool next_word(std::vector<int>& letters, int m) {
    for (std::size_t j = letters.size(); j-- > 0;) {
        if (letters[j] + 1 < m) {
            ++letters[j];
            std::fill(letters.begin() + static_cast<std::ptrdiff_t>(j) + 1, letters.end(), 0);
            return true;
        }
    }
    return false;
}

inline long long pow_ll(long long base, int exp, long long cap) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > cap) return cap + 1;
    }
    return r;
}

inline std::string describe(const ModWord& w) {
    return "m=" + std::to_string(w.modulus()) + " w=" + format_mod_word(w);
}

}  // namespace detail

/// All equitable partitions of u by exhausting every divider placement;
/// independent of the lattice's cover-closure enumeration.
inline std::vector<PartitionedWord> brute_equitable(const ModWord& u) {
    std::vector<PartitionedWord> out;
    std::vector<int> sizes(static_cast<std::size_t>(u.modulus()), 0);
    sizes.front() = u.size();
    do {
        PartitionedWord p(u, sizes);
        if (is_equitable(p)) out.push_back(std::move(p));
    } while (detail::next_composition(sizes));
    return out;
}

/// The modular sweep over all m^N words is injective and unsweep inverts it
/// pointwise.
inline VerifyReport verify_sweep_bijective(int m, int N, const VerifyBudget& budget = {}) {
    detail::require(m >= 1 && N >= 0, "verify_sweep_bijective: bad instance");
    const long long total = detail::pow_ll(m, N, budget.max_words);
    detail::require(total <= budget.max_words, "verify_sweep_bijective: budget exceeded");

    VerifyReport report;
    report.instance = "sweep bijectivity, m=" + std::to_string(m) + " N=" + std::to_string(N);
    detail::Checker permuted("sweep output is a permutation of its input letters");
    detail::Checker inverted("unsweep inverts sweep pointwise");
    detail::Checker injective("sweep is injective over all words");

    std::vector<std::vector<int>> images;
    images.reserve(static_cast<std::size_t>(total));
    std::vector<int> letters(static_cast<std::size_t>(N), 0);
    do {
        const ModWord w(m, letters);
        ++report.words_examined;
        const ModWord u = sweep_mod(w);
        auto ws = letters, us = u.letters();
        std::sort(ws.begin(), ws.end());
        std::sort(us.begin(), us.end());
        permuted.observe(ws == us, detail::describe(w));
        inverted.observe(unsweep_mod(u) == w, detail::describe(w));
        images.push_back(u.letters());
    } while (detail::next_word(letters, m));

    std::sort(images.begin(), images.end());
    const bool distinct = std::adjacent_find(images.begin(), images.end()) == images.end();
    injective.observe(distinct, distinct ? "" : "two words share a sweep image");

    report.checks.push_back(permuted.take());
    report.checks.push_back(injective.take());
    report.checks.push_back(inverted.take());
    return report;
}

/// For every word: the successful partition is unique and equals the
/// rightmost; the successful construction converges there from every
/// equitable start; leftmost/rightmost are componentwise extreme; meet and
/// join stay equitable and distribute; covers found through minimal left
/// balanced block-suffixes coincide with the order-theoretic covers; and
/// the cover-closure reaches exactly the brute-forced node set.
inline VerifyReport verify_theorems(int m, int N, const VerifyBudget& budget = {}) {
    detail::require(m >= 1 && N >= 0, "verify_theorems: bad instance");
    const long long total = detail::pow_ll(m, N, budget.max_words);
    detail::require(total <= budget.max_words, "verify_theorems: budget exceeded");
    detail::require(detail::compositions_count(N, m) <= budget.max_partitions_per_word,
                    "verify_theorems: budget exceeded");

    VerifyReport report;
    report.instance = "equitable-partition theorems, m=" + std::to_string(m) +
                      " N=" + std::to_string(N);
    detail::Checker succ_equitable("every successful partition is equitable");
    detail::Checker succ_unique("every word has exactly one successful partition");
    detail::Checker succ_rightmost("the successful partition is the rightmost one");
    detail::Checker converge("the successful construction converges from every equitable start");
    detail::Checker right_min("rightmost is the componentwise block-index minimum");
    detail::Checker left_max("leftmost is the componentwise block-index maximum");
    detail::Checker closure("meet and join of equitable partitions are equitable");
    detail::Checker distrib("join distributes over meet");
    detail::Checker cover_match("suffix-shift covers equal order covers");
    detail::Checker bfs_nodes("cover closure reaches exactly the brute-forced equitable set");

    std::vector<int> letters(static_cast<std::size_t>(N), 0);
    do {
        const ModWord u(m, letters);
        ++report.words_examined;
        const std::string wit = detail::describe(u);

        // Scan every divider placement once: equitable set + successful count.
        std::vector<std::vector<int>> equit;  // block vectors, collected sorted later
        int successful_count = 0;
        std::vector<int> succ_vec;
        std::vector<int> sizes(static_cast<std::size_t>(m), 0);
        sizes.front() = N;
        do {
            const PartitionedWord p(u, sizes);
            ++report.partitions_examined;
            const bool eq = is_equitable(p);
            if (eq) equit.push_back(block_vector(p));
            if (is_successful(p)) {
                ++successful_count;
                succ_vec = block_vector(p);
                succ_equitable.observe(eq, wit + " p=" + format_partitioned_word(p));
            }
        } while (detail::next_composition(sizes));
        std::sort(equit.begin(), equit.end());

        succ_unique.observe(successful_count == 1,
                            wit + " successful=" + std::to_string(successful_count));
        const auto right_vec = block_vector(rightmost(u));
        const auto left_vec = block_vector(leftmost(u));
        succ_rightmost.observe(successful_count == 1 && succ_vec == right_vec, wit);

        const auto componentwise_le = [](const std::vector<int>& a, const std::vector<int>& b) {
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] > b[i]) return false;
            return true;
        };
        bool right_ok = std::binary_search(equit.begin(), equit.end(), right_vec);
        bool left_ok = std::binary_search(equit.begin(), equit.end(), left_vec);
        for (const auto& v : equit) {
            right_ok = right_ok && componentwise_le(right_vec, v);
            left_ok = left_ok && componentwise_le(v, left_vec);
        }
        right_min.observe(right_ok, wit);
        left_max.observe(left_ok, wit);

        for (const auto& v : equit) {
            const PartitionedWord q = from_block_vector(u, v);
            converge.observe(block_vector(successful_from(q)) == right_vec,
                             wit + " start=" + format_partitioned_word(q));
        }

        // Meet/join closure and distributivity over the brute-forced set.
        const auto in_set = [&](const PartitionedWord& p) {
            return std::binary_search(equit.begin(), equit.end(), block_vector(p));
        };
        for (const auto& va : equit) {
            const PartitionedWord a = from_block_vector(u, va);
            for (const auto& vb : equit) {
                const PartitionedWord b = from_block_vector(u, vb);
                const PartitionedWord j = join(a, b), mt = meet(a, b);
                closure.observe(is_equitable(j) && in_set(j) && is_equitable(mt) && in_set(mt),
                                wit + " a=" + format_partitioned_word(a) +
                                    " b=" + format_partitioned_word(b));
            }
        }
        for (const auto& va : equit)
            for (const auto& vb : equit)
                for (const auto& vc : equit) {
                    const PartitionedWord a = from_block_vector(u, va);
                    const PartitionedWord b = from_block_vector(u, vb);
                    const PartitionedWord c = from_block_vector(u, vc);
                    distrib.observe(join(a, meet(b, c)) == meet(join(a, b), join(a, c)),
                                    wit + " a=" + format_partitioned_word(a) +
                                        " b=" + format_partitioned_word(b) +
                                        " c=" + format_partitioned_word(c));
                }

        // Order-theoretic covers from the raw node set, versus covers().
        // order_lt(lo, hi): lo strictly below hi, i.e. hi's block indices
        // componentwise <= lo's and the vectors differ.
        const auto order_lt = [&](const std::vector<int>& lo, const std::vector<int>& hi) {
            return lo != hi && componentwise_le(hi, lo);
        };
        for (const auto& v : equit) {
            std::vector<std::vector<int>> order_covers;
            for (const auto& w2 : equit) {
                if (!order_lt(v, w2)) continue;
                bool covering = true;
                for (const auto& mid : equit)
                    if (order_lt(v, mid) && order_lt(mid, w2)) {
                        covering = false;
                        break;
                    }
                if (covering) order_covers.push_back(w2);
            }
            std::sort(order_covers.begin(), order_covers.end());
            std::vector<std::vector<int>> shift_covers;
            for (const auto& c : covers(from_block_vector(u, v)))
                shift_covers.push_back(block_vector(c));
            std::sort(shift_covers.begin(), shift_covers.end());
            cover_match.observe(order_covers == shift_covers,
                                wit + " p=" + format_partitioned_word(from_block_vector(u, v)));
        }

        std::vector<std::vector<int>> bfs = enumerate_lattice(u).nodes;
        bfs_nodes.observe(bfs == equit, wit);
    } while (detail::next_word(letters, m));

    report.checks.push_back(succ_equitable.take());
    report.checks.push_back(succ_unique.take());
    report.checks.push_back(succ_rightmost.take());
    report.checks.push_back(converge.take());
    report.checks.push_back(right_min.take());
    report.checks.push_back(left_max.take());
    report.checks.push_back(closure.take());
    report.checks.push_back(distrib.take());
    report.checks.push_back(cover_match.take());
    report.checks.push_back(bfs_nodes.take());
    return report;
}

/// Zeta on each enumerated rational Dyck set: a bijection, equal to its
/// direct description, inverted by unzeta, Dyck-preserving under the plain
/// sweep, with the cycle-lemma count and chain-shaped lifted lattices in
/// the coprime case.
inline VerifyReport verify_zeta(const std::vector<DyckParams>& params,
                                const VerifyBudget& budget = {}) {
    VerifyReport report;
    report.instance = "zeta on rational Dyck sets:";
    detail::Checker count_check("enumerated size matches the cycle-lemma count (coprime case)");
    detail::Checker sweep_dyck("sweep preserves the Dyck property");
    detail::Checker bijection("zeta permutes the enumerated Dyck set");
    detail::Checker direct("zeta equals its direct description");
    detail::Checker inverse("unzeta inverts zeta pointwise");
    detail::Checker chain("coprime lifted words have chain lattices");

    for (const DyckParams& p : params) {
        report.instance += " (" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
        const auto dyck = enumerate_dyck(p.content());
        report.words_examined += static_cast<long long>(dyck.size());
        detail::require(static_cast<long long>(dyck.size()) <= budget.max_words,
                        "verify_zeta: budget exceeded");
        const std::string inst = "a=" + std::to_string(p.a) + " b=" + std::to_string(p.b);

        const int g = std::gcd(p.a, -p.b);
        if (g == 1) {
            // Cycle lemma: |D_{a,b}| = C(a - b, a) / (a - b).
            const int n = p.a - p.b;
            long long binom = 1;
            for (int i = 1; i <= p.a; ++i) binom = binom * (n - p.a + i) / i;
            count_check.observe(static_cast<long long>(dyck.size()) == binom / n,
                                inst + " enumerated=" + std::to_string(dyck.size()));
        }

        std::set<std::vector<int>> dyck_set;
        for (const auto& w : dyck) dyck_set.insert(w.letters());
        std::set<std::vector<int>> image;
        for (const auto& w : dyck) {
            const std::string wit = inst + " w=" + format_signed_letters(w.letters());
            sweep_dyck.observe(is_dyck(sweep_int(w)), wit);
            const IntWord z = zeta(w, p);
            image.insert(z.letters());
            bijection.observe(dyck_set.count(z.letters()) == 1, wit);
            direct.observe(z == zeta_direct(w, p), wit);
            inverse.observe(unzeta(z, p) == w, wit);
            if (g == 1) {
                const EqLattice lat =
                    enumerate_lattice(lift_mod(w, modulus_bound(p.content())));
                chain.observe(lat.is_chain(), wit);
            }
        }
        bijection.observe(image == dyck_set, inst + " image misses some Dyck word");
    }

    report.checks.push_back(count_check.take());
    report.checks.push_back(sweep_dyck.take());
    report.checks.push_back(bijection.take());
    report.checks.push_back(direct.take());
    report.checks.push_back(inverse.take());
    report.checks.push_back(chain.take());
    return report;
}

}  // namespace sweeplat
