#include <catch2/catch.hpp>

#include <algorithm>
#include <set>

#include "sweeplat/general_sweep.hpp"
#include "sweeplat/jsonio.hpp"
#include "sweeplat/lattice.hpp"
#include "sweeplat/oracle.hpp"
#include "sweeplat/text.hpp"

using namespace sweeplat;

namespace {

std::set<std::vector<int>> row_sets(const PartitionedWord& p,
                                    const std::vector<SuffixVector>& suffixes) {
    std::set<std::vector<int>> out;
    for (const auto& s : suffixes) out.insert(suffix_rows(p, s));
    return out;
}

}  // namespace

TEST_CASE("left balanced block-suffixes of the worked partition", "[lattice]") {
    const PartitionedWord p = parse_partitioned_word("13|31|4|2|1", 5);
    const auto all = left_bbs_all(p);
    CHECK(row_sets(p, all) ==
          std::set<std::vector<int>>{{4, 5}, {2, 6}, {2, 4, 5, 6}});

    const auto minimal = minimal_left_bbs(p);
    CHECK(row_sets(p, minimal) == std::set<std::vector<int>>{{4, 5}, {2, 6}});
}

TEST_CASE("the rightmost partition has no left balanced block-suffix", "[lattice]") {
    CHECK(left_bbs_all(parse_partitioned_word("1|33|·|1|421", 5)).empty());
    CHECK(minimal_left_bbs(parse_partitioned_word("1|33|·|1|421", 5)).empty());
}

TEST_CASE("single-letter block-suffixes need a zero letter off block 0", "[lattice]") {
    CHECK(left_bbs_all(parse_partitioned_word("0|·|·", 3)).size() == 1);
    CHECK(left_bbs_all(parse_partitioned_word("1|·|·", 3)).empty());
    CHECK(left_bbs_all(parse_partitioned_word("·|·|0", 3)).empty());
}

TEST_CASE("shift right", "[lattice]") {
    const PartitionedWord p = parse_partitioned_word("13|31|4|2|1", 5);
    CHECK(shift_right(p, SuffixVector({1, 0, 0, 1, 0})) ==
          parse_partitioned_word("1|331|4|·|21", 5));
    CHECK(shift_right(p, SuffixVector({0, 1, 1, 0, 0})) ==
          parse_partitioned_word("13|3|1|42|1", 5));

    CHECK_THROWS_AS(shift_right(p, SuffixVector({0, 0, 0, 0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(shift_right(p, SuffixVector({0, 0, 0, 0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(shift_right(p, SuffixVector({3, 0, 0, 0, 0})), std::invalid_argument);
    // Balanced selections only: rows {3,4,5,6} sum to 10 but fill columns
    // unevenly.
    CHECK_THROWS_AS(shift_right(p, SuffixVector({0, 2, 1, 1, 0})), std::invalid_argument);
}

TEST_CASE("covers of the worked lattice", "[lattice]") {
    const auto bottom_covers = covers(parse_partitioned_word("13|31|4|2|1", 5));
    REQUIRE(bottom_covers.size() == 2);
    CHECK(bottom_covers[0] == parse_partitioned_word("1|331|4|·|21", 5));
    CHECK(bottom_covers[1] == parse_partitioned_word("13|3|1|42|1", 5));

    CHECK(covers(parse_partitioned_word("1|33|·|1|421", 5)).empty());

    const auto mid = covers(parse_partitioned_word("1|33|1|4|21", 5));
    REQUIRE(mid.size() == 1);
    CHECK(mid[0] == parse_partitioned_word("1|33|·|1|421", 5));

    CHECK_THROWS_AS(covers(parse_partitioned_word("1|33|14|·|21", 5)), std::invalid_argument);
}

TEST_CASE("leftmost construction and its trace", "[lattice]") {
    std::vector<MoveStep> steps;
    const PartitionedWord p = leftmost_traced(parse_mod_word("1331421", 5), &steps);
    CHECK(p == parse_partitioned_word("13|31|4|2|1", 5));
    const std::vector<MoveStep> expected = {{4, 7}, {4, 6}, {4, 5}, {4, 4}, {3, 7}, {3, 6},
                                            {3, 5}, {4, 3}, {2, 7}, {2, 6}, {1, 7}};
    CHECK(steps == expected);

    // Componentwise maximality against the brute-forced equitable set.
    const auto lv = block_vector(p);
    for (const auto& q : brute_equitable(parse_mod_word("1331421", 5))) {
        const auto qv = block_vector(q);
        for (std::size_t i = 0; i < qv.size(); ++i) CHECK(qv[i] <= lv[i]);
    }
}

TEST_CASE("lattice of the worked example", "[lattice]") {
    const EqLattice lat = enumerate_lattice(parse_mod_word("1331421", 5));
    REQUIRE(lat.nodes.size() == 5);
    REQUIRE(lat.cover_edges.size() == 5);

    CHECK(lat.nodes[0] == std::vector<int>{4, 3, 3, 1, 0, 0, 0});  // rightmost
    CHECK(lat.nodes[1] == std::vector<int>{4, 3, 3, 2, 1, 0, 0});
    CHECK(lat.nodes[2] == std::vector<int>{4, 3, 3, 3, 2, 0, 0});
    CHECK(lat.nodes[3] == std::vector<int>{4, 4, 3, 2, 1, 1, 0});
    CHECK(lat.nodes[4] == std::vector<int>{4, 4, 3, 3, 2, 1, 0});  // leftmost

    CHECK(lat.bottom == 4);
    CHECK(lat.top == 0);
    CHECK(lat.cover_edges == std::vector<std::pair<int, int>>{
                                 {1, 0}, {2, 1}, {3, 1}, {4, 2}, {4, 3}});
    CHECK_FALSE(lat.is_chain());
}

TEST_CASE("lattice node set equals the brute-forced equitable set", "[lattice]") {
    for (const char* text : {"1331421", "0121", "000"}) {
        const int m = text == std::string("1331421") ? 5 : 3;
        const ModWord u = parse_mod_word(text, m);
        std::vector<std::vector<int>> brute;
        for (const auto& p : brute_equitable(u)) brute.push_back(block_vector(p));
        std::sort(brute.begin(), brute.end());
        CHECK(enumerate_lattice(u).nodes == brute);
    }
}

TEST_CASE("join and meet", "[lattice]") {
    const PartitionedWord a = parse_partitioned_word("1|331|4|·|21", 5);
    const PartitionedWord b = parse_partitioned_word("13|3|1|42|1", 5);
    CHECK(join(a, b) == parse_partitioned_word("1|33|1|4|21", 5));
    CHECK(meet(a, b) == parse_partitioned_word("13|31|4|2|1", 5));
    CHECK(join(a, a) == a);
    CHECK(meet(a, a) == a);

    CHECK_THROWS_AS(join(a, parse_partitioned_word("·|·|000", 3)), std::invalid_argument);
}

TEST_CASE("lattice laws on enumerated lattices", "[lattice]") {
    for (const char* text : {"1331421", "0121"}) {
        const int m = text == std::string("1331421") ? 5 : 3;
        const ModWord u = parse_mod_word(text, m);
        const EqLattice lat = enumerate_lattice(u);
        std::vector<PartitionedWord> nodes;
        for (std::size_t i = 0; i < lat.nodes.size(); ++i)
            nodes.push_back(lat.node_partition(static_cast<int>(i)));

        for (const auto& p : nodes)
            for (const auto& q : nodes) {
                CHECK(join(p, q) == join(q, p));
                CHECK(meet(p, q) == meet(q, p));
                CHECK(join(p, meet(p, q)) == p);  // absorption
                CHECK(meet(p, join(p, q)) == p);
                for (const auto& r : nodes) {
                    CHECK(join(p, join(q, r)) == join(join(p, q), r));
                    CHECK(meet(p, meet(q, r)) == meet(meet(p, q), r));
                    CHECK(join(p, meet(q, r)) == meet(join(p, q), join(p, r)));
                }
            }
    }
}

TEST_CASE("failure residue is the maximal left balanced block-suffix", "[lattice]") {
    // Over every equitable partition of every small word: when the inverse
    // presweep fails, the unvisited letters form a left balanced
    // block-suffix that contains every other one.
    std::vector<int> letters;
    for (int m = 2; m <= 3; ++m) {
        for (int n = 1; n <= 4; ++n) {
            letters.assign(static_cast<std::size_t>(n), 0);
            for (;;) {
                const ModWord u(m, letters);
                for (const auto& p : brute_equitable(u)) {
                    const InversePresweepRun run = inverse_presweep_run(p);
                    if (run.success) continue;
                    const PartitionedWord& residue = run.failure->residue;
                    CHECK(residue.word().letter_sum_mod() == 0);
                    CHECK(residue.block_size(0) == 0);

                    std::vector<int> lengths;  // residue as a suffix vector of p
                    for (int k = m - 1; k >= 0; --k) {
                        lengths.push_back(residue.block_size(k));
                        const std::vector<int> host = p.block_content(k);
                        CHECK(residue.block_content(k) ==
                              std::vector<int>(host.end() - residue.block_size(k), host.end()));
                    }
                    const SuffixVector rs(lengths);
                    const auto all = left_bbs_all(p);
                    CHECK(std::find(all.begin(), all.end(), rs) != all.end());
                    for (const auto& s : all)
                        for (int k = 0; k < m; ++k) CHECK(s.length(k) <= rs.length(k));
                }
                bool more = false;
                for (std::size_t j = letters.size(); j-- > 0;) {
                    if (letters[j] + 1 < m) {
                        ++letters[j];
                        std::fill(letters.begin() + static_cast<std::ptrdiff_t>(j) + 1,
                                  letters.end(), 0);
                        more = true;
                        break;
                    }
                }
                if (!more) break;
            }
        }
    }
}

TEST_CASE("coprime rational content gives a chain", "[lattice]") {
    const DyckParams p(3, -2);
    for (const auto& w : enumerate_dyck(p.content())) {
        const EqLattice lat = enumerate_lattice(lift_mod(w, modulus_bound(p.content())));
        CHECK(lat.is_chain());
    }
}

TEST_CASE("DOT output is deterministic", "[lattice]") {
    const EqLattice lat = enumerate_lattice(parse_mod_word("1331421", 5));
    const std::string expected =
        "digraph equitable_lattice {\n"
        "  rankdir=BT;\n"
        "  n0 [label=\"1|33|\xc2\xb7|1|421\"];\n"
        "  n1 [label=\"1|33|1|4|21\"];\n"
        "  n2 [label=\"1|331|4|\xc2\xb7|21\"];\n"
        "  n3 [label=\"13|3|1|42|1\"];\n"
        "  n4 [label=\"13|31|4|2|1\"];\n"
        "  n1 -> n0;\n"
        "  n2 -> n1;\n"
        "  n3 -> n1;\n"
        "  n4 -> n2;\n"
        "  n4 -> n3;\n"
        "}\n";
    CHECK(hasse_dot(lat) == expected);
    CHECK(hasse_dot(lat) == hasse_dot(enumerate_lattice(parse_mod_word("1331421", 5))));
}

TEST_CASE("lattice JSON schema", "[lattice]") {
    const nlohmann::json j = lattice_json(enumerate_lattice(parse_mod_word("1331421", 5)));
    CHECK(j["modulus"] == 5);
    CHECK(j["word"] == "1331421");
    CHECK(j["nodes"].size() == 5);
    CHECK(j["covers"].size() == 5);
    CHECK(j["bottom"] == 4);
    CHECK(j["top"] == 0);
    CHECK(j["nodes"][4] == "13|31|4|2|1");
}
