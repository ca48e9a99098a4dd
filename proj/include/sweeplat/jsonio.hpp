#pragma once

#include <json.hpp>

#include "lattice.hpp"
#include "oracle.hpp"
#include "scheduling.hpp"
#include "text.hpp"

// Stable JSON renderings of the machine-facing outputs. nlohmann::json
// keeps object keys sorted, so every export is byte-deterministic.

namespace sweeplat {

inline nlohmann::json lattice_json(const EqLattice& lat) {
    nlohmann::json j;
    j["modulus"] = lat.word.modulus();
    j["word"] = format_mod_word(lat.word);
    auto& nodes = j["nodes"] = nlohmann::json::array();
    for (std::size_t i = 0; i < lat.nodes.size(); ++i)
        nodes.push_back(format_partitioned_word(lat.node_partition(static_cast<int>(i))));
    auto& covers = j["covers"] = nlohmann::json::array();
    for (auto [lo, hi] : lat.cover_edges) covers.push_back({lo, hi});
    j["bottom"] = lat.bottom;
    j["top"] = lat.top;
    return j;
}

inline nlohmann::json schedule_json(const Schedule& s, bool successful) {
    nlohmann::json j;
    j["hours"] = s.hours;
    j["lengths"] = s.lengths;
    j["starts"] = s.starts;
    j["successful"] = successful;
    return j;
}

inline nlohmann::json verify_report_json(const VerifyReport& report) {
    nlohmann::json j;
    j["instance"] = report.instance;
    j["pass"] = report.all_pass();
    j["words_examined"] = report.words_examined;
    j["partitions_examined"] = report.partitions_examined;
    auto& checks = j["checks"] = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json cj;
        cj["claim"] = c.claim;
        cj["pass"] = c.pass;
        cj["cases"] = c.cases;
        cj["counterexample"] = c.counterexample;
        checks.push_back(std::move(cj));
    }
    return j;
}

}  // namespace sweeplat
