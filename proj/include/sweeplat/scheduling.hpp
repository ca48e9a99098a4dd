#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "equitable.hpp"
#include "lattice.hpp"
#include "words.hpp"

// Task-scheduling view of equitable partitions. A day has m hours and task
// i starts in hour h_i; the dictionary between the two pictures is
// hour h <-> block m - h, so later starts mean lower block indices and the
// rightmost partition is the all-starts-latest schedule.

namespace sweeplat {

struct Schedule {
    int hours = 1;
    std::vector<int> lengths;
    std::vector<int> starts;  // nondecreasing, each in [1, hours]
    bool operator==(const Schedule&) const = default;
};

namespace detail {

inline ModWord schedule_word(int hours, const std::vector<int>& lengths) {
    require(hours >= 1, "schedule: hours must be >= 1");
    for (int len : lengths)
        require(0 <= len && len < hours, "schedule: task length out of range [0, hours)");
    return ModWord(hours, lengths);
}

inline Schedule schedule_of_partition(const PartitionedWord& p) {
    Schedule s;
    s.hours = p.modulus();
    s.lengths = p.word().letters();
    for (int b : block_vector(p)) s.starts.push_back(p.modulus() - b);
    return s;
}

inline PartitionedWord partition_of_schedule(const Schedule& s) {
    const ModWord u = schedule_word(s.hours, s.lengths);
    require(s.starts.size() == s.lengths.size(),
            "schedule: starts and lengths differ in length");
    std::vector<int> blocks;
    blocks.reserve(s.starts.size());
    for (int h : s.starts) {
        require(1 <= h && h <= s.hours, "schedule: start hour out of range [1, hours]");
        blocks.push_back(s.hours - h);
    }
    for (std::size_t i = 1; i < s.starts.size(); ++i)
        require(s.starts[i - 1] <= s.starts[i], "schedule: starts must be nondecreasing");
    return from_block_vector(u, blocks);
}

}  // namespace detail

/// The unique successful schedule: every task starts as late as any
/// equitable schedule allows.
inline Schedule schedule_latest(int hours, const std::vector<int>& lengths) {
    return detail::schedule_of_partition(rightmost(detail::schedule_word(hours, lengths)));
}

/// All equitable schedules, ordered from earliest (bottom) to latest (top).
inline std::vector<Schedule> schedule_all(int hours, const std::vector<int>& lengths) {
    const EqLattice lat = enumerate_lattice(detail::schedule_word(hours, lengths));
    std::vector<std::vector<int>> vecs = lat.nodes;
    // Moving up the lattice strictly lowers the block-index sum, so sorting
    // by descending sum (lexicographic tiebreak) is a bottom-to-top linear
    // extension.
    std::sort(vecs.begin(), vecs.end(), [](const auto& a, const auto& b) {
        const long long sa = std::accumulate(a.begin(), a.end(), 0LL);
        const long long sb = std::accumulate(b.begin(), b.end(), 0LL);
        if (sa != sb) return sa > sb;
        return a < b;
    });
    std::vector<Schedule> out;
    out.reserve(vecs.size());
    for (const auto& v : vecs)
        out.push_back(detail::schedule_of_partition(from_block_vector(lat.word, v)));
    return out;
}

struct InspectorResult {
    bool successful = false;
    std::vector<int> watch_order;  // task indices in the order they are watched
    bool operator==(const InspectorResult&) const = default;
};

/// Whether the inspector can watch every task back to back: true exactly
/// when the schedule's partition is successful. The watch trace lists the
/// tasks in viewing order either way (on failure it stops at the first
/// delay).
inline InspectorResult inspector_check(const Schedule& s) {
    const PartitionedWord p = detail::partition_of_schedule(s);
    detail::require(is_equitable(p), "inspector_check: schedule is not equitable");
    const InversePresweepRun run = inverse_presweep_run(p);
    InspectorResult out;
    out.successful = run.success;
    for (const auto& v : run.visits) out.watch_order.push_back(v.letter_index);
    return out;
}

}  // namespace sweeplat
