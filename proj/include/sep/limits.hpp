#pragma once

#include <cstddef>
#include <cstdint>

namespace sep {

/// Resource guards for the exponential enumerations. Every guard fails
/// loudly with BoundExceeded instead of running unbounded.
struct Limits {
    int max_cut_vertices = 24;          // cuts(): 2^(n-1) subgraphs
    int max_cut_sum_vertices = 20;      // cut_sum_gamma()
    std::size_t max_cycles = 1'000'000; // simple_cycles()
    int max_matching_vertices = 16;     // matched_vertex_sets() brute force
    int max_independence_vertices = 24; // independence_poly()
    std::size_t max_spanning_states = 10'000'000;
    std::uint64_t max_box_points = 1'000'000'000;
    int max_hrep_dim = 7;
    std::size_t max_hrep_points = 64;
    std::size_t max_cliques = 10'000'000;
};

inline const Limits& default_limits() {
    static const Limits limits{};
    return limits;
}

} // namespace sep
