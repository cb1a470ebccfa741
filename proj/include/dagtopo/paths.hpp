#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dagtopo/graph.hpp"
#include "dagtopo/histogram.hpp"

namespace dagtopo {

struct RootSample {
    std::uint64_t count;
    std::uint64_t seed;
};

struct PathLengthReport {
    Histogram hist;  // one sample per reachable (root, leaf) pair
    std::uint64_t root_count = 0;   // roots actually visited
    std::uint64_t leaf_count = 0;   // leaves in the graph
    bool sampled = false;
    std::optional<std::uint64_t> sample_seed;
    bool no_roots_or_leaves = false;
    // (root id, mean shortest-path length to its reachable leaves); only
    // filled on request, only for roots reaching at least one leaf.
    std::vector<std::pair<NodeId, double>> per_root_mean;
};

// Shortest-path lengths from every root (indegree 0) to every reachable
// leaf (outdegree 0). Unit edge weights, so a per-root BFS gives exactly
// the Dijkstra distances. Cyclic inputs are fine: nodes on cycles are
// never roots and unreachable cycles are never visited.
PathLengthReport root_leaf_path_lengths(const TypedGraph& g,
                                        std::optional<RootSample> sample = {},
                                        int threads = 1,
                                        bool want_per_root_mean = false);

}  // namespace dagtopo
