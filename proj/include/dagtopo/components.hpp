#pragma once

#include <cstdint>
#include <vector>

#include "dagtopo/graph.hpp"
#include "dagtopo/histogram.hpp"

namespace dagtopo {

// Connected components of the underlying undirected graph. Component ids
// are assigned in ascending order of each component's minimum dense node
// id, so the partition labeling is deterministic.
struct ComponentReport {
    std::vector<NodeId> component_of;        // per node
    std::uint64_t component_count = 0;
    Histogram size_hist;                     // value = component size in nodes
    std::uint64_t largest_size = 0;
    std::uint64_t isolated_origin_count = 0;  // origins in size-1 components
    std::vector<std::uint64_t> size;          // per component
    std::vector<std::uint64_t> origin_weight; // per component: # Origin nodes
    std::vector<std::uint8_t> has_commit;     // per component
};

ComponentReport connected_components(const TypedGraph& g);

// Component-size distribution where each component contributes weight equal
// to the number of origins it contains; optionally restricted to components
// holding at least one commit.
WeightedDistribution origin_weighted_size_distribution(const ComponentReport& r,
                                                       bool require_commit);

}  // namespace dagtopo
