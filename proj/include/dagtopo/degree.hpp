#pragma once

#include <array>
#include <cstdint>

#include "dagtopo/graph.hpp"
#include "dagtopo/histogram.hpp"

namespace dagtopo {

enum class Direction { In, Out };

struct DegreeReport {
    Direction direction = Direction::Out;
    Histogram overall;
    std::array<Histogram, kNodeTypeCount> per_type;
    std::uint64_t min = 0;
    std::uint64_t max = 0;
    double mean = 0.0;
};

DegreeReport degrees(const TypedGraph& g, Direction dir);

// Per-node unnormalized local clustering of the underlying undirected
// simple graph: the number of undirected edges among a node's neighbors.
struct ClusteringReport {
    Histogram hist;
};

ClusteringReport local_clustering(const TypedGraph& g, int threads = 1);

// The undirected simple adjacency (fwd union bwd, self-edges removed),
// exposed because components and clustering both consume it.
Adjacency build_undirected(const TypedGraph& g);

}  // namespace dagtopo
