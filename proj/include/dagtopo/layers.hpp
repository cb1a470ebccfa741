#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dagtopo/graph.hpp"

namespace dagtopo {

// A named subset of node types inducing a subgraph.
struct LayerSpec {
    std::string name;
    std::array<bool, kNodeTypeCount> types{};

    bool contains(NodeType t) const { return types[static_cast<int>(t)]; }

    static LayerSpec of(std::string name, std::initializer_list<NodeType> ts);
};

// Built-ins: full, filesystem (dir+cnt), history (cmt+rel), commit (cmt),
// hosting (ori+snp).
std::optional<LayerSpec> builtin_layer(const std::string& name);
const std::vector<LayerSpec>& builtin_layers();

struct InducedGraph {
    TypedGraph graph;
    std::vector<NodeId> to_original;  // new dense id -> id in the parent graph
};

// Subgraph of the nodes whose type is in the spec plus the edges between
// them. New dense ids keep the parent's relative order.
InducedGraph induce(const TypedGraph& g, const LayerSpec& spec);

// Induced subgraphs for the cumulative type sets {ori}, {ori,snp},
// {ori,snp,rel}, ..., all six; models component aggregation as node types
// are added from the hosting side downward.
std::vector<InducedGraph> cumulative_sequence(const TypedGraph& g);

}  // namespace dagtopo
