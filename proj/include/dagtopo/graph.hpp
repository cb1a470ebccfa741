#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dagtopo/errors.hpp"
#include "dagtopo/node_type.hpp"

namespace dagtopo {

using NodeId = std::uint32_t;

// Compressed-sparse-row adjacency. Successor lists are strictly increasing
// (duplicates collapse at build time).
struct Adjacency {
    std::vector<std::uint64_t> offsets;  // node_count + 1 entries
    std::vector<NodeId> targets;

    std::uint64_t degree(NodeId v) const { return offsets[v + 1] - offsets[v]; }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {targets.data() + offsets[v],
                static_cast<std::size_t>(offsets[v + 1] - offsets[v])};
    }

    bool operator==(const Adjacency&) const = default;
};

// Immutable typed digraph with forward and transposed adjacency and the
// external-id <-> dense-id bijection. Safe for unrestricted concurrent reads.
struct TypedGraph {
    std::uint64_t node_count = 0;
    std::uint64_t edge_count = 0;
    std::vector<std::uint8_t> types;  // NodeType ordinal per dense id
    Adjacency fwd;
    Adjacency bwd;
    std::vector<std::string> labels;  // dense id -> external id

    NodeType type(NodeId v) const { return static_cast<NodeType>(types[v]); }

    std::uint64_t outdeg(NodeId v) const { return fwd.degree(v); }
    std::uint64_t indeg(NodeId v) const { return bwd.degree(v); }

    // Sorted, deduplicated union of successors and predecessors, minus v.
    std::vector<NodeId> undirected_neighbors(NodeId v) const;

    std::array<std::uint64_t, kNodeTypeCount> type_counts() const;

    // Edge counts keyed by (src type, dst type) ordinal pair.
    std::array<std::array<std::uint64_t, kNodeTypeCount>, kNodeTypeCount>
    edge_type_counts() const;

    // Rebuilds bwd as the exact transpose of fwd.
    void rebuild_transpose();

    bool operator==(const TypedGraph&) const = default;
};

enum class Validation { Strict, Lenient };

struct BuildStats {
    std::uint64_t nodes_seen = 0;
    std::uint64_t edges_seen = 0;
    std::uint64_t self_loops_dropped = 0;
    std::uint64_t duplicate_edges_collapsed = 0;
    std::uint64_t rule_violations = 0;  // lenient mode keeps and counts these
};

// Single-writer builder. Dense ids follow first-seen node order. Nodes must
// be registered before edges referencing them.
class GraphBuilder {
public:
    explicit GraphBuilder(Validation validation = Validation::Lenient,
                          EdgeTypePolicy policy = EdgeTypePolicy::standard());

    NodeId add_node(std::string_view label, NodeType type);
    void add_edge(std::string_view src_label, std::string_view dst_label);
    void add_edge(NodeId src, NodeId dst);

    std::uint64_t node_count() const { return labels_.size(); }

    // Consumes the builder's buffers.
    TypedGraph finish();

    const BuildStats& stats() const { return stats_; }

private:
    Validation validation_;
    EdgeTypePolicy policy_;
    std::deque<std::string> labels_;  // stable storage for index_ keys
    std::unordered_map<std::string_view, NodeId> index_;
    std::vector<std::uint8_t> types_;
    std::vector<NodeId> edge_src_;
    std::vector<NodeId> edge_dst_;
    BuildStats stats_;
};

// Exact label lookup built on demand from a loaded graph (the builder keeps
// its own index during ingestion). Views point into g.labels.
std::unordered_map<std::string_view, NodeId> build_label_index(const TypedGraph& g);

}  // namespace dagtopo
