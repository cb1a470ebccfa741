#include "dagtopo/graph.hpp"

#include <algorithm>
#include <utility>

namespace dagtopo {

std::vector<NodeId> TypedGraph::undirected_neighbors(NodeId v) const {
    if (v >= node_count) throw DomainError("node id out of range");
    auto f = fwd.neighbors(v);
    auto b = bwd.neighbors(v);
    std::vector<NodeId> out;
    out.reserve(f.size() + b.size());
    std::set_union(f.begin(), f.end(), b.begin(), b.end(), std::back_inserter(out));
    std::erase(out, v);
    return out;
}

std::array<std::uint64_t, kNodeTypeCount> TypedGraph::type_counts() const {
    std::array<std::uint64_t, kNodeTypeCount> c{};
    for (std::uint8_t t : types) ++c[t];
    return c;
}

std::array<std::array<std::uint64_t, kNodeTypeCount>, kNodeTypeCount>
TypedGraph::edge_type_counts() const {
    std::array<std::array<std::uint64_t, kNodeTypeCount>, kNodeTypeCount> c{};
    for (NodeId u = 0; u < node_count; ++u) {
        auto row = c.begin() + types[u];
        for (NodeId v : fwd.neighbors(u)) (*row)[types[v]]++;
    }
    return c;
}

void TypedGraph::rebuild_transpose() {
    bwd.offsets.assign(node_count + 1, 0);
    for (NodeId t : fwd.targets) ++bwd.offsets[t + 1];
    for (std::uint64_t v = 1; v <= node_count; ++v)
        bwd.offsets[v] += bwd.offsets[v - 1];
    bwd.targets.resize(fwd.targets.size());
    std::vector<std::uint64_t> cursor(bwd.offsets.begin(), bwd.offsets.end() - 1);
    // Scanning sources in ascending order keeps each predecessor list sorted.
    for (NodeId u = 0; u < node_count; ++u)
        for (NodeId v : fwd.neighbors(u)) bwd.targets[cursor[v]++] = u;
}

GraphBuilder::GraphBuilder(Validation validation, EdgeTypePolicy policy)
    : validation_(validation), policy_(policy) {}

NodeId GraphBuilder::add_node(std::string_view label, NodeType type) {
    if (index_.contains(label))
        throw IngestError("duplicate node id: " + std::string(label));
    if (labels_.size() >= UINT32_MAX)
        throw IngestError("node count exceeds dense-id capacity");
    NodeId id = static_cast<NodeId>(labels_.size());
    labels_.emplace_back(label);
    index_.emplace(labels_.back(), id);
    types_.push_back(static_cast<std::uint8_t>(type));
    ++stats_.nodes_seen;
    return id;
}

void GraphBuilder::add_edge(std::string_view src_label, std::string_view dst_label) {
    auto s = index_.find(src_label);
    if (s == index_.end())
        throw IngestError("unknown edge endpoint: " + std::string(src_label));
    auto d = index_.find(dst_label);
    if (d == index_.end())
        throw IngestError("unknown edge endpoint: " + std::string(dst_label));
    add_edge(s->second, d->second);
}

void GraphBuilder::add_edge(NodeId src, NodeId dst) {
    if (src >= types_.size() || dst >= types_.size())
        throw IngestError("edge endpoint id out of range");
    ++stats_.edges_seen;
    if (src == dst) {
        ++stats_.self_loops_dropped;
        return;
    }
    auto st = static_cast<NodeType>(types_[src]);
    auto dt = static_cast<NodeType>(types_[dst]);
    if (!policy_.allowed(st, dt)) {
        if (validation_ == Validation::Strict)
            throw ValidationError("edge type not allowed: " +
                                  std::string(short_name(st)) + "->" +
                                  std::string(short_name(dt)));
        ++stats_.rule_violations;
    }
    edge_src_.push_back(src);
    edge_dst_.push_back(dst);
}

TypedGraph GraphBuilder::finish() {
    TypedGraph g;
    g.node_count = labels_.size();
    g.types = std::move(types_);
    g.labels.assign(std::make_move_iterator(labels_.begin()),
                    std::make_move_iterator(labels_.end()));
    index_.clear();
    labels_.clear();

    const std::uint64_t n = g.node_count;
    g.fwd.offsets.assign(n + 1, 0);
    for (NodeId u : edge_src_) ++g.fwd.offsets[u + 1];
    for (std::uint64_t v = 1; v <= n; ++v) g.fwd.offsets[v] += g.fwd.offsets[v - 1];

    g.fwd.targets.resize(edge_src_.size());
    {
        std::vector<std::uint64_t> cursor(g.fwd.offsets.begin(),
                                          g.fwd.offsets.end() - 1);
        for (std::size_t i = 0; i < edge_src_.size(); ++i)
            g.fwd.targets[cursor[edge_src_[i]]++] = edge_dst_[i];
    }
    edge_src_.clear();
    edge_src_.shrink_to_fit();
    edge_dst_.clear();
    edge_dst_.shrink_to_fit();

    // Sort and collapse duplicates in place, then re-pack.
    std::uint64_t write = 0;
    std::uint64_t read_begin = 0;
    for (NodeId v = 0; v < n; ++v) {
        std::uint64_t read_end = g.fwd.offsets[v + 1];
        auto first = g.fwd.targets.begin() + static_cast<std::ptrdiff_t>(read_begin);
        auto last = g.fwd.targets.begin() + static_cast<std::ptrdiff_t>(read_end);
        std::sort(first, last);
        auto tail = std::unique(first, last);
        std::uint64_t kept = static_cast<std::uint64_t>(tail - first);
        stats_.duplicate_edges_collapsed += (read_end - read_begin) - kept;
        std::move(first, tail,
                  g.fwd.targets.begin() + static_cast<std::ptrdiff_t>(write));
        write += kept;
        read_begin = read_end;
        g.fwd.offsets[v + 1] = write;
    }
    g.fwd.targets.resize(write);
    g.fwd.targets.shrink_to_fit();
    g.edge_count = write;
    g.rebuild_transpose();
    return g;
}

std::unordered_map<std::string_view, NodeId> build_label_index(const TypedGraph& g) {
    std::unordered_map<std::string_view, NodeId> idx;
    idx.reserve(g.labels.size());
    for (NodeId v = 0; v < g.node_count; ++v) idx.emplace(g.labels[v], v);
    return idx;
}

}  // namespace dagtopo
