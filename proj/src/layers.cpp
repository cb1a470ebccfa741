#include "dagtopo/layers.hpp"

namespace dagtopo {

LayerSpec LayerSpec::of(std::string name, std::initializer_list<NodeType> ts) {
    LayerSpec s;
    s.name = std::move(name);
    for (NodeType t : ts) s.types[static_cast<int>(t)] = true;
    return s;
}

const std::vector<LayerSpec>& builtin_layers() {
    static const std::vector<LayerSpec> layers = {
        LayerSpec::of("full", {NodeType::Origin, NodeType::Snapshot,
                               NodeType::Release, NodeType::Commit,
                               NodeType::Directory, NodeType::Content}),
        LayerSpec::of("filesystem", {NodeType::Directory, NodeType::Content}),
        LayerSpec::of("history", {NodeType::Commit, NodeType::Release}),
        LayerSpec::of("commit", {NodeType::Commit}),
        LayerSpec::of("hosting", {NodeType::Origin, NodeType::Snapshot}),
    };
    return layers;
}

std::optional<LayerSpec> builtin_layer(const std::string& name) {
    for (const auto& l : builtin_layers())
        if (l.name == name) return l;
    return std::nullopt;
}

InducedGraph induce(const TypedGraph& g, const LayerSpec& spec) {
    InducedGraph out;
    constexpr NodeId kAbsent = UINT32_MAX;
    std::vector<NodeId> remap(g.node_count, kAbsent);
    for (NodeId v = 0; v < g.node_count; ++v) {
        if (spec.contains(g.type(v))) {
            remap[v] = static_cast<NodeId>(out.to_original.size());
            out.to_original.push_back(v);
        }
    }

    TypedGraph& s = out.graph;
    s.node_count = out.to_original.size();
    s.types.reserve(s.node_count);
    s.labels.reserve(s.node_count);
    for (NodeId v : out.to_original) {
        s.types.push_back(g.types[v]);
        s.labels.push_back(g.labels[v]);
    }

    s.fwd.offsets.assign(s.node_count + 1, 0);
    for (NodeId nv = 0; nv < s.node_count; ++nv) {
        for (NodeId w : g.fwd.neighbors(out.to_original[nv]))
            if (remap[w] != kAbsent) s.fwd.targets.push_back(remap[w]);
        s.fwd.offsets[nv + 1] = s.fwd.targets.size();
    }
    // remap is order-preserving, so the lists stay sorted.
    s.edge_count = s.fwd.targets.size();
    s.rebuild_transpose();
    return out;
}

std::vector<InducedGraph> cumulative_sequence(const TypedGraph& g) {
    static const NodeType order[] = {NodeType::Origin,  NodeType::Snapshot,
                                     NodeType::Release, NodeType::Commit,
                                     NodeType::Directory, NodeType::Content};
    std::vector<InducedGraph> stages;
    LayerSpec spec;
    for (NodeType t : order) {
        spec.types[static_cast<int>(t)] = true;
        spec.name = "cumulative-" + std::string(short_name(t));
        stages.push_back(induce(g, spec));
    }
    return stages;
}

}  // namespace dagtopo
