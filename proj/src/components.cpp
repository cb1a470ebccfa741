#include "dagtopo/components.hpp"

namespace dagtopo {

ComponentReport connected_components(const TypedGraph& g) {
    ComponentReport r;
    constexpr NodeId kUnvisited = UINT32_MAX;
    r.component_of.assign(g.node_count, kUnvisited);

    // Iterative BFS with an explicit frontier; the corpora this models have
    // pathological depths that would blow a recursive visit.
    std::vector<std::uint64_t> visited_words((g.node_count + 63) / 64, 0);
    auto visited = [&](NodeId v) {
        return (visited_words[v >> 6] >> (v & 63)) & 1;
    };
    auto mark = [&](NodeId v) { visited_words[v >> 6] |= std::uint64_t(1) << (v & 63); };

    std::vector<NodeId> queue;
    for (NodeId seed = 0; seed < g.node_count; ++seed) {
        if (visited(seed)) continue;
        NodeId cid = static_cast<NodeId>(r.component_count++);
        std::uint64_t size = 0, origins = 0;
        bool commit = false;
        queue.clear();
        queue.push_back(seed);
        mark(seed);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            NodeId v = queue[head];
            r.component_of[v] = cid;
            ++size;
            NodeType t = g.type(v);
            origins += (t == NodeType::Origin);
            commit = commit || (t == NodeType::Commit);
            for (auto dir : {&g.fwd, &g.bwd}) {
                for (NodeId w : dir->neighbors(v)) {
                    if (!visited(w)) {
                        mark(w);
                        queue.push_back(w);
                    }
                }
            }
        }
        r.size_hist.add(size);
        r.size.push_back(size);
        r.origin_weight.push_back(origins);
        r.has_commit.push_back(commit);
        if (size > r.largest_size) r.largest_size = size;
        if (size == 1 && g.type(seed) == NodeType::Origin)
            ++r.isolated_origin_count;
    }
    return r;
}

WeightedDistribution origin_weighted_size_distribution(const ComponentReport& r,
                                                       bool require_commit) {
    WeightedDistribution d;
    for (std::uint64_t c = 0; c < r.component_count; ++c) {
        if (require_commit && !r.has_commit[c]) continue;
        if (r.origin_weight[c] == 0) continue;
        d.add(r.size[c], static_cast<double>(r.origin_weight[c]));
    }
    return d;
}

}  // namespace dagtopo
