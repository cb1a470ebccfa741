// Brute-force reference implementations used to check the fast paths.
// Everything here favors obviousness over speed and shares no code with the
// library's algorithm implementations.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "dagtopo/graph.hpp"
#include "dagtopo/histogram.hpp"

namespace oracle {

using dagtopo::Histogram;
using dagtopo::NodeId;
using dagtopo::TypedGraph;

inline std::vector<std::pair<NodeId, NodeId>> edge_list(const TypedGraph& g) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < g.node_count; ++u)
        for (NodeId v : g.fwd.neighbors(u)) edges.emplace_back(u, v);
    return edges;
}

inline Histogram degree_hist(const TypedGraph& g, bool indegree) {
    std::vector<std::uint64_t> deg(g.node_count, 0);
    for (auto [u, v] : edge_list(g)) ++deg[indegree ? v : u];
    Histogram h;
    for (auto d : deg) h.add(d);
    return h;
}

// Undirected simple adjacency as sets, self-edges removed.
inline std::vector<std::set<NodeId>> undirected_sets(const TypedGraph& g) {
    std::vector<std::set<NodeId>> adj(g.node_count);
    for (auto [u, v] : edge_list(g)) {
        if (u == v) continue;
        adj[u].insert(v);
        adj[v].insert(u);
    }
    return adj;
}

// O(n * deg^2) pair check: for each node, edges among its neighbors.
inline Histogram clustering_hist(const TypedGraph& g) {
    auto adj = undirected_sets(g);
    Histogram h;
    for (NodeId v = 0; v < g.node_count; ++v) {
        std::uint64_t count = 0;
        std::vector<NodeId> nbrs(adj[v].begin(), adj[v].end());
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (adj[nbrs[i]].contains(nbrs[j])) ++count;
        h.add(count);
    }
    return h;
}

struct UnionFind {
    std::vector<NodeId> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    NodeId find(NodeId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(NodeId a, NodeId b) { parent[find(a)] = find(b); }
};

// Component partition as a canonical labeling: component id = rank of the
// component's minimum node id.
inline std::vector<NodeId> cc_partition(const TypedGraph& g) {
    UnionFind uf(g.node_count);
    for (auto [u, v] : edge_list(g)) uf.unite(u, v);
    std::map<NodeId, NodeId> canon;  // min-root node id -> dense component id
    std::vector<NodeId> min_of(g.node_count, UINT32_MAX);
    for (NodeId v = 0; v < g.node_count; ++v) {
        NodeId r = uf.find(v);
        min_of[r] = std::min(min_of[r], v);
    }
    for (NodeId v = 0; v < g.node_count; ++v) {
        NodeId m = min_of[uf.find(v)];
        canon.try_emplace(m, static_cast<NodeId>(canon.size()));
    }
    std::vector<NodeId> out(g.node_count);
    for (NodeId v = 0; v < g.node_count; ++v) out[v] = canon[min_of[uf.find(v)]];
    return out;
}

// Fresh-state BFS per root; one histogram sample per reachable (root, leaf)
// pair, skipping the root itself.
inline Histogram path_length_hist(const TypedGraph& g) {
    Histogram h;
    for (NodeId r = 0; r < g.node_count; ++r) {
        if (g.indeg(r) != 0) continue;
        std::vector<std::int64_t> dist(g.node_count, -1);
        std::queue<NodeId> q;
        dist[r] = 0;
        q.push(r);
        while (!q.empty()) {
            NodeId v = q.front();
            q.pop();
            for (NodeId w : g.fwd.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
            }
        }
        for (NodeId l = 0; l < g.node_count; ++l)
            if (l != r && g.outdeg(l) == 0 && dist[l] > 0)
                h.add(static_cast<std::uint64_t>(dist[l]));
    }
    return h;
}

}  // namespace oracle
