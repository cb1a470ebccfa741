#include "dagtopo/degree.hpp"

#include <algorithm>
#include <mutex>

#include "dagtopo/kernels.hpp"
#include "dagtopo/util/parallel.hpp"

namespace dagtopo {

DegreeReport degrees(const TypedGraph& g, Direction dir) {
    DegreeReport r;
    r.direction = dir;
    const Adjacency& adj = dir == Direction::Out ? g.fwd : g.bwd;
    std::uint64_t lo = UINT64_MAX, hi = 0, sum = 0;
    for (NodeId v = 0; v < g.node_count; ++v) {
        std::uint64_t d = adj.degree(v);
        r.overall.add(d);
        r.per_type[g.types[v]].add(d);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
        sum += d;
    }
    if (g.node_count > 0) {
        r.min = lo;
        r.max = hi;
        r.mean = static_cast<double>(sum) / static_cast<double>(g.node_count);
    }
    return r;
}

Adjacency build_undirected(const TypedGraph& g) {
    Adjacency und;
    und.offsets.assign(g.node_count + 1, 0);
    und.targets.reserve(2 * g.fwd.targets.size());
    for (NodeId v = 0; v < g.node_count; ++v) {
        auto f = g.fwd.neighbors(v);
        auto b = g.bwd.neighbors(v);
        std::size_t before = und.targets.size();
        std::set_union(f.begin(), f.end(), b.begin(), b.end(),
                       std::back_inserter(und.targets));
        // Self-edges cannot occur (builder drops self-loops), so no erase.
        (void)before;
        und.offsets[v + 1] = und.targets.size();
    }
    und.targets.shrink_to_fit();
    return und;
}

ClusteringReport local_clustering(const TypedGraph& g, int threads) {
    Adjacency und = build_undirected(g);

    std::mutex merge_mu;
    ClusteringReport report;
    parallel_for_chunks(g.node_count, threads, 4096,
                        [&](int, std::uint64_t begin, std::uint64_t end) {
        Histogram local;
        for (std::uint64_t v = begin; v < end; ++v) {
            auto nv = und.neighbors(static_cast<NodeId>(v));
            std::uint64_t edges_among = 0;
            for (NodeId u : nv) {
                auto nu = und.neighbors(u);
                // Count each neighbor edge {u,w} once via w > u; both lists
                // are sorted, so intersect the suffixes past u.
                auto nu_hi = std::upper_bound(nu.begin(), nu.end(), u);
                auto nv_hi = std::upper_bound(nv.begin(), nv.end(), u);
                edges_among += kernels::intersect_count(
                    nu.subspan(static_cast<std::size_t>(nu_hi - nu.begin())),
                    nv.subspan(static_cast<std::size_t>(nv_hi - nv.begin())));
            }
            local.add(edges_among);
        }
        std::lock_guard<std::mutex> lock(merge_mu);
        report.hist.merge(local);
    });
    return report;
}

}  // namespace dagtopo
