#include "dagtopo/paths.hpp"

#include <algorithm>
#include <mutex>

#include "dagtopo/util/parallel.hpp"
#include "dagtopo/util/rng.hpp"

namespace dagtopo {

namespace {

// BFS state reusable across roots: version stamps make reset O(1) instead
// of O(n) per root.
struct BfsScratch {
    std::vector<std::uint32_t> stamp;
    std::vector<std::uint64_t> dist;
    std::vector<NodeId> queue;
    std::uint32_t epoch = 0;

    explicit BfsScratch(std::uint64_t n) : stamp(n, 0), dist(n, 0) {}

    void begin_root() {
        if (++epoch == 0) {  // stamp wrap: rare full clear
            std::fill(stamp.begin(), stamp.end(), 0);
            epoch = 1;
        }
        queue.clear();
    }

    bool seen(NodeId v) const { return stamp[v] == epoch; }
    void visit(NodeId v, std::uint64_t d) {
        stamp[v] = epoch;
        dist[v] = d;
    }
};

}  // namespace

PathLengthReport root_leaf_path_lengths(const TypedGraph& g,
                                        std::optional<RootSample> sample,
                                        int threads, bool want_per_root_mean) {
    PathLengthReport r;

    std::vector<NodeId> roots;
    std::vector<std::uint8_t> is_leaf(g.node_count, 0);
    for (NodeId v = 0; v < g.node_count; ++v) {
        if (g.indeg(v) == 0) roots.push_back(v);
        if (g.outdeg(v) == 0) {
            is_leaf[v] = 1;
            ++r.leaf_count;
        }
    }

    if (sample && sample->count < roots.size()) {
        // Partial Fisher-Yates: uniform without replacement, seed-driven.
        Rng rng(sample->seed);
        for (std::uint64_t i = 0; i < sample->count; ++i) {
            std::uint64_t j = i + rng.below(roots.size() - i);
            std::swap(roots[i], roots[j]);
        }
        roots.resize(sample->count);
        std::sort(roots.begin(), roots.end());
        r.sampled = true;
    }
    if (sample) r.sample_seed = sample->seed;
    r.root_count = roots.size();
    if (roots.empty() || r.leaf_count == 0) {
        r.no_roots_or_leaves = true;
        return r;
    }

    std::mutex merge_mu;
    std::vector<std::vector<std::pair<NodeId, double>>> worker_means;
    int nworkers = resolve_thread_count(threads);
    worker_means.resize(static_cast<std::size_t>(nworkers));
    std::vector<BfsScratch> scratch;
    scratch.reserve(static_cast<std::size_t>(nworkers));
    for (int w = 0; w < nworkers; ++w) scratch.emplace_back(g.node_count);

    parallel_for_chunks(roots.size(), nworkers, 64,
                        [&](int w, std::uint64_t begin, std::uint64_t end) {
        BfsScratch& s = scratch[static_cast<std::size_t>(w)];
        Histogram local;
        for (std::uint64_t i = begin; i < end; ++i) {
            NodeId root = roots[i];
            s.begin_root();
            s.visit(root, 0);
            s.queue.push_back(root);
            std::uint64_t pair_count = 0, length_sum = 0;
            for (std::size_t head = 0; head < s.queue.size(); ++head) {
                NodeId v = s.queue[head];
                std::uint64_t d = s.dist[v];
                if (is_leaf[v] && v != root) {
                    local.add(d);
                    ++pair_count;
                    length_sum += d;
                }
                for (NodeId wv : g.fwd.neighbors(v)) {
                    if (!s.seen(wv)) {
                        s.visit(wv, d + 1);
                        s.queue.push_back(wv);
                    }
                }
            }
            if (want_per_root_mean && pair_count > 0)
                worker_means[static_cast<std::size_t>(w)].emplace_back(
                    root, static_cast<double>(length_sum) /
                              static_cast<double>(pair_count));
        }
        std::lock_guard<std::mutex> lock(merge_mu);
        r.hist.merge(local);
    });

    if (want_per_root_mean) {
        for (auto& wm : worker_means)
            r.per_root_mean.insert(r.per_root_mean.end(), wm.begin(), wm.end());
        std::sort(r.per_root_mean.begin(), r.per_root_mean.end());
    }
    return r;
}

}  // namespace dagtopo
