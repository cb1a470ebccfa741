#include "dagtopo/generate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "dagtopo/errors.hpp"
#include "dagtopo/util/rng.hpp"

namespace dagtopo {

namespace {

const char* swhid_token(NodeType t) {
    switch (t) {
        case NodeType::Snapshot: return "snp";
        case NodeType::Release: return "rel";
        case NodeType::Commit: return "rev";
        case NodeType::Directory: return "dir";
        case NodeType::Content: return "cnt";
        default: return nullptr;
    }
}

void gen_chain(const ChainSpec& spec, GraphSink& sink) {
    if (spec.n == 0) return;
    for (NodeId v = 0; v < spec.n; ++v)
        sink.on_node(v, v + 1 == spec.n ? NodeType::Content : NodeType::Directory);
    for (NodeId v = 0; v + 1 < spec.n; ++v) sink.on_edge(v, v + 1);
}

void gen_random_dag(const RandomDagSpec& spec, GraphSink& sink) {
    for (NodeId v = 0; v < spec.n; ++v) sink.on_node(v, NodeType::Directory);
    if (spec.n < 2) return;
    Rng rng(spec.seed);
    for (std::uint64_t e = 0; e < spec.m; ++e) {
        NodeId u = static_cast<NodeId>(rng.below(spec.n));
        NodeId v = static_cast<NodeId>(rng.below(spec.n));
        if (u == v) continue;  // self-loops carry no structure here
        if (u > v) std::swap(u, v);  // id order keeps it acyclic
        sink.on_edge(u, v);
    }
}

void gen_random_typed(const RandomTypedSpec& spec, GraphSink& sink) {
    Rng rng(spec.seed);
    for (NodeId v = 0; v < spec.n; ++v)
        sink.on_node(v, static_cast<NodeType>(rng.below(kNodeTypeCount)));
    if (spec.n == 0) return;
    for (std::uint64_t e = 0; e < spec.m; ++e) {
        NodeId u = static_cast<NodeId>(rng.below(spec.n));
        NodeId v = static_cast<NodeId>(rng.below(spec.n));
        sink.on_edge(u, v);
    }
}

void gen_layered(const LayeredSpec& spec, GraphSink& sink) {
    const std::uint64_t ori0 = 0;
    const std::uint64_t snp0 = ori0 + spec.origins;
    const std::uint64_t rel0 = snp0 + spec.snapshots;
    const std::uint64_t cmt0 = rel0 + spec.releases;
    const std::uint64_t dir0 = cmt0 + spec.commits;
    const std::uint64_t cnt0 = dir0 + spec.directories;
    const std::uint64_t n = cnt0 + spec.contents;

    auto emit_type = [&](std::uint64_t begin, std::uint64_t count, NodeType t) {
        for (std::uint64_t i = 0; i < count; ++i)
            sink.on_node(static_cast<NodeId>(begin + i), t);
    };
    emit_type(ori0, spec.origins, NodeType::Origin);
    emit_type(snp0, spec.snapshots, NodeType::Snapshot);
    emit_type(rel0, spec.releases, NodeType::Release);
    emit_type(cmt0, spec.commits, NodeType::Commit);
    emit_type(dir0, spec.directories, NodeType::Directory);
    emit_type(cnt0, spec.contents, NodeType::Content);

    Rng rng(spec.seed);
    std::uint64_t emitted = 0;
    auto edge = [&](std::uint64_t u, std::uint64_t v) {
        sink.on_edge(static_cast<NodeId>(u), static_cast<NodeId>(v));
        ++emitted;
    };

    if (spec.snapshots > 0)
        for (std::uint64_t i = 0; i < spec.origins; ++i)
            edge(ori0 + i, snp0 + rng.below(spec.snapshots));
    if (spec.snapshots > 0)
        for (std::uint64_t i = 0; i < spec.releases; ++i)
            edge(snp0 + rng.below(spec.snapshots), rel0 + i);
    if (spec.commits > 0) {
        for (std::uint64_t i = 0; i < spec.snapshots; ++i)
            edge(snp0 + i, cmt0 + rng.below(spec.commits));
        for (std::uint64_t i = 0; i < spec.releases; ++i)
            edge(rel0 + i, cmt0 + rng.below(spec.commits));
        // Ancestry: mostly linear history, occasional merge; parents always
        // have smaller ids, so the stratum stays acyclic.
        for (std::uint64_t i = 1; i < spec.commits; ++i) {
            edge(cmt0 + i, cmt0 + i - 1);
            if (rng.below(8) == 0) edge(cmt0 + i, cmt0 + rng.below(i));
        }
        if (spec.directories > 0)
            for (std::uint64_t i = 0; i < spec.commits; ++i)
                edge(cmt0 + i, dir0 + rng.below(spec.directories));
    }

    // Spend the remaining budget on the filesystem fan: each directory
    // links down-tree (larger dir ids) and to contents, corpus-style.
    if (spec.directories > 0 &&
        (spec.contents > 0 || spec.directories > 1)) {
        std::uint64_t budget =
            spec.target_edges > emitted ? spec.target_edges - emitted : 0;
        std::uint64_t per_dir = budget / spec.directories;
        std::uint64_t extra = budget % spec.directories;
        for (std::uint64_t i = 0; i < spec.directories; ++i) {
            std::uint64_t fan = per_dir + (i < extra ? 1 : 0);
            std::uint64_t below_dirs = spec.directories - 1 - i;
            for (std::uint64_t f = 0; f < fan; ++f) {
                bool to_dir = below_dirs > 0 && spec.contents > 0
                                  ? rng.below(10) < 3
                                  : below_dirs > 0;
                if (to_dir)
                    edge(dir0 + i, dir0 + i + 1 + rng.below(below_dirs));
                else if (spec.contents > 0)
                    edge(dir0 + i, cnt0 + rng.below(spec.contents));
            }
        }
    }
    (void)n;
}

void gen_powerlaw(const PowerlawSpec& spec, GraphSink& sink) {
    for (NodeId v = 0; v < spec.n; ++v) sink.on_node(v, NodeType::Directory);
    if (spec.n < 2) return;
    auto degs = powerlaw_samples(spec.n, spec.alpha, 1, spec.seed);
    Rng rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
    for (NodeId v = 0; v < spec.n; ++v) {
        std::uint64_t d = std::min<std::uint64_t>(degs[v], spec.n - 1);
        for (std::uint64_t k = 0; k < d; ++k) {
            NodeId w = static_cast<NodeId>(rng.below(spec.n));
            if (w != v) sink.on_edge(v, w);
        }
    }
}

}  // namespace

LayeredSpec LayeredSpec::scaled(std::uint64_t nodes, std::uint64_t edges,
                                std::uint64_t seed) {
    LayeredSpec s;
    s.origins = nodes / 125;          // 0.8%
    s.snapshots = nodes / 200;        // 0.5%
    s.releases = nodes / 1000;        // 0.1%
    s.commits = nodes / 10;           // 10%
    s.directories = nodes * 2 / 5;    // 40%
    std::uint64_t rest = s.origins + s.snapshots + s.releases + s.commits +
                         s.directories;
    s.contents = nodes > rest ? nodes - rest : 0;
    s.target_edges = edges;
    s.seed = seed;
    return s;
}

void generate(const GenSpec& spec, GraphSink& sink) {
    std::visit([&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ChainSpec>) gen_chain(s, sink);
        else if constexpr (std::is_same_v<T, RandomDagSpec>) gen_random_dag(s, sink);
        else if constexpr (std::is_same_v<T, RandomTypedSpec>) gen_random_typed(s, sink);
        else if constexpr (std::is_same_v<T, LayeredSpec>) gen_layered(s, sink);
        else gen_powerlaw(s, sink);
    }, spec);
}

std::string synthetic_label(NodeId id, NodeType type) {
    if (type == NodeType::Origin)
        return "https://origin.example/" + std::to_string(id);
    char buf[64];
    std::snprintf(buf, sizeof buf, "swh:1:%s:%040x", swhid_token(type), id);
    return buf;
}

namespace {

class BuilderSink : public GraphSink {
public:
    explicit BuilderSink(GraphBuilder& b) : b_(b) {}
    void on_node(NodeId id, NodeType type) override {
        NodeId got = b_.add_node(synthetic_label(id, type), type);
        if (got != id) throw Error("generator announced nodes out of order");
    }
    void on_edge(NodeId src, NodeId dst) override { b_.add_edge(src, dst); }

private:
    GraphBuilder& b_;
};

class FileSink : public GraphSink {
public:
    FileSink(const std::string& nodes_path, const std::string& edges_path)
        : nodes_(nodes_path, std::ios::binary), edges_(edges_path, std::ios::binary) {
        if (!nodes_) throw FormatError("cannot write " + nodes_path);
        if (!edges_) throw FormatError("cannot write " + edges_path);
    }
    void on_node(NodeId id, NodeType type) override {
        types_.push_back(static_cast<std::uint8_t>(type));
        nodes_ << synthetic_label(id, type);
        // Origins have no SWHID; the two-column form carries their type.
        if (type == NodeType::Origin) nodes_ << "\tori";
        nodes_ << '\n';
    }
    void on_edge(NodeId src, NodeId dst) override {
        edges_ << synthetic_label(src, static_cast<NodeType>(types_[src])) << '\t'
               << synthetic_label(dst, static_cast<NodeType>(types_[dst])) << '\n';
    }
    void close() {
        nodes_.close();
        edges_.close();
        if (!nodes_ || !edges_) throw FormatError("short write to dataset files");
    }

private:
    std::vector<std::uint8_t> types_;
    std::ofstream nodes_, edges_;
};

}  // namespace

TypedGraph generate_graph(const GenSpec& spec, Validation validation,
                          EdgeTypePolicy policy, BuildStats* stats_out) {
    GraphBuilder builder(validation, policy);
    BuilderSink sink(builder);
    generate(spec, sink);
    TypedGraph g = builder.finish();
    if (stats_out) *stats_out = builder.stats();
    return g;
}

void generate_dataset(const GenSpec& spec, const std::string& nodes_path,
                      const std::string& edges_path) {
    FileSink sink(nodes_path, edges_path);
    generate(spec, sink);
    sink.close();
}

std::vector<std::uint64_t> powerlaw_samples(std::uint64_t count, double alpha,
                                            std::uint64_t xmin,
                                            std::uint64_t seed) {
    if (alpha <= 1.0) throw DomainError("powerlaw_samples: alpha must exceed 1");
    if (xmin < 1) throw DomainError("powerlaw_samples: xmin must be >= 1");
    Rng rng(seed);
    std::vector<std::uint64_t> out;
    out.reserve(count);
    const double inv_exp = -1.0 / (alpha - 1.0);
    const double cap = 1e15;  // overflow guard, hit with probability ~0
    for (std::uint64_t i = 0; i < count; ++i) {
        double y = static_cast<double>(xmin) * std::pow(1.0 - rng.unit(), inv_exp);
        if (y > cap) y = cap;
        auto k = static_cast<std::uint64_t>(std::floor(y));
        if (k < xmin) k = xmin;
        double lo = std::log(static_cast<double>(k));
        double hi = std::log(static_cast<double>(k + 1));
        // Round to k or k+1 preserving ln(y) in expectation; the tail
        // estimator consumes exactly that statistic.
        double p_lo = (hi - std::log(y)) / (hi - lo);
        out.push_back(rng.unit() < p_lo ? k : k + 1);
    }
    return out;
}

}  // namespace dagtopo
