#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "dagtopo/graph.hpp"

namespace dagtopo {

// Synthetic dataset laboratory. Every generator is a pure function of its
// parameters and seed; nodes are announced in dense-id order, then edges.
class GraphSink {
public:
    virtual ~GraphSink() = default;
    virtual void on_node(NodeId id, NodeType type) = 0;
    virtual void on_edge(NodeId src, NodeId dst) = 0;
};

struct ChainSpec {
    std::uint64_t n = 2;  // dir chain ending in a cnt leaf
};

struct RandomDagSpec {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t seed = 0;
};

// Random typed digraph, possibly cyclic and rule-violating; test fodder,
// not exposed through the CLI.
struct RandomTypedSpec {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t seed = 0;
};

// Merkle-like strata: ori -> snp -> {rel, cmt}, commit ancestry, commit
// root directories, a directory tree fanning out into contents.
struct LayeredSpec {
    std::uint64_t origins = 0;
    std::uint64_t snapshots = 0;
    std::uint64_t releases = 0;
    std::uint64_t commits = 0;
    std::uint64_t directories = 0;
    std::uint64_t contents = 0;
    std::uint64_t target_edges = 0;  // budget for the dir->dir / dir->cnt fan
    std::uint64_t seed = 0;

    // Corpus-like type mix for a requested size.
    static LayeredSpec scaled(std::uint64_t nodes, std::uint64_t edges,
                              std::uint64_t seed);

    std::uint64_t node_count() const {
        return origins + snapshots + releases + commits + directories + contents;
    }
};

// Directory-typed graph whose out-degrees follow a discrete power law.
struct PowerlawSpec {
    std::uint64_t n = 0;
    double alpha = 2.5;
    std::uint64_t seed = 0;
};

using GenSpec = std::variant<ChainSpec, RandomDagSpec, RandomTypedSpec,
                             LayeredSpec, PowerlawSpec>;

void generate(const GenSpec& spec, GraphSink& sink);

// Deterministic external id for a synthetic node.
std::string synthetic_label(NodeId id, NodeType type);

// Builds the graph in memory (labels synthesized).
TypedGraph generate_graph(const GenSpec& spec,
                          Validation validation = Validation::Lenient,
                          EdgeTypePolicy policy = EdgeTypePolicy::permissive(),
                          BuildStats* stats_out = nullptr);

// Writes the textual nodes/edges dataset files.
void generate_dataset(const GenSpec& spec, const std::string& nodes_path,
                      const std::string& edges_path);

// Integer samples from a power law with exponent alpha and threshold xmin,
// via continuous inverse-CDF transform plus log-space randomized rounding
// (keeps E[ln X] exact, so the tail estimator sees an unbiased sample).
std::vector<std::uint64_t> powerlaw_samples(std::uint64_t count, double alpha,
                                            std::uint64_t xmin,
                                            std::uint64_t seed);

}  // namespace dagtopo
