#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <filesystem>

#include "dagtopo/dataset_io.hpp"
#include "dagtopo/generate.hpp"

using namespace dagtopo;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("dagtopo_gen_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("chain shape") {
    TypedGraph g = generate_graph(ChainSpec{4});
    CHECK(g.node_count == 4);
    CHECK(g.edge_count == 3);
    CHECK(g.type(0) == NodeType::Directory);
    CHECK(g.type(3) == NodeType::Content);
    for (NodeId v = 0; v + 1 < g.node_count; ++v) {
        REQUIRE(g.fwd.neighbors(v).size() == 1);
        CHECK(g.fwd.neighbors(v)[0] == v + 1);
    }
}

TEST_CASE("random dag edges always go forward") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        TypedGraph g = generate_graph(RandomDagSpec{80, 250, seed});
        CHECK(g.node_count == 80);
        for (NodeId u = 0; u < g.node_count; ++u)
            for (NodeId v : g.fwd.neighbors(u)) CHECK(u < v);
    }
}

TEST_CASE("generation is a pure function of the seed") {
    CHECK(generate_graph(RandomDagSpec{50, 120, 9}) ==
          generate_graph(RandomDagSpec{50, 120, 9}));
    CHECK(!(generate_graph(RandomDagSpec{50, 120, 9}) ==
            generate_graph(RandomDagSpec{50, 120, 10})));
    CHECK(generate_graph(LayeredSpec::scaled(2000, 6000, 5)) ==
          generate_graph(LayeredSpec::scaled(2000, 6000, 5)));
}

TEST_CASE("layered output obeys the strict edge rules") {
    auto spec = LayeredSpec::scaled(3000, 9000, 11);
    BuildStats stats;
    TypedGraph g = generate_graph(spec, Validation::Strict,
                                  EdgeTypePolicy::standard(), &stats);
    CHECK(g.node_count == spec.node_count());
    CHECK(stats.rule_violations == 0);
    CHECK(stats.self_loops_dropped == 0);
    auto counts = g.type_counts();
    CHECK(counts[int(NodeType::Origin)] == spec.origins);
    CHECK(counts[int(NodeType::Commit)] == spec.commits);
    CHECK(counts[int(NodeType::Content)] == spec.contents);
    // every origin points at a snapshot, every commit has a root directory
    for (NodeId v = 0; v < g.node_count; ++v) {
        if (g.type(v) == NodeType::Origin) CHECK(g.outdeg(v) >= 1);
        if (g.type(v) == NodeType::Commit) {
            bool has_dir = false;
            for (NodeId w : g.fwd.neighbors(v))
                has_dir |= g.type(w) == NodeType::Directory;
            CHECK(has_dir);
        }
    }
}

TEST_CASE("scaled spec hits the requested sizes approximately") {
    auto spec = LayeredSpec::scaled(100000, 400000, 1);
    CHECK(spec.node_count() == 100000);
    TypedGraph g = generate_graph(spec);
    CHECK(double(g.edge_count) > 0.9 * 400000);
    CHECK(double(g.edge_count) < 1.1 * 400000);
}

TEST_CASE("synthetic labels parse as dataset ids") {
    CHECK(synthetic_label(0, NodeType::Origin).starts_with("https://"));
    auto lbl = synthetic_label(5, NodeType::Commit);
    CHECK(lbl.starts_with("swh:1:rev:"));
    CHECK(lbl.size() == 10 + 40);
    CHECK(synthetic_label(5, NodeType::Directory) != lbl);
    CHECK(synthetic_label(6, NodeType::Commit) != lbl);
}

TEST_CASE("dataset files rebuild the generated graph") {
    TempDir tmp;
    auto spec = LayeredSpec::scaled(500, 1500, 3);
    generate_dataset(spec, tmp.file("nodes"), tmp.file("edges"));
    TypedGraph from_files = build_from_files(tmp.file("nodes"), tmp.file("edges"),
                                             Validation::Strict);
    CHECK(from_files == generate_graph(spec));
}

TEST_CASE("powerlaw samples respect the threshold and the seed") {
    auto s1 = powerlaw_samples(5000, 2.5, 3, 8);
    auto s2 = powerlaw_samples(5000, 2.5, 3, 8);
    CHECK(s1 == s2);
    CHECK(powerlaw_samples(5000, 2.5, 3, 9) != s1);
    for (auto v : s1) CHECK(v >= 3);
}

TEST_CASE("powerlaw log-mean tracks the continuous model") {
    // E[ln X] = 1/(alpha-1) for a unit-threshold Pareto tail; the rounding
    // scheme is constructed to preserve it.
    for (double alpha : {2.0, 2.5, 3.5}) {
        auto s = powerlaw_samples(200000, alpha, 1, 4);
        double mean_log = 0;
        for (auto v : s) mean_log += std::log(double(v));
        mean_log /= double(s.size());
        CHECK(mean_log == doctest::Approx(1.0 / (alpha - 1.0)).epsilon(0.02));
    }
}

TEST_CASE("powerlaw graph outdegrees follow the samples") {
    TypedGraph g = generate_graph(PowerlawSpec{2000, 2.5, 6});
    CHECK(g.node_count == 2000);
    auto samples = powerlaw_samples(2000, 2.5, 1, 6);
    // self-targets and duplicates are dropped, so degrees can only shrink,
    // and only slightly: the bulk of nodes keeps the sampled value
    std::uint64_t exact = 0;
    for (NodeId v = 0; v < 2000; ++v) {
        CHECK(g.outdeg(v) <= std::min<std::uint64_t>(samples[v], 1999));
        exact += g.outdeg(v) == samples[v];
    }
    CHECK(exact > 1900);
}
