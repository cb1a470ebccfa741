#include <doctest.h>

#include <set>

#include "dagtopo/components.hpp"
#include "dagtopo/generate.hpp"
#include "dagtopo/layers.hpp"
#include "oracles.hpp"

using namespace dagtopo;

namespace {

TypedGraph mini() {
    // dir a -> cnt b, cmt c -> dir a
    GraphBuilder b;
    b.add_node("a", NodeType::Directory);
    b.add_node("b", NodeType::Content);
    b.add_node("c", NodeType::Commit);
    b.add_edge("a", "b");
    b.add_edge("c", "a");
    return b.finish();
}

}  // namespace

TEST_CASE("built-in layer definitions") {
    auto fsys = builtin_layer("filesystem");
    REQUIRE(fsys);
    CHECK(fsys->contains(NodeType::Directory));
    CHECK(fsys->contains(NodeType::Content));
    CHECK(!fsys->contains(NodeType::Commit));
    CHECK(builtin_layer("history")->contains(NodeType::Release));
    CHECK(builtin_layer("commit")->contains(NodeType::Commit));
    CHECK(builtin_layer("hosting")->contains(NodeType::Origin));
    CHECK(builtin_layers().size() == 5);
    CHECK(!builtin_layer("bogus"));
}

TEST_CASE("filesystem layer of the mini graph") {
    auto sub = induce(mini(), *builtin_layer("filesystem"));
    CHECK(sub.graph.node_count == 2);
    CHECK(sub.graph.edge_count == 1);
    CHECK(sub.graph.labels == std::vector<std::string>{"a", "b"});
    CHECK(sub.to_original == std::vector<NodeId>{0, 1});
    CHECK(sub.graph.fwd.neighbors(0)[0] == 1);
}

TEST_CASE("commit layer of a commitless graph is empty") {
    GraphBuilder b;
    b.add_node("a", NodeType::Directory);
    TypedGraph g = b.finish();
    auto sub = induce(g, *builtin_layer("commit"));
    CHECK(sub.graph.node_count == 0);
    CHECK(sub.graph.edge_count == 0);
}

TEST_CASE("full layer is the identity") {
    TypedGraph g = mini();
    auto sub = induce(g, *builtin_layer("full"));
    CHECK(sub.graph == g);
}

TEST_CASE("induced node and edge sets match brute force") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        TypedGraph g = generate_graph(RandomTypedSpec{60, 200, seed});
        for (const auto& spec : builtin_layers()) {
            auto sub = induce(g, spec);
            auto counts = g.type_counts();
            std::uint64_t expect_nodes = 0;
            for (int t = 0; t < kNodeTypeCount; ++t)
                if (spec.types[t]) expect_nodes += counts[t];
            CHECK(sub.graph.node_count == expect_nodes);

            std::set<std::pair<NodeId, NodeId>> expect_edges;
            for (auto [u, v] : oracle::edge_list(g))
                if (spec.contains(g.type(u)) && spec.contains(g.type(v)))
                    expect_edges.insert({u, v});
            std::set<std::pair<NodeId, NodeId>> got;
            for (auto [u, v] : oracle::edge_list(sub.graph))
                got.insert({sub.to_original[u], sub.to_original[v]});
            CHECK(got == expect_edges);
        }
    }
}

TEST_CASE("cumulative sequence stages and monotonicity") {
    // 1 ori -> 1 snp -> 1 cmt
    GraphBuilder b;
    b.add_node("o", NodeType::Origin);
    b.add_node("s", NodeType::Snapshot);
    b.add_node("c", NodeType::Commit);
    b.add_edge("o", "s");
    b.add_edge("s", "c");
    TypedGraph g = b.finish();
    auto stages = cumulative_sequence(g);
    REQUIRE(stages.size() == 6);
    CHECK(stages[0].graph.node_count == 1);
    CHECK(stages[0].graph.edge_count == 0);  // origins never link to origins
    CHECK(stages[5].graph == g);             // stage 6 is the full graph

    auto cc2 = connected_components(stages[1].graph);
    CHECK(cc2.size_hist.counts() ==
          std::map<std::uint64_t, std::uint64_t>{{2, 1}});
    auto cc4 = connected_components(stages[3].graph);
    CHECK(cc4.size_hist.counts() ==
          std::map<std::uint64_t, std::uint64_t>{{3, 1}});
}

TEST_CASE("cumulative stages are supersets of the previous stage") {
    TypedGraph g = generate_graph(RandomTypedSpec{80, 240, 3});
    auto stages = cumulative_sequence(g);
    std::set<NodeId> prev_nodes;
    std::set<std::pair<NodeId, NodeId>> prev_edges;
    for (const auto& stage : stages) {
        std::set<NodeId> nodes(stage.to_original.begin(), stage.to_original.end());
        std::set<std::pair<NodeId, NodeId>> edges;
        for (auto [u, v] : oracle::edge_list(stage.graph))
            edges.insert({stage.to_original[u], stage.to_original[v]});
        CHECK(std::includes(nodes.begin(), nodes.end(), prev_nodes.begin(),
                            prev_nodes.end()));
        CHECK(std::includes(edges.begin(), edges.end(), prev_edges.begin(),
                            prev_edges.end()));
        prev_nodes = std::move(nodes);
        prev_edges = std::move(edges);
    }
}
