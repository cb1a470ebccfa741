#include <doctest.h>

#include <unistd.h>
#include <zlib.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "dagtopo/dataset_io.hpp"
#include "dagtopo/generate.hpp"

using namespace dagtopo;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("dagtopo_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

const std::string kDirA = "swh:1:dir:" + std::string(40, 'a');
const std::string kCntB = "swh:1:cnt:" + std::string(40, 'b');
const std::string kRevC = "swh:1:rev:" + std::string(40, 'c');

}  // namespace

TEST_CASE("parse nodes: SWHIDs, rev alias, origin two-column") {
    TempDir tmp;
    write_file(tmp.file("nodes"), kDirA + "\n" + kRevC + "\n" +
                                      "https://example.org/repo\tori\n");
    std::vector<std::pair<std::string, NodeType>> seen;
    parse_nodes(tmp.file("nodes"), [&](std::string_view id, NodeType t) {
        seen.emplace_back(std::string(id), t);
    });
    REQUIRE(seen.size() == 3);
    CHECK(seen[0] == std::pair{kDirA, NodeType::Directory});
    CHECK(seen[1] == std::pair{kRevC, NodeType::Commit});
    CHECK(seen[2] == std::pair{std::string("https://example.org/repo"),
                               NodeType::Origin});
}

TEST_CASE("parse edges: tab and space separated") {
    TempDir tmp;
    write_file(tmp.file("edges"), kDirA + "\t" + kCntB + "\n" + kDirA + " " +
                                      kCntB + "\n");
    int n = 0;
    parse_edges(tmp.file("edges"), [&](std::string_view s, std::string_view d) {
        CHECK(s == kDirA);
        CHECK(d == kCntB);
        ++n;
    });
    CHECK(n == 2);
}

TEST_CASE("malformed lines carry the line number") {
    TempDir tmp;
    write_file(tmp.file("nodes"), kDirA + "\nnot-a-swhid\n");
    CHECK_THROWS_WITH_AS(parse_nodes(tmp.file("nodes"), [](auto, auto) {}),
                         doctest::Contains(":2:"), IngestError);
    write_file(tmp.file("nodes2"), "swh:1:xyz:" + std::string(40, 'a') + "\tzzz\n");
    CHECK_THROWS_AS(parse_nodes(tmp.file("nodes2"), [](auto, auto) {}),
                    IngestError);
    write_file(tmp.file("edges"), kDirA + "\n");
    CHECK_THROWS_WITH_AS(parse_edges(tmp.file("edges"), [](auto, auto) {}),
                         doctest::Contains(":1:"), IngestError);
}

TEST_CASE("empty file pair builds the empty graph") {
    TempDir tmp;
    write_file(tmp.file("nodes"), "");
    write_file(tmp.file("edges"), "");
    TypedGraph g = build_from_files(tmp.file("nodes"), tmp.file("edges"));
    CHECK(g.node_count == 0);
    CHECK(g.edge_count == 0);
}

TEST_CASE("gzip inputs are transparent") {
    TempDir tmp;
    std::string nodes = kDirA + "\n" + kCntB + "\n";
    gzFile gz = gzopen(tmp.file("nodes.gz").c_str(), "wb");
    REQUIRE(gz);
    gzwrite(gz, nodes.data(), static_cast<unsigned>(nodes.size()));
    gzclose(gz);
    write_file(tmp.file("edges"), kDirA + "\t" + kCntB + "\n");
    TypedGraph g = build_from_files(tmp.file("nodes.gz"), tmp.file("edges"));
    CHECK(g.node_count == 2);
    CHECK(g.edge_count == 1);
}

TEST_CASE("binary round-trip of a small graph") {
    TempDir tmp;
    GraphBuilder b;
    b.add_node(kDirA, NodeType::Directory);
    b.add_node(kCntB, NodeType::Content);
    b.add_edge(kDirA, kCntB);
    TypedGraph g = b.finish();
    save_graph(g, tmp.file("g.bin"));
    CHECK(load_graph(tmp.file("g.bin")) == g);
}

TEST_CASE("binary round-trip property over random graphs") {
    TempDir tmp;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        TypedGraph g = generate_graph(
            RandomTypedSpec{seed % 40, (seed * 11) % 120, seed});
        save_graph(g, tmp.file("g.bin"));
        CHECK(load_graph(tmp.file("g.bin")) == g);
    }
}

TEST_CASE("varint gap encoding stays within the size bound") {
    TempDir tmp;
    TypedGraph g = generate_graph(RandomDagSpec{300, 3000, 5});
    save_graph(g, tmp.file("g.bin"));
    auto file_size = fs::file_size(tmp.file("g.bin"));
    std::uint64_t header = 4 + 4 + 8 + 8;
    std::uint64_t fixed = header + g.node_count + 2 * 8 * (g.node_count + 1) + 4;
    CHECK(file_size <= fixed + 2 * 5 * g.edge_count);
    // beats plain u64 lists on sorted successors
    CHECK(file_size - fixed <= 2 * 8 * g.edge_count);
}

TEST_CASE("truncated file is a corrupt-file error") {
    TempDir tmp;
    TypedGraph g = generate_graph(RandomDagSpec{20, 40, 1});
    save_graph(g, tmp.file("g.bin"));
    auto size = fs::file_size(tmp.file("g.bin"));
    fs::resize_file(tmp.file("g.bin"), size - 9);
    CHECK_THROWS_AS(load_graph(tmp.file("g.bin")), FormatError);
}

TEST_CASE("bad magic is an unsupported-format error") {
    TempDir tmp;
    write_file(tmp.file("g.bin"), "XXXXrest-of-file-does-not-matter");
    CHECK_THROWS_WITH_AS(load_graph(tmp.file("g.bin")),
                         doctest::Contains("unsupported format"), FormatError);
}

TEST_CASE("bit flip fails the CRC") {
    TempDir tmp;
    TypedGraph g = generate_graph(RandomDagSpec{20, 40, 2});
    save_graph(g, tmp.file("g.bin"));
    std::fstream f(tmp.file("g.bin"),
                   std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(30);
    char c;
    f.seekg(30);
    f.get(c);
    f.seekp(30);
    f.put(static_cast<char>(c ^ 0x40));
    f.close();
    CHECK_THROWS_AS(load_graph(tmp.file("g.bin")), FormatError);
}
