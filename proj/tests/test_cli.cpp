// End-to-end checks driving the installed binary. The binary path arrives as
// argv[1] from ctest.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

std::string g_bin;
fs::path g_dir;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    fs::path out = g_dir / "stdout.txt";
    fs::path err = g_dir / "stderr.txt";
    std::string cmd = g_bin + " " + args + " > " + out.string() + " 2> " +
                      err.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::string path(const std::string& name) { return (g_dir / name).string(); }

}  // namespace

TEST_CASE("usage errors exit 1") {
    CHECK(run("").exit_code == 1);
    CHECK(run("frobnicate").exit_code == 1);
    CHECK(run("build --nodes x").exit_code == 1);  // missing required options
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("missing input exits 2") {
    auto r = run("stats --graph " + path("no-such-file.bin"));
    CHECK(r.exit_code == 2);
    CHECK(!r.err.empty());
}

TEST_CASE("corrupt graph exits 2") {
    std::ofstream(path("junk.bin"), std::ios::binary) << "XXXX not a graph";
    CHECK(run("stats --graph " + path("junk.bin")).exit_code == 2);
}

TEST_CASE("chain pipeline: gen, build, paths") {
    REQUIRE(run("gen --kind chain --n 4 --nodes-out " + path("nodes") +
                " --edges-out " + path("edges"))
                .exit_code == 0);
    REQUIRE(run("build --nodes " + path("nodes") + " --edges " + path("edges") +
                " --out " + path("chain.bin") + " --validation strict")
                .exit_code == 0);
    REQUIRE(run("paths --graph " + path("chain.bin") + " --out " +
                path("paths.csv"))
                .exit_code == 0);
    CHECK(slurp(path("paths.csv")) == "value,count,ccdf\n3,1,1\n");
    CHECK(fs::exists(path("paths.csv") + ".manifest.json"));
    auto manifest = nlohmann::json::parse(slurp(path("paths.csv") +
                                                ".manifest.json"));
    CHECK(manifest.contains("command"));
    CHECK(manifest.contains("inputs"));
    CHECK(manifest["parameters"]["root_count"] == 1);
}

TEST_CASE("filesystem layer keeps only dir and cnt nodes") {
    REQUIRE(run("gen --kind layered --n 300 --m 900 --seed 1 --nodes-out " +
                path("lnodes") + " --edges-out " + path("ledges"))
                .exit_code == 0);
    REQUIRE(run("build --nodes " + path("lnodes") + " --edges " +
                path("ledges") + " --out " + path("layered.bin"))
                .exit_code == 0);
    REQUIRE(run("layer --graph " + path("layered.bin") +
                " --layer filesystem --out " + path("fs.bin") + " --map " +
                path("fs.map.csv"))
                .exit_code == 0);
    REQUIRE(run("stats --graph " + path("fs.bin") + " --out " +
                path("fs.stats.json"))
                .exit_code == 0);
    auto j = nlohmann::json::parse(slurp(path("fs.stats.json")));
    CHECK(j["nodes"]["ori"] == 0);
    CHECK(j["nodes"]["cmt"] == 0);
    CHECK(j["nodes"]["dir"].get<std::uint64_t>() > 0);
    CHECK(j["nodes"]["cnt"].get<std::uint64_t>() > 0);
    for (auto& [key, value] : j["edges"].items())
        CHECK((key == "dir->dir" || key == "dir->cnt"));
    CHECK(slurp(path("fs.map.csv")).starts_with("new_id,original_id\n0,"));
}

TEST_CASE("layer needs exactly one selector") {
    CHECK(run("layer --graph " + path("layered.bin") + " --out " +
              path("x.bin"))
              .exit_code == 1);
    CHECK(run("layer --graph " + path("layered.bin") +
              " --layer full --types dir --out " + path("x.bin"))
              .exit_code == 1);
    CHECK(run("layer --graph " + path("layered.bin") +
              " --types dir,cnt --out " + path("adhoc.bin"))
              .exit_code == 0);
}

TEST_CASE("reports are byte-identical across thread counts and reruns") {
    REQUIRE(fs::exists(path("layered.bin")));
    for (const char* t : {"1", "8"}) {
        std::string suffix = std::string(".t") + t;
        REQUIRE(run(std::string("--threads ") + t + " clustering --graph " +
                    path("layered.bin") + " --out " + path("clust" + suffix))
                    .exit_code == 0);
        REQUIRE(run(std::string("--threads ") + t + " paths --graph " +
                    path("layered.bin") + " --out " + path("paths" + suffix) +
                    " --sample-roots 3 --seed 7 --per-root " +
                    path("roots" + suffix))
                    .exit_code == 0);
    }
    CHECK(slurp(path("clust.t1")) == slurp(path("clust.t8")));
    CHECK(slurp(path("paths.t1")) == slurp(path("paths.t8")));
    CHECK(slurp(path("roots.t1")) == slurp(path("roots.t8")));

    REQUIRE(run("degrees --graph " + path("layered.bin") + " --out " +
                path("deg1.csv") + " --svg " + path("deg1.svg"))
                .exit_code == 0);
    REQUIRE(run("degrees --graph " + path("layered.bin") + " --out " +
                path("deg2.csv") + " --svg " + path("deg2.svg"))
                .exit_code == 0);
    CHECK(slurp(path("deg1.csv")) == slurp(path("deg2.csv")));
    CHECK(slurp(path("deg1.svg")) == slurp(path("deg2.svg")));
}

TEST_CASE("paths sampling requires a seed") {
    CHECK(run("paths --graph " + path("layered.bin") + " --out " +
              path("p.csv") + " --sample-roots 2")
              .exit_code == 1);
}

TEST_CASE("fit and ks round trip through the CLI") {
    REQUIRE(run("degrees --graph " + path("layered.bin") + " --direction in" +
                " --out " + path("indeg.csv"))
                .exit_code == 0);
    auto fit = run("fit --hist " + path("indeg.csv") + " --out " +
                   path("sweep.csv") + " --grid all --summary " +
                   path("fit.json") + " --svg " + path("sweep.svg"));
    REQUIRE(fit.exit_code == 0);
    CHECK(fit.out.find("decade amplitude") != std::string::npos);
    CHECK(slurp(path("sweep.csv")).starts_with("dmin,alpha,ntail\n"));
    auto fj = nlohmann::json::parse(slurp(path("fit.json")));
    CHECK(fj["decade_amplitude"].get<double>() >= 0.0);
    CHECK(slurp(path("sweep.svg")).starts_with("<svg"));

    REQUIRE(run("cc --graph " + path("layered.bin") + " --out " +
                path("cc.csv") + " --weighted " + path("w1.csv") +
                " --summary " + path("cc.json"))
                .exit_code == 0);
    REQUIRE(run("cc --graph " + path("layered.bin") + " --out " +
                path("cc2.csv") + " --weighted " + path("w2.csv") +
                " --require-commit")
                .exit_code == 0);
    auto ks = run("ks --a " + path("w1.csv") + " --b " + path("w2.csv") +
                  " --out " + path("ks.json"));
    REQUIRE(ks.exit_code == 0);
    auto kj = nlohmann::json::parse(slurp(path("ks.json")));
    double d = kj["statistic"].get<double>();
    CHECK(d >= 0.0);
    CHECK(d <= 1.0);
    CHECK(kj["support_size"].get<std::uint64_t>() >= 1);
}

TEST_CASE("degenerate analysis input exits 3") {
    std::ofstream(path("zeros.csv"), std::ios::binary)
        << "value,count,ccdf\n0,5,5\n";
    auto r = run("fit --hist " + path("zeros.csv") + " --out " +
                 path("zsweep.csv"));
    CHECK(r.exit_code == 3);
}

TEST_CASE("plot renders saved reports") {
    REQUIRE(run("plot --hist " + path("indeg.csv") + " --out " +
                path("indeg.svg") + " --scale log-log --title indegrees")
                .exit_code == 0);
    auto svg = slurp(path("indeg.svg"));
    CHECK(svg.starts_with("<svg"));
    CHECK(svg.find("indegrees") != std::string::npos);
    CHECK(run("plot --sweep " + path("sweep.csv") + " --out " +
              path("sweep2.svg"))
              .exit_code == 0);
    CHECK(run("plot --out " + path("nothing.svg")).exit_code == 1);
}

int main_impl(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_tests <dagtopo-binary> [doctest args]\n");
        return 1;
    }
    g_bin = argv[1];
    g_dir = fs::temp_directory_path() /
            ("dagtopo_cli_" + std::to_string(::getpid()));
    fs::create_directories(g_dir);
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    int rc = ctx.run();
    fs::remove_all(g_dir);
    return rc;
}

int main(int argc, char** argv) { return main_impl(argc, argv); }
