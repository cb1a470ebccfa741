// dagtopo: batch topology analytics for typed software-artifact graphs.
//
// Pipeline: gen/build -> stats/layer -> degrees/clustering/cc/paths ->
// fit/ks/plot. Every report is written with a sibling manifest so a run can
// be replicated from its seeds and input digests.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dagtopo/components.hpp"
#include "dagtopo/dataset_io.hpp"
#include "dagtopo/degree.hpp"
#include "dagtopo/fit.hpp"
#include "dagtopo/generate.hpp"
#include "dagtopo/layers.hpp"
#include "dagtopo/manifest.hpp"
#include "dagtopo/paths.hpp"
#include "dagtopo/report_io.hpp"

namespace {

using namespace dagtopo;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;

struct RunContext {
    std::string command;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, std::string>> inputs;
    json parameters = json::object();
    std::vector<std::string> reports;

    void input(const std::string& path) {
        char hex[16];
        std::snprintf(hex, sizeof hex, "%08x", file_crc32(path));
        inputs.emplace_back(path, hex);
    }

    void finish() {
        RunManifest m;
        m.command = command;
        m.inputs = inputs;
        m.parameters = parameters;
        m.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        m.peak_rss_bytes = peak_rss_bytes();
        write_manifests(m, reports);
    }
};

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

std::string human_count(std::uint64_t n) {
    char buf[32];
    if (n >= 1000000000ULL && n % 100000000ULL == 0)
        std::snprintf(buf, sizeof buf, "%.1f B", double(n) / 1e9);
    else if (n >= 1000000000ULL)
        std::snprintf(buf, sizeof buf, "%llu", (unsigned long long)n);
    else
        std::snprintf(buf, sizeof buf, "%llu", (unsigned long long)n);
    return buf;
}

void print_stats_table(const TypedGraph& g, std::ostream& out) {
    static const char* node_row[kNodeTypeCount] = {
        "origins (ori)", "snapshots (snp)", "releases (rel)",
        "commits (cmt)", "directories (dir)", "files",
    };
    auto nc = g.type_counts();
    out << "Nodes\n";
    for (int t = 0; t < kNodeTypeCount; ++t)
        out << "  " << node_row[t] << "\t" << human_count(nc[t]) << "\n";
    out << "  total\t" << human_count(g.node_count) << "\n";

    auto ec = g.edge_type_counts();
    // Data-model order first, then any remaining nonzero pairs.
    static const std::pair<NodeType, NodeType> canonical[] = {
        {NodeType::Origin, NodeType::Snapshot},
        {NodeType::Snapshot, NodeType::Release},
        {NodeType::Snapshot, NodeType::Commit},
        {NodeType::Release, NodeType::Commit},
        {NodeType::Commit, NodeType::Commit},
        {NodeType::Commit, NodeType::Directory},
        {NodeType::Directory, NodeType::Directory},
        {NodeType::Directory, NodeType::Content},
    };
    auto edge_label = [](NodeType s, NodeType d) {
        std::string dst = d == NodeType::Content ? "file" : std::string(short_name(d));
        return std::string(short_name(s)) + "->" + dst;
    };
    out << "Edges\n";
    std::array<std::array<bool, kNodeTypeCount>, kNodeTypeCount> printed{};
    for (auto [s, d] : canonical) {
        std::uint64_t c = ec[int(s)][int(d)];
        printed[int(s)][int(d)] = true;
        if (c > 0) out << "  " << edge_label(s, d) << "\t" << human_count(c) << "\n";
    }
    for (int s = 0; s < kNodeTypeCount; ++s)
        for (int d = 0; d < kNodeTypeCount; ++d)
            if (!printed[s][d] && ec[s][d] > 0)
                out << "  "
                    << edge_label(static_cast<NodeType>(s), static_cast<NodeType>(d))
                    << "\t" << human_count(ec[s][d]) << "\n";
    out << "  total\t" << human_count(g.edge_count) << "\n";
}

json stats_json(const TypedGraph& g) {
    json j;
    j["node_count"] = g.node_count;
    j["edge_count"] = g.edge_count;
    auto nc = g.type_counts();
    json nodes = json::object();
    for (int t = 0; t < kNodeTypeCount; ++t)
        nodes[std::string(short_name(static_cast<NodeType>(t)))] = nc[t];
    j["nodes"] = nodes;
    auto ec = g.edge_type_counts();
    json edges = json::object();
    for (int s = 0; s < kNodeTypeCount; ++s)
        for (int d = 0; d < kNodeTypeCount; ++d)
            if (ec[s][d] > 0)
                edges[std::string(short_name(static_cast<NodeType>(s))) + "->" +
                      std::string(short_name(static_cast<NodeType>(d)))] = ec[s][d];
    j["edges"] = edges;
    return j;
}

LayerSpec parse_layer_arg(const std::string& layer, const std::string& types_csv) {
    if (!layer.empty()) {
        auto spec = builtin_layer(layer);
        if (!spec) throw CLI::ValidationError("--layer", "unknown layer " + layer);
        return *spec;
    }
    LayerSpec spec;
    spec.name = "custom";
    std::stringstream ss(types_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto t = parse_node_type(tok);
        if (!t) throw CLI::ValidationError("--types", "unknown type " + tok);
        spec.types[static_cast<int>(*t)] = true;
    }
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Typed-graph topology analytics"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "worker thread cap (0 = all cores)")
        ->envname("DAGTOPO_THREADS");

    RunContext ctx;
    ctx.command = join_args(argc, argv);

    // ---- build ----
    auto* build = app.add_subcommand("build", "ingest nodes/edges text files");
    std::string nodes_path, edges_path, out_path, validation_str = "lenient";
    build->add_option("--nodes", nodes_path, "nodes file (.gz ok)")->required();
    build->add_option("--edges", edges_path, "edges file (.gz ok)")->required();
    build->add_option("--out", out_path, "output binary graph")->required();
    build->add_option("--validation", validation_str, "strict|lenient")
        ->check(CLI::IsMember({"strict", "lenient"}));

    // ---- stats ----
    auto* stats = app.add_subcommand("stats", "per-type node/edge counts");
    std::string graph_path, stats_out;
    stats->add_option("--graph", graph_path, "binary graph")->required();
    stats->add_option("--out", stats_out, "also write JSON report");

    // ---- layer ----
    auto* layer = app.add_subcommand("layer", "extract an induced subgraph");
    std::string layer_graph, layer_name, layer_types, layer_out, layer_map;
    layer->add_option("--graph", layer_graph)->required();
    layer->add_option("--layer", layer_name,
                      "full|filesystem|history|commit|hosting");
    layer->add_option("--types", layer_types, "ad-hoc comma-separated type set");
    layer->add_option("--out", layer_out, "output binary graph")->required();
    layer->add_option("--map", layer_map, "CSV new_id,original_id");

    // ---- degrees ----
    auto* degrees_cmd = app.add_subcommand("degrees", "degree distribution");
    std::string deg_graph, deg_dir = "out", deg_out, deg_per_type, deg_svg,
                deg_scale = "log-log";
    degrees_cmd->add_option("--graph", deg_graph)->required();
    degrees_cmd->add_option("--direction", deg_dir, "in|out")
        ->check(CLI::IsMember({"in", "out"}));
    degrees_cmd->add_option("--out", deg_out, "histogram CSV")->required();
    degrees_cmd->add_option("--per-type", deg_per_type,
                            "prefix for per-type CSVs (<prefix><type>.csv)");
    degrees_cmd->add_option("--svg", deg_svg, "plot file");
    degrees_cmd->add_option("--scale", deg_scale, "x-y plot scales");

    // ---- clustering ----
    auto* clust = app.add_subcommand("clustering",
                                     "unnormalized local clustering distribution");
    std::string cl_graph, cl_out, cl_svg, cl_scale = "log-log";
    clust->add_option("--graph", cl_graph)->required();
    clust->add_option("--out", cl_out, "histogram CSV")->required();
    clust->add_option("--svg", cl_svg, "plot file");
    clust->add_option("--scale", cl_scale, "x-y plot scales");

    // ---- cc ----
    auto* cc = app.add_subcommand("cc", "connected components");
    std::string cc_graph, cc_out, cc_membership, cc_summary, cc_weighted;
    bool cc_require_commit = false;
    cc->add_option("--graph", cc_graph)->required();
    cc->add_option("--out", cc_out, "size histogram CSV")->required();
    cc->add_option("--membership", cc_membership, "CSV node_id,component_id");
    cc->add_option("--summary", cc_summary, "JSON summary");
    cc->add_option("--weighted", cc_weighted,
                   "origin-weighted size distribution CSV");
    cc->add_flag("--require-commit", cc_require_commit,
                 "restrict weighted distribution to components with a commit");

    // ---- paths ----
    auto* paths_cmd = app.add_subcommand("paths", "root-to-leaf path lengths");
    std::string p_graph, p_out, p_per_root;
    std::uint64_t p_sample = 0, p_seed = 0;
    bool p_seed_set = false;
    paths_cmd->add_option("--graph", p_graph)->required();
    paths_cmd->add_option("--out", p_out, "histogram CSV")->required();
    auto* sample_opt =
        paths_cmd->add_option("--sample-roots", p_sample, "BFS only this many roots");
    paths_cmd->add_option("--seed", p_seed, "sampling seed")
        ->each([&](const std::string&) { p_seed_set = true; });
    paths_cmd->add_option("--per-root", p_per_root, "CSV root_id,mean_length");

    // ---- fit ----
    auto* fit = app.add_subcommand("fit", "power-law tail estimator sweep");
    std::string f_hist, f_out, f_grid = "log", f_svg, f_summary;
    fit->add_option("--hist", f_hist, "histogram CSV input")->required();
    fit->add_option("--out", f_out, "sweep CSV")->required();
    fit->add_option("--grid", f_grid, "all|log")
        ->check(CLI::IsMember({"all", "log"}));
    fit->add_option("--svg", f_svg, "plot file (log-lin)");
    fit->add_option("--summary", f_summary, "JSON with decade amplitude");

    // ---- ks ----
    auto* ks = app.add_subcommand("ks", "Kolmogorov-Smirnov distance");
    std::string ks_a, ks_b, ks_out;
    ks->add_option("--a", ks_a, "weighted CSV")->required();
    ks->add_option("--b", ks_b, "weighted CSV")->required();
    ks->add_option("--out", ks_out, "JSON result")->required();

    // ---- plot ----
    auto* plot = app.add_subcommand("plot", "render a report as SVG");
    std::string pl_hist, pl_sweep, pl_out, pl_scale, pl_title;
    plot->add_option("--hist", pl_hist, "histogram CSV");
    plot->add_option("--sweep", pl_sweep, "sweep CSV");
    plot->add_option("--out", pl_out, "SVG file")->required();
    plot->add_option("--scale", pl_scale, "x-y scales (default per input)");
    plot->add_option("--title", pl_title);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "synthetic dataset generator");
    std::string g_kind, g_nodes_out, g_edges_out;
    std::uint64_t g_n = 0, g_m = 0, g_seed = 0;
    double g_alpha = 2.5;
    bool g_seed_set = false;
    gen->add_option("--kind", g_kind, "chain|dag|layered|powerlaw")
        ->required()
        ->check(CLI::IsMember({"chain", "dag", "layered", "powerlaw"}));
    gen->add_option("--n", g_n, "node count")->required();
    gen->add_option("--m", g_m, "edge budget (dag, layered)");
    gen->add_option("--alpha", g_alpha, "power-law exponent");
    gen->add_option("--seed", g_seed, "generator seed")
        ->each([&](const std::string&) { g_seed_set = true; });
    gen->add_option("--nodes-out", g_nodes_out)->required();
    gen->add_option("--edges-out", g_edges_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*build) {
            ctx.input(nodes_path);
            ctx.input(edges_path);
            Validation v = validation_str == "strict" ? Validation::Strict
                                                      : Validation::Lenient;
            BuildStats bs;
            TypedGraph g = build_from_files(nodes_path, edges_path, v,
                                            EdgeTypePolicy::standard(), &bs);
            save_graph(g, out_path);
            ctx.parameters["validation"] = validation_str;
            ctx.parameters["node_count"] = g.node_count;
            ctx.parameters["edge_count"] = g.edge_count;
            ctx.parameters["self_loops_dropped"] = bs.self_loops_dropped;
            ctx.parameters["duplicate_edges_collapsed"] = bs.duplicate_edges_collapsed;
            ctx.parameters["rule_violations"] = bs.rule_violations;
            ctx.reports = {out_path};
            std::cout << "built " << out_path << ": " << g.node_count << " nodes, "
                      << g.edge_count << " edges (" << bs.self_loops_dropped
                      << " self-loops dropped, " << bs.duplicate_edges_collapsed
                      << " duplicates collapsed, " << bs.rule_violations
                      << " rule violations kept)\n";
        } else if (*stats) {
            ctx.input(graph_path);
            TypedGraph g = load_graph(graph_path);
            print_stats_table(g, std::cout);
            if (!stats_out.empty()) {
                std::ofstream out(stats_out, std::ios::binary);
                if (!out) throw FormatError("cannot write " + stats_out);
                out << stats_json(g).dump(2) << '\n';
                ctx.reports = {stats_out};
            }
        } else if (*layer) {
            if (layer_name.empty() == layer_types.empty())
                throw CLI::ValidationError("--layer",
                                           "give exactly one of --layer/--types");
            ctx.input(layer_graph);
            TypedGraph g = load_graph(layer_graph);
            LayerSpec spec = parse_layer_arg(layer_name, layer_types);
            InducedGraph sub = induce(g, spec);
            save_graph(sub.graph, layer_out);
            ctx.reports = {layer_out};
            if (!layer_map.empty()) {
                std::ofstream out(layer_map, std::ios::binary);
                if (!out) throw FormatError("cannot write " + layer_map);
                out << "new_id,original_id\n";
                for (NodeId v = 0; v < sub.graph.node_count; ++v)
                    out << v << ',' << sub.to_original[v] << '\n';
                ctx.reports.push_back(layer_map);
            }
            ctx.parameters["layer"] = spec.name;
            ctx.parameters["node_count"] = sub.graph.node_count;
            ctx.parameters["edge_count"] = sub.graph.edge_count;
            std::cout << "layer " << spec.name << ": " << sub.graph.node_count
                      << " nodes, " << sub.graph.edge_count << " edges\n";
        } else if (*degrees_cmd) {
            ctx.input(deg_graph);
            TypedGraph g = load_graph(deg_graph);
            Direction dir = deg_dir == "in" ? Direction::In : Direction::Out;
            DegreeReport r = degrees(g, dir);
            save_histogram_csv(r.overall, deg_out);
            ctx.reports = {deg_out};
            if (!deg_per_type.empty()) {
                for (int t = 0; t < kNodeTypeCount; ++t) {
                    std::string path = deg_per_type +
                                       std::string(short_name(static_cast<NodeType>(t))) +
                                       ".csv";
                    save_histogram_csv(r.per_type[t], path);
                    ctx.reports.push_back(path);
                }
            }
            if (!deg_svg.empty()) {
                PlotOptions opts;
                if (!parse_scale(deg_scale, opts.x, opts.y))
                    throw CLI::ValidationError("--scale", "bad scale " + deg_scale);
                opts.title = deg_dir + "degree distribution";
                opts.x_label = "degree";
                save_histogram_svg(r.overall, opts, deg_svg);
                ctx.reports.push_back(deg_svg);
            }
            ctx.parameters["direction"] = deg_dir;
            ctx.parameters["min"] = r.min;
            ctx.parameters["max"] = r.max;
            ctx.parameters["mean"] = r.mean;
        } else if (*clust) {
            ctx.input(cl_graph);
            TypedGraph g = load_graph(cl_graph);
            ClusteringReport r = local_clustering(g, threads);
            save_histogram_csv(r.hist, cl_out);
            ctx.reports = {cl_out};
            if (!cl_svg.empty()) {
                PlotOptions opts;
                if (!parse_scale(cl_scale, opts.x, opts.y))
                    throw CLI::ValidationError("--scale", "bad scale " + cl_scale);
                opts.title = "local clustering distribution";
                opts.x_label = "neighbor edges";
                save_histogram_svg(r.hist, opts, cl_svg);
                ctx.reports.push_back(cl_svg);
            }
        } else if (*cc) {
            ctx.input(cc_graph);
            TypedGraph g = load_graph(cc_graph);
            ComponentReport r = connected_components(g);
            save_histogram_csv(r.size_hist, cc_out);
            ctx.reports = {cc_out};
            if (!cc_membership.empty()) {
                std::ofstream out(cc_membership, std::ios::binary);
                if (!out) throw FormatError("cannot write " + cc_membership);
                out << "node_id,component_id\n";
                for (NodeId v = 0; v < g.node_count; ++v)
                    out << v << ',' << r.component_of[v] << '\n';
                ctx.reports.push_back(cc_membership);
            }
            if (!cc_weighted.empty()) {
                auto d = origin_weighted_size_distribution(r, cc_require_commit);
                save_weighted_csv(d, cc_weighted);
                ctx.reports.push_back(cc_weighted);
            }
            json summary;
            summary["component_count"] = r.component_count;
            summary["largest_size"] = r.largest_size;
            summary["isolated_origin_count"] = r.isolated_origin_count;
            if (!cc_summary.empty()) {
                std::ofstream out(cc_summary, std::ios::binary);
                if (!out) throw FormatError("cannot write " + cc_summary);
                out << summary.dump(2) << '\n';
                ctx.reports.push_back(cc_summary);
            }
            ctx.parameters["require_commit"] = cc_require_commit;
            ctx.parameters.update(summary);
            std::cout << summary.dump(2) << '\n';
        } else if (*paths_cmd) {
            ctx.input(p_graph);
            TypedGraph g = load_graph(p_graph);
            std::optional<RootSample> sample;
            if (sample_opt->count() > 0) {
                if (!p_seed_set)
                    throw CLI::ValidationError("--sample-roots", "requires --seed");
                sample = RootSample{p_sample, p_seed};
            }
            PathLengthReport r = root_leaf_path_lengths(g, sample, threads,
                                                        !p_per_root.empty());
            save_histogram_csv(r.hist, p_out);
            ctx.reports = {p_out};
            if (!p_per_root.empty()) {
                std::ofstream out(p_per_root, std::ios::binary);
                if (!out) throw FormatError("cannot write " + p_per_root);
                out << "root_id,mean_length\n";
                for (const auto& [root, mean] : r.per_root_mean)
                    out << root << ',' << format_real(mean) << '\n';
                ctx.reports.push_back(p_per_root);
            }
            ctx.parameters["root_count"] = r.root_count;
            ctx.parameters["leaf_count"] = r.leaf_count;
            ctx.parameters["sampled"] = r.sampled;
            if (r.sample_seed) ctx.parameters["sample_seed"] = *r.sample_seed;
            if (r.no_roots_or_leaves) {
                ctx.parameters["warning"] = "no roots or no leaves";
                std::cerr << "warning: graph has no roots or no leaves; empty "
                             "histogram\n";
            }
        } else if (*fit) {
            ctx.input(f_hist);
            std::ifstream in(f_hist, std::ios::binary);
            if (!in) throw IngestError("cannot open " + f_hist);
            Histogram h = read_histogram_csv(in);
            AlphaSweep sweep =
                alpha_sweep(h, f_grid == "all" ? SweepGrid::All : SweepGrid::Log);
            save_sweep_csv(sweep, f_out);
            ctx.reports = {f_out};
            double amplitude = decade_amplitude(h);
            if (!f_svg.empty()) {
                PlotOptions opts;
                opts.x = AxisScale::Log;  // log-lin, the conventional sweep view
                opts.y = AxisScale::Lin;
                opts.title = "power-law tail estimator sweep";
                opts.x_label = "d_min";
                opts.y_label = "alpha";
                save_sweep_svg(sweep, opts, f_svg);
                ctx.reports.push_back(f_svg);
            }
            if (!f_summary.empty()) {
                json j;
                j["decade_amplitude"] = amplitude;
                j["probes"] = sweep.entries.size();
                std::ofstream out(f_summary, std::ios::binary);
                if (!out) throw FormatError("cannot write " + f_summary);
                out << j.dump(2) << '\n';
                ctx.reports.push_back(f_summary);
            }
            ctx.parameters["grid"] = f_grid;
            ctx.parameters["decade_amplitude"] = amplitude;
            std::cout << "decade amplitude: " << format_real(amplitude) << '\n';
        } else if (*ks) {
            ctx.input(ks_a);
            ctx.input(ks_b);
            std::ifstream ia(ks_a, std::ios::binary), ib(ks_b, std::ios::binary);
            if (!ia) throw IngestError("cannot open " + ks_a);
            if (!ib) throw IngestError("cannot open " + ks_b);
            KsResult r = ks_distance(read_weighted_csv(ia), read_weighted_csv(ib));
            json j;
            j["statistic"] = r.statistic;
            j["support_size"] = r.support_size;
            std::ofstream out(ks_out, std::ios::binary);
            if (!out) throw FormatError("cannot write " + ks_out);
            out << j.dump(2) << '\n';
            ctx.reports = {ks_out};
            std::cout << "D = " << format_real(r.statistic) << '\n';
        } else if (*plot) {
            if (pl_hist.empty() == pl_sweep.empty())
                throw CLI::ValidationError("--hist",
                                           "give exactly one of --hist/--sweep");
            PlotOptions opts;
            opts.title = pl_title;
            if (!pl_hist.empty()) {
                ctx.input(pl_hist);
                std::ifstream in(pl_hist, std::ios::binary);
                if (!in) throw IngestError("cannot open " + pl_hist);
                if (!pl_scale.empty() && !parse_scale(pl_scale, opts.x, opts.y))
                    throw CLI::ValidationError("--scale", "bad scale " + pl_scale);
                save_histogram_svg(read_histogram_csv(in), opts, pl_out);
            } else {
                ctx.input(pl_sweep);
                std::ifstream in(pl_sweep, std::ios::binary);
                if (!in) throw IngestError("cannot open " + pl_sweep);
                opts.x = AxisScale::Log;
                opts.y = AxisScale::Lin;
                if (!pl_scale.empty() && !parse_scale(pl_scale, opts.x, opts.y))
                    throw CLI::ValidationError("--scale", "bad scale " + pl_scale);
                opts.x_label = "d_min";
                opts.y_label = "alpha";
                save_sweep_svg(read_sweep_csv(in), opts, pl_out);
            }
            ctx.reports = {pl_out};
        } else if (*gen) {
            bool needs_seed = g_kind != "chain";
            if (needs_seed && !g_seed_set)
                throw CLI::ValidationError("--seed",
                                           "required for randomized generators");
            GenSpec spec;
            if (g_kind == "chain") {
                spec = ChainSpec{g_n};
            } else if (g_kind == "dag") {
                spec = RandomDagSpec{g_n, g_m, g_seed};
            } else if (g_kind == "layered") {
                spec = LayeredSpec::scaled(g_n, g_m, g_seed);
            } else {
                spec = PowerlawSpec{g_n, g_alpha, g_seed};
            }
            generate_dataset(spec, g_nodes_out, g_edges_out);
            ctx.parameters["kind"] = g_kind;
            ctx.parameters["n"] = g_n;
            ctx.parameters["m"] = g_m;
            ctx.parameters["alpha"] = g_alpha;
            if (g_seed_set) ctx.parameters["seed"] = g_seed;
            ctx.reports = {g_nodes_out, g_edges_out};
        }
        ctx.finish();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}
