#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "dagtopo/graph.hpp"

namespace dagtopo {

// Textual nodes/edges dataset format.
//
// Node lines are either a single SWHID (`swh:1:<type>:<40-hex>`) or a
// two-column `<identifier><sep><type>` form (used for origin URLs). Edge
// lines are two identifiers. Separators are tabs or spaces; files ending
// in .gz are decompressed transparently.

using NodeSink = std::function<void(std::string_view id, NodeType type)>;
using EdgeSink = std::function<void(std::string_view src, std::string_view dst)>;

void parse_nodes(const std::string& path, const NodeSink& sink);
void parse_edges(const std::string& path, const EdgeSink& sink);

// Full ingestion pipeline: parse both files and build the graph.
TypedGraph build_from_files(const std::string& nodes_path,
                            const std::string& edges_path,
                            Validation validation = Validation::Lenient,
                            EdgeTypePolicy policy = EdgeTypePolicy::standard(),
                            BuildStats* stats_out = nullptr);

// Compact binary topology file ("DTP1"): header, per-node type bytes,
// byte-offset tables, delta-varint successor lists for both directions,
// trailing CRC32. External ids go to a `<path>.ids` sidecar, one label per
// line in dense-id order.
void save_graph(const TypedGraph& g, const std::string& path);
TypedGraph load_graph(const std::string& path);

inline constexpr std::uint32_t kBinaryFormatVersion = 1;

}  // namespace dagtopo
