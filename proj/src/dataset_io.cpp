#include "dagtopo/dataset_io.hpp"

#include <zlib.h>

#include <cctype>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <vector>

namespace dagtopo {

namespace {

// gzopen reads plain files transparently, so one reader covers both.
class LineSource {
public:
    explicit LineSource(const std::string& path) : path_(path) {
        f_ = gzopen(path.c_str(), "rb");
        if (!f_) throw IngestError("cannot open " + path);
        gzbuffer(f_, 1 << 20);
    }
    ~LineSource() {
        if (f_) gzclose(f_);
    }
    LineSource(const LineSource&) = delete;
    LineSource& operator=(const LineSource&) = delete;

    // Returns false at EOF. Strips trailing \n and \r.
    bool next(std::string& line) {
        line.clear();
        char buf[1 << 16];
        bool got = false;
        for (;;) {
            if (!gzgets(f_, buf, sizeof buf)) {
                int errnum = 0;
                const char* msg = gzerror(f_, &errnum);
                if (errnum != Z_OK && errnum != Z_STREAM_END)
                    throw IngestError("read error in " + path_ + ": " + msg);
                return got;
            }
            got = true;
            std::size_t len = std::strlen(buf);
            bool complete = len > 0 && buf[len - 1] == '\n';
            line.append(buf, complete ? len - 1 : len);
            if (complete) break;
        }
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    }

private:
    std::string path_;
    gzFile f_ = nullptr;
};

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

bool is_hex40(std::string_view s) {
    if (s.size() != 40) return false;
    for (char c : s)
        if (!std::isxdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// "swh:1:dir:<40-hex>" -> Directory, etc. nullopt if not SWHID-shaped.
std::optional<NodeType> swhid_type(std::string_view id) {
    constexpr std::string_view prefix = "swh:1:";
    if (!id.starts_with(prefix)) return std::nullopt;
    std::string_view rest = id.substr(prefix.size());
    std::size_t colon = rest.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    auto t = parse_node_type(rest.substr(0, colon));
    if (!t || !is_hex40(rest.substr(colon + 1))) return std::nullopt;
    return t;
}

[[noreturn]] void malformed(const std::string& path, std::uint64_t line_no,
                            const std::string& what) {
    throw IngestError(path + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

void parse_nodes(const std::string& path, const NodeSink& sink) {
    LineSource src(path);
    std::string line;
    std::uint64_t line_no = 0;
    while (src.next(line)) {
        ++line_no;
        auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (fields.size() == 1) {
            auto t = swhid_type(fields[0]);
            if (!t) malformed(path, line_no, "malformed SWHID");
            sink(fields[0], *t);
        } else if (fields.size() == 2) {
            auto t = parse_node_type(fields[1]);
            if (!t) malformed(path, line_no,
                              "unknown type token '" + std::string(fields[1]) + "'");
            sink(fields[0], *t);
        } else {
            malformed(path, line_no, "expected 1 or 2 columns");
        }
    }
}

void parse_edges(const std::string& path, const EdgeSink& sink) {
    LineSource src(path);
    std::string line;
    std::uint64_t line_no = 0;
    while (src.next(line)) {
        ++line_no;
        auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (fields.size() != 2) malformed(path, line_no, "expected 2 columns");
        sink(fields[0], fields[1]);
    }
}

TypedGraph build_from_files(const std::string& nodes_path,
                            const std::string& edges_path, Validation validation,
                            EdgeTypePolicy policy, BuildStats* stats_out) {
    GraphBuilder builder(validation, policy);
    parse_nodes(nodes_path,
                [&](std::string_view id, NodeType t) { builder.add_node(id, t); });
    parse_edges(edges_path, [&](std::string_view s, std::string_view d) {
        builder.add_edge(s, d);
    });
    TypedGraph g = builder.finish();
    if (stats_out) *stats_out = builder.stats();
    return g;
}

// ---------------------------------------------------------------------------
// Binary format
// ---------------------------------------------------------------------------

namespace {

constexpr char kMagic[4] = {'D', 'T', 'P', '1'};

class CrcWriter {
public:
    explicit CrcWriter(const std::string& path) {
        f_ = std::fopen(path.c_str(), "wb");
        if (!f_) throw FormatError("cannot open " + path + " for writing");
    }
    ~CrcWriter() {
        if (f_) std::fclose(f_);
    }
    CrcWriter(const CrcWriter&) = delete;
    CrcWriter& operator=(const CrcWriter&) = delete;

    void write(const void* data, std::size_t n) {
        if (n == 0) return;
        if (std::fwrite(data, 1, n, f_) != n)
            throw FormatError("short write to output file");
        crc_ = crc32_z(crc_, static_cast<const Bytef*>(data), n);
    }

    void write_u32(std::uint32_t v) {
        unsigned char b[4];
        for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
        write(b, 4);
    }

    void write_u64(std::uint64_t v) {
        unsigned char b[8];
        for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
        write(b, 8);
    }

    // Trailing CRC is not itself covered by the checksum.
    void finish_with_crc() {
        std::uint32_t crc = static_cast<std::uint32_t>(crc_);
        unsigned char b[4];
        for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(crc >> (8 * i));
        if (std::fwrite(b, 1, 4, f_) != 4) throw FormatError("short write");
        if (std::fclose(f_) != 0) {
            f_ = nullptr;
            throw FormatError("close failed");
        }
        f_ = nullptr;
    }

private:
    std::FILE* f_ = nullptr;
    uLong crc_ = crc32_z(0L, nullptr, 0);
};

class CrcReader {
public:
    explicit CrcReader(const std::string& path) {
        std::error_code ec;
        auto size = std::filesystem::file_size(path, ec);
        if (ec) throw FormatError("cannot stat " + path);
        if (size < 4) throw FormatError("truncated file: " + path);
        payload_left_ = size - 4;
        f_ = std::fopen(path.c_str(), "rb");
        if (!f_) throw FormatError("cannot open " + path);
    }
    ~CrcReader() {
        if (f_) std::fclose(f_);
    }
    CrcReader(const CrcReader&) = delete;
    CrcReader& operator=(const CrcReader&) = delete;

    void read(void* data, std::size_t n) {
        if (n == 0) return;  // crc32_z(_, nullptr, 0) would reset the CRC
        if (n > payload_left_) throw FormatError("truncated file");
        if (std::fread(data, 1, n, f_) != n) throw FormatError("truncated file");
        crc_ = crc32_z(crc_, static_cast<const Bytef*>(data), n);
        payload_left_ -= n;
    }

    std::uint32_t read_u32() {
        unsigned char b[4];
        read(b, 4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= std::uint32_t(b[i]) << (8 * i);
        return v;
    }

    std::uint64_t read_u64() {
        unsigned char b[8];
        read(b, 8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= std::uint64_t(b[i]) << (8 * i);
        return v;
    }

    std::uint64_t payload_left() const { return payload_left_; }

    void verify_crc() {
        if (payload_left_ != 0) throw FormatError("trailing data before CRC");
        unsigned char b[4];
        if (std::fread(b, 1, 4, f_) != 4) throw FormatError("truncated file");
        std::uint32_t stored = 0;
        for (int i = 0; i < 4; ++i) stored |= std::uint32_t(b[i]) << (8 * i);
        if (stored != static_cast<std::uint32_t>(crc_))
            throw FormatError("corrupt file: CRC mismatch");
    }

private:
    std::FILE* f_ = nullptr;
    uLong crc_ = crc32_z(0L, nullptr, 0);
    std::uint64_t payload_left_ = 0;
};

void append_varint(std::vector<unsigned char>& out, std::uint64_t v) {
    while (v >= 0x80) {
        out.push_back(static_cast<unsigned char>(v) | 0x80);
        v >>= 7;
    }
    out.push_back(static_cast<unsigned char>(v));
}

std::uint64_t read_varint(const unsigned char*& p, const unsigned char* end) {
    std::uint64_t v = 0;
    int shift = 0;
    for (;;) {
        if (p == end) throw FormatError("truncated varint");
        unsigned char byte = *p++;
        if (shift >= 64) throw FormatError("varint overflow");
        v |= std::uint64_t(byte & 0x7F) << shift;
        if (!(byte & 0x80)) return v;
        shift += 7;
    }
}

// First target absolute, the rest as (gap - 1); lists are strictly
// increasing so every gap is >= 1.
void encode_adjacency(const Adjacency& adj, std::uint64_t node_count,
                      std::vector<unsigned char>& region,
                      std::vector<std::uint64_t>& byte_offsets) {
    region.clear();
    byte_offsets.assign(node_count + 1, 0);
    for (std::uint64_t v = 0; v < node_count; ++v) {
        auto nbrs = adj.neighbors(static_cast<NodeId>(v));
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            append_varint(region, i == 0 ? nbrs[0]
                                         : std::uint64_t(nbrs[i]) - nbrs[i - 1] - 1);
        }
        byte_offsets[v + 1] = region.size();
    }
}

Adjacency decode_adjacency(CrcReader& in, std::uint64_t node_count,
                           std::uint64_t edge_count) {
    std::vector<std::uint64_t> byte_offsets(node_count + 1);
    for (auto& o : byte_offsets) o = in.read_u64();
    for (std::uint64_t v = 0; v < node_count; ++v)
        if (byte_offsets[v] > byte_offsets[v + 1])
            throw FormatError("offset table not monotone");
    std::vector<unsigned char> region(byte_offsets[node_count]);
    in.read(region.data(), region.size());

    Adjacency adj;
    adj.offsets.assign(node_count + 1, 0);
    adj.targets.reserve(edge_count);
    for (std::uint64_t v = 0; v < node_count; ++v) {
        const unsigned char* p = region.data() + byte_offsets[v];
        const unsigned char* end = region.data() + byte_offsets[v + 1];
        std::uint64_t prev = 0;
        bool first = true;
        while (p != end) {
            std::uint64_t delta = read_varint(p, end);
            std::uint64_t t = first ? delta : prev + delta + 1;
            first = false;
            if (t >= node_count) throw FormatError("target id out of range");
            adj.targets.push_back(static_cast<NodeId>(t));
            prev = t;
        }
        adj.offsets[v + 1] = adj.targets.size();
    }
    return adj;
}

std::string sidecar_path(const std::string& path) { return path + ".ids"; }

}  // namespace

void save_graph(const TypedGraph& g, const std::string& path) {
    CrcWriter out(path);
    out.write(kMagic, 4);
    out.write_u32(kBinaryFormatVersion);
    out.write_u64(g.node_count);
    out.write_u64(g.edge_count);
    out.write(g.types.data(), g.types.size());

    std::vector<unsigned char> region;
    std::vector<std::uint64_t> byte_offsets;
    for (const Adjacency* adj : {&g.fwd, &g.bwd}) {
        encode_adjacency(*adj, g.node_count, region, byte_offsets);
        for (std::uint64_t o : byte_offsets) out.write_u64(o);
        out.write(region.data(), region.size());
    }
    out.finish_with_crc();

    std::ofstream ids(sidecar_path(path), std::ios::binary);
    if (!ids) throw FormatError("cannot write " + sidecar_path(path));
    for (const auto& label : g.labels) ids << label << '\n';
    ids.close();
    if (!ids) throw FormatError("short write to " + sidecar_path(path));
}

TypedGraph load_graph(const std::string& path) {
    CrcReader in(path);
    char magic[4];
    in.read(magic, 4);
    if (std::memcmp(magic, kMagic, 4) != 0)
        throw FormatError("unsupported format (bad magic) in " + path);
    std::uint32_t version = in.read_u32();
    if (version != kBinaryFormatVersion)
        throw FormatError("unsupported version " + std::to_string(version));

    TypedGraph g;
    g.node_count = in.read_u64();
    g.edge_count = in.read_u64();
    g.types.resize(g.node_count);
    in.read(g.types.data(), g.types.size());
    for (std::uint8_t t : g.types)
        if (t >= kNodeTypeCount) throw FormatError("bad node type ordinal");

    g.fwd = decode_adjacency(in, g.node_count, g.edge_count);
    g.bwd = decode_adjacency(in, g.node_count, g.edge_count);
    if (g.fwd.targets.size() != g.edge_count || g.bwd.targets.size() != g.edge_count)
        throw FormatError("edge count mismatch");
    in.verify_crc();

    g.labels.assign(g.node_count, std::string());
    std::ifstream ids(sidecar_path(path), std::ios::binary);
    if (ids) {
        std::string line;
        std::uint64_t i = 0;
        while (std::getline(ids, line)) {
            if (i >= g.node_count) throw FormatError("sidecar has too many lines");
            g.labels[i++] = line;
        }
        if (i != g.node_count)
            throw FormatError("sidecar has too few lines");
    }
    return g;
}

}  // namespace dagtopo
