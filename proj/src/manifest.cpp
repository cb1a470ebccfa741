#include "dagtopo/manifest.hpp"

#include <zlib.h>

#include <cstdio>
#include <fstream>

#include "dagtopo/errors.hpp"

namespace dagtopo {

std::uint32_t file_crc32(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) throw IngestError("cannot open " + path);
    uLong crc = crc32_z(0L, nullptr, 0);
    char buf[1 << 16];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, f)) > 0)
        crc = crc32_z(crc, reinterpret_cast<const Bytef*>(buf), n);
    std::fclose(f);
    return static_cast<std::uint32_t>(crc);
}

std::uint64_t peak_rss_bytes() {
    std::ifstream status("/proc/self/status");
    std::string line;
    while (std::getline(status, line)) {
        if (line.rfind("VmHWM:", 0) == 0) {
            unsigned long long kb = 0;
            if (std::sscanf(line.c_str(), "VmHWM: %llu kB", &kb) == 1)
                return kb * 1024;
        }
    }
    return 0;
}

void write_manifests(const RunManifest& m, const std::vector<std::string>& reports) {
    for (const auto& report : reports) {
        nlohmann::json j;
        j["tool_version"] = kToolVersion;
        j["report"] = report;
        j["command"] = m.command;
        auto inputs = nlohmann::json::array();
        for (const auto& [path, digest] : m.inputs)
            inputs.push_back({{"path", path}, {"crc32", digest}});
        j["inputs"] = inputs;
        j["parameters"] = m.parameters;
        j["wall_time_s"] = m.wall_time_s;
        j["peak_rss_bytes"] = m.peak_rss_bytes;

        std::ofstream out(report + ".manifest.json", std::ios::binary);
        if (!out) throw FormatError("cannot write manifest for " + report);
        out << j.dump(2) << '\n';
    }
}

}  // namespace dagtopo
