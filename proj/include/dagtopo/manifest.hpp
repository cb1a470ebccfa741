#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace dagtopo {

inline constexpr std::string_view kToolVersion = "dagtopo 1.0.0";

// Replication-package support: every report file gets a sibling
// `<report>.manifest.json` recording how it was produced.
struct RunManifest {
    std::string command;  // reconstructed argv
    std::vector<std::pair<std::string, std::string>> inputs;  // path, crc32 hex
    nlohmann::json parameters = nlohmann::json::object();
    double wall_time_s = 0.0;
    std::uint64_t peak_rss_bytes = 0;
};

std::uint32_t file_crc32(const std::string& path);
std::uint64_t peak_rss_bytes();  // VmHWM on Linux, 0 elsewhere

// Writes `<report_path>.manifest.json` for each report in `reports`.
void write_manifests(const RunManifest& m, const std::vector<std::string>& reports);

}  // namespace dagtopo
