#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace qsc {

inline constexpr const char* kToolVersion = "quenchscape 0.1.0";

// 12 significant digits; enough to make byte-identity across reruns meaningful.
std::string format_value(double v);

std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

// Hash of the canonical (sorted-key, no-whitespace) serialization of a config.
std::string config_hash(const nlohmann::json& config);

struct OutputTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// Tracks every emitted file with a content checksum; written as manifest.json.
class RunManifest {
public:
    RunManifest(std::string cfg_hash, std::uint64_t seed);

    // Writes the table as CSV or JSON (per `format`), records it, and returns
    // the path. CSV carries `# key=value` metadata lines before the header;
    // JSON mirrors rows as objects under "rows" with a "manifest" block.
    std::filesystem::path write_table(const std::filesystem::path& dir, const std::string& stem,
                                      const OutputTable& table, const std::string& format);

    void finalize(const std::filesystem::path& dir, double wall_seconds);

private:
    std::string config_hash_;
    std::uint64_t seed_;
    nlohmann::json files_ = nlohmann::json::array();
};

}  // namespace qsc
