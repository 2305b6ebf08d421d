#include "quenchscape/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qsc {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view data) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(data)));
    return buf;
}

std::string config_hash(const nlohmann::json& config) {
    return fnv1a64_hex(config.dump());  // nlohmann keeps object keys sorted
}

RunManifest::RunManifest(std::string cfg_hash, std::uint64_t seed)
    : config_hash_(std::move(cfg_hash)), seed_(seed) {}

std::filesystem::path RunManifest::write_table(const std::filesystem::path& dir,
                                               const std::string& stem,
                                               const OutputTable& table,
                                               const std::string& format) {
    std::filesystem::create_directories(dir);
    std::string content;
    std::filesystem::path path;
    if (format == "csv") {
        path = dir / (stem + ".csv");
        std::ostringstream os;
        os << "# tool=" << kToolVersion << "\n";
        os << "# config_hash=" << config_hash_ << "\n";
        os << "# seed=" << seed_ << "\n";
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            os << (c ? "," : "") << table.columns[c];
        os << "\n";
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
            os << "\n";
        }
        content = os.str();
    } else if (format == "json") {
        path = dir / (stem + ".json");
        nlohmann::json doc;
        doc["manifest"] = {{"tool", kToolVersion},
                           {"config_hash", config_hash_},
                           {"seed", seed_}};
        doc["rows"] = nlohmann::json::array();
        for (const auto& row : table.rows) {
            nlohmann::json obj;
            for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = row[c];
            doc["rows"].push_back(std::move(obj));
        }
        content = doc.dump(2) + "\n";
    } else {
        throw std::invalid_argument("write_table: format must be csv or json");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_table: cannot open " + path.string());
    out << content;
    out.close();
    files_.push_back({{"file", path.filename().string()},
                      {"checksum", fnv1a64_hex(content)},
                      {"bytes", content.size()}});
    return path;
}

void RunManifest::finalize(const std::filesystem::path& dir, double wall_seconds) {
    std::filesystem::create_directories(dir);
    nlohmann::json doc;
    doc["tool"] = kToolVersion;
    doc["config_hash"] = config_hash_;
    doc["seed"] = seed_;
    doc["wall_seconds"] = wall_seconds;
    doc["files"] = files_;
    std::ofstream out(dir / "manifest.json", std::ios::binary);
    out << doc.dump(2) << "\n";
}

}  // namespace qsc
