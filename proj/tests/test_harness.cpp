#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <set>
#include <sstream>

#include "quenchscape/io.hpp"
#include "quenchscape/parallel.hpp"
#include "quenchscape/rng.hpp"

using namespace qsc;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("quenchscape-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static inline int counter = 0;
};

}  // namespace

TEST_CASE("seed derivation") {
    SUBCASE("deterministic") {
        CHECK(derive_seed(42, "scan", 3, 7) == derive_seed(42, "scan", 3, 7));
    }
    SUBCASE("sensitive to every component") {
        std::set<std::uint64_t> seen{derive_seed(42, "scan", 3, 7)};
        CHECK(seen.insert(derive_seed(43, "scan", 3, 7)).second);
        CHECK(seen.insert(derive_seed(42, "scam", 3, 7)).second);
        CHECK(seen.insert(derive_seed(42, "scan", 4, 7)).second);
        CHECK(seen.insert(derive_seed(42, "scan", 3, 8)).second);
        CHECK(seen.insert(derive_seed(42, "scan", 7, 3)).second);
        CHECK(seen.insert(derive_seed(42, "scan")).second);
    }
}

TEST_CASE("parallel_for") {
    SUBCASE("covers every index exactly once for any worker count") {
        for (int workers : {1, 2, 5}) {
            std::vector<int> hits(97, 0);
            parallel_for(hits.size(), workers, [&](std::size_t i) { hits[i] += 1; });
            for (int h : hits) CHECK(h == 1);
        }
    }
    SUBCASE("zero count is a no-op") {
        bool touched = false;
        parallel_for(0, 4, [&](std::size_t) { touched = true; });
        CHECK_FALSE(touched);
    }
}

TEST_CASE("format_value uses 12 significant digits") {
    CHECK(format_value(1.0) == "1");
    CHECK(format_value(0.5) == "0.5");
    CHECK(format_value(1.0 / 3.0) == "0.333333333333");
    CHECK(format_value(1.95e-3) == "0.00195");
}

TEST_CASE("config_hash is order-insensitive and content-sensitive") {
    nlohmann::json a = {{"n", 5}, {"seed", 7}};
    nlohmann::json b = {{"seed", 7}, {"n", 5}};
    CHECK(config_hash(a) == config_hash(b));
    nlohmann::json c = {{"seed", 8}, {"n", 5}};
    CHECK(config_hash(a) != config_hash(c));
}

TEST_CASE("RunManifest output") {
    TempDir tmp;
    OutputTable table;
    table.columns = {"n", "value"};
    table.rows = {{"5", format_value(0.25)}, {"7", format_value(1.0 / 3.0)}};

    SUBCASE("CSV carries metadata and is byte-stable across writes") {
        RunManifest m1(config_hash({{"x", 1}}), 42);
        fs::path p1 = m1.write_table(tmp.path, "scan", table, "csv");
        std::string first = slurp(p1);
        CHECK(first.find("# tool=") != std::string::npos);
        CHECK(first.find("# seed=42") != std::string::npos);
        CHECK(first.find("n,value") != std::string::npos);
        RunManifest m2(config_hash({{"x", 1}}), 42);
        fs::path p2 = m2.write_table(tmp.path, "scan", table, "csv");
        CHECK(slurp(p2) == first);
    }
    SUBCASE("JSON mirrors rows and manifest") {
        RunManifest m(config_hash({{"x", 1}}), 7);
        fs::path p = m.write_table(tmp.path, "scan", table, "json");
        nlohmann::json doc = nlohmann::json::parse(slurp(p));
        CHECK(doc["manifest"]["seed"] == 7);
        REQUIRE(doc["rows"].size() == 2);
        CHECK(doc["rows"][0]["n"] == "5");
    }
    SUBCASE("manifest.json lists emitted files with checksums") {
        RunManifest m(config_hash({{"x", 1}}), 7);
        m.write_table(tmp.path, "scan", table, "csv");
        m.finalize(tmp.path, 0.5);
        nlohmann::json doc = nlohmann::json::parse(slurp(tmp.path / "manifest.json"));
        REQUIRE(doc["files"].size() == 1);
        CHECK(doc["files"][0]["file"] == "scan.csv");
        CHECK(doc["files"][0]["checksum"].get<std::string>().size() == 16);
    }
    SUBCASE("unknown format is rejected") {
        RunManifest m(config_hash({{"x", 1}}), 7);
        CHECK_THROWS_AS(m.write_table(tmp.path, "scan", table, "yaml"), std::invalid_argument);
    }
}
