#include <catch2/catch.hpp>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "rps/oeis.hpp"

using namespace rps;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("rps-oeis-" + std::to_string(::getpid()) + "-" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

std::vector<Integer> ints(std::initializer_list<long> v) {
    std::vector<Integer> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

} // namespace

// Live queries hit a mutable external service and stay out of the suite;
// everything below runs against the on-disk cache only.

TEST_CASE("offline lookup with an empty cache is unavailable") {
    TempDir tmp;
    auto res = oeis_lookup(ints({1, 2, 4, 8, 16, 32, 64, 128}), true, tmp.path.string());
    CHECK_FALSE(res.available);
    CHECK_FALSE(res.note.empty());
    CHECK(res.matches.empty());
}

TEST_CASE("offline lookup serves cached answers") {
    TempDir tmp;
    const auto terms = ints({1, 2, 4, 8, 16});
    const std::string query = "1,2,4,8,16";
    Json cached;
    cached["query"] = query;
    cached["results"] = Json::array({Json{{"id", "A000079"}, {"data", "1,2,4,8,16,32,64"}},
                                     Json{{"id", "A999999"}, {"data", "1,2,4,9"}}});
    auto file = std::filesystem::path(tmp.path) / ("oeis_" + hex64(fnv1a64(query)) + ".json");
    std::ofstream(file) << cached.dump();

    auto res = oeis_lookup(terms, true, tmp.path.string());
    REQUIRE(res.available);
    CHECK(res.source == "cache");
    REQUIRE(res.matches.size() == 2);
    CHECK(res.matches[0].id == "A000079");
    CHECK(res.matches[0].matched_prefix == 5);
    CHECK(res.matches[1].id == "A999999");
    CHECK(res.matches[1].matched_prefix == 3); // diverges at the fourth term
}

TEST_CASE("corrupt oeis cache entries are ignored") {
    TempDir tmp;
    const std::string query = "1,2,2,3,6";
    auto file = std::filesystem::path(tmp.path) / ("oeis_" + hex64(fnv1a64(query)) + ".json");
    std::ofstream(file) << "{ nope";
    auto res = oeis_lookup(ints({1, 2, 2, 3, 6}), true, tmp.path.string());
    CHECK_FALSE(res.available);
}

TEST_CASE("empty queries are rejected politely") {
    TempDir tmp;
    auto res = oeis_lookup({}, true, tmp.path.string());
    CHECK_FALSE(res.available);
    CHECK(res.note == "empty query");
}
