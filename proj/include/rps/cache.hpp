#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "rps/report.hpp"

namespace rps {

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// RPS_CACHE_DIR, else $XDG_CACHE_HOME/rps, else ~/.cache/rps, else ./.rps-cache
inline std::string default_cache_dir() {
    if (const char* env = std::getenv("RPS_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::string(xdg) + "/rps";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::string(home) + "/.cache/rps";
    return ".rps-cache";
}

namespace detail {

// atomic write: temp file in the same directory, then rename
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

} // namespace detail

inline std::string proposition_cache_key(const InstanceSpec& spec, const SolveOptions& opts) {
    return spec.canonical_key() + "|" + opts.fingerprint() + "|v=" + kVersion;
}

inline std::filesystem::path cache_path_for(const std::string& dir, const std::string& key) {
    return std::filesystem::path(dir) / ("prop_" + hex64(fnv1a64(key)) + ".json");
}

inline void cache_store(const std::string& dir, const std::string& key, const Proposition& prop) {
    Json j = to_json(prop);
    j["cacheKey"] = key;
    detail::write_file_atomic(cache_path_for(dir, key), j.dump(2) + "\n");
}

// Corrupt or mismatched entries are ignored with a warning; the caller
// recomputes.
inline std::optional<Proposition> cache_load(const std::string& dir, const std::string& key) {
    const auto path = cache_path_for(dir, key);
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    try {
        Json j = Json::parse(in);
        if (j.value("cacheKey", "") != key) return std::nullopt; // hash collision or stale
        return proposition_from_json(j);
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring corrupt cache entry " << path.string() << " ("
                  << e.what() << ")\n";
        return std::nullopt;
    }
}

} // namespace rps
