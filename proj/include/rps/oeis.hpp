#pragma once

#include <httplib.h>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "rps/cache.hpp"
#include "rps/rational.hpp"

namespace rps {

struct OeisMatch {
    std::string id;          // "A164147"
    int matched_prefix = 0;  // leading terms agreeing with the query
};

struct OeisResult {
    bool available = false;
    std::vector<OeisMatch> matches;
    std::string source; // "live" or "cache"
    std::string note;   // set when unavailable
};

namespace detail {

inline std::string oeis_query_string(const std::vector<Integer>& terms) {
    std::string q;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) q += ",";
        q += terms[i].get_str();
    }
    return q;
}

inline int matched_prefix_length(const std::vector<Integer>& terms, const std::string& data_csv) {
    int matched = 0;
    std::size_t pos = 0;
    for (const auto& t : terms) {
        std::size_t comma = data_csv.find(',', pos);
        std::string entry = data_csv.substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos);
        if (entry.empty() || entry != t.get_str()) break;
        ++matched;
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return matched;
}

// at most one in-flight request, spaced at least a second apart
inline void oeis_politeness_gate() {
    static std::mutex gate;
    static std::chrono::steady_clock::time_point last{};
    std::lock_guard<std::mutex> lock(gate);
    auto now = std::chrono::steady_clock::now();
    auto elapsed = now - last;
    if (last.time_since_epoch().count() != 0 && elapsed < std::chrono::seconds(1))
        std::this_thread::sleep_for(std::chrono::seconds(1) - elapsed);
    last = std::chrono::steady_clock::now();
}

} // namespace detail

/*
 * Best-effort lookup against the public OEIS search interface, cached on
 * disk by query string. Offline mode serves from the cache only. Network
 * failure plus cache miss yields an explicit unavailable result; matches
 * are never fabricated.
 */
inline OeisResult oeis_lookup(const std::vector<Integer>& terms, bool offline = false,
                              const std::string& cache_dir = default_cache_dir()) {
    OeisResult result;
    if (terms.empty()) {
        result.note = "empty query";
        return result;
    }
    const std::string query = detail::oeis_query_string(terms);
    const auto cache_file =
        std::filesystem::path(cache_dir) / ("oeis_" + hex64(fnv1a64(query)) + ".json");

    auto from_normalized = [&](const Json& j, const std::string& source) {
        result.matches.clear();
        for (const auto& entry : j.at("results")) {
            OeisMatch m;
            m.id = entry.at("id").get<std::string>();
            m.matched_prefix =
                detail::matched_prefix_length(terms, entry.at("data").get<std::string>());
            result.matches.push_back(std::move(m));
        }
        result.available = true;
        result.source = source;
    };

    if (std::ifstream in(cache_file, std::ios::binary); in) {
        try {
            Json j = Json::parse(in);
            if (j.value("query", "") == query) {
                from_normalized(j, "cache");
                return result;
            }
        } catch (const std::exception& e) {
            std::cerr << "warning: ignoring corrupt cache entry " << cache_file.string() << " ("
                      << e.what() << ")\n";
        }
    }
    if (offline) {
        result.note = "offline mode and no cached answer for this query";
        return result;
    }

    detail::oeis_politeness_gate();
    std::string body;
    {
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
        httplib::SSLClient client("oeis.org", 443);
#else
        httplib::Client client("oeis.org", 80);
#endif
        client.set_connection_timeout(10, 0);
        client.set_read_timeout(15, 0);
        auto res = client.Get(("/search?fmt=json&q=" + query).c_str());
        if (!res || res->status != 200) {
            result.note = "lookup unavailable (network failure or non-200 response)";
            return result;
        }
        body = res->body;
    }

    try {
        Json parsed = Json::parse(body);
        const Json* entries = nullptr;
        if (parsed.is_array())
            entries = &parsed;
        else if (parsed.contains("results") && parsed["results"].is_array())
            entries = &parsed["results"];
        Json normalized;
        normalized["query"] = query;
        Json list = Json::array();
        if (entries) {
            for (const auto& e : *entries) {
                char id[16];
                std::snprintf(id, sizeof id, "A%06d", e.at("number").get<int>());
                list.push_back(Json{{"id", id}, {"data", e.value("data", "")}});
            }
        }
        normalized["results"] = list;
        detail::write_file_atomic(cache_file, normalized.dump(2) + "\n");
        from_normalized(normalized, "live");
    } catch (const std::exception& e) {
        result.note = std::string("lookup unavailable (unparseable response: ") + e.what() + ")";
    }
    return result;
}

} // namespace rps
