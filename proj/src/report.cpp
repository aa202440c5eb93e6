#include "gw/report.hpp"

#include "gw/util.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace gw {

std::string artifact_version() { return "0.1.0"; }

nlohmann::ordered_json RunManifest::to_json() const {
    nlohmann::ordered_json doc;
    doc["command"] = command;
    doc["parameters"] = parameters;
    if (seed)
        doc["seed"] = *seed;
    else
        doc["seed"] = nullptr;
    doc["artifact_version"] = artifact_version();
    doc["input_digests"] = input_digests;
    return doc;
}

std::string ReportCache::path_for(const std::string& key) const {
    return dir_ + "/" + fnv1a64_hex(key) + ".json";
}

std::optional<std::string> ReportCache::lookup(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    std::stringstream buffer;
    buffer << in.rdbuf();
    nlohmann::json entry;
    try {
        entry = nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::exception&) {
        std::fprintf(stderr, "[cache] unreadable entry %s, recomputing\n", path_for(key).c_str());
        return std::nullopt;
    }
    if (!entry.is_object() || !entry.contains("key") || !entry.contains("digest") ||
        !entry.contains("body") || entry["key"] != key) {
        std::fprintf(stderr, "[cache] malformed entry %s, recomputing\n", path_for(key).c_str());
        return std::nullopt;
    }
    std::string body = entry["body"].get<std::string>();
    if (entry["digest"].get<std::string>() != fnv1a64_hex(body)) {
        std::fprintf(stderr, "[cache] digest mismatch in %s, recomputing\n", path_for(key).c_str());
        return std::nullopt;
    }
    return body;
}

void ReportCache::store(const std::string& key, const std::string& body) const {
    if (!enabled()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    nlohmann::json entry;
    entry["key"] = key;
    entry["digest"] = fnv1a64_hex(body);
    entry["body"] = body;
    std::ofstream out(path_for(key));
    if (!out) {
        std::fprintf(stderr, "[cache] cannot write %s\n", path_for(key).c_str());
        return;
    }
    out << entry.dump();
}

} // namespace gw
