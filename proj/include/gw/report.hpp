#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace gw {

/// Everything that determines a report: command, parameters in a fixed
/// order, seed (null when the command is deterministic without one), the
/// artifact version, and digests of input documents. Two runs with equal
/// manifests produce byte-identical reports; wall-clock timings therefore
/// go to the stderr log, never into the report.
struct RunManifest {
    std::string command;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::optional<std::uint64_t> seed;
    nlohmann::ordered_json input_digests = nlohmann::ordered_json::object();

    nlohmann::ordered_json to_json() const;
    /// Cache key: the manifest serialization.
    std::string key() const { return to_json().dump(); }
};

std::string artifact_version();

/// Content-addressed report cache. Entries carry a digest of the stored
/// body; corrupted entries are treated as misses with a warning on stderr.
/// An empty directory disables caching.
class ReportCache {
public:
    explicit ReportCache(std::string directory) : dir_(std::move(directory)) {}

    bool enabled() const { return !dir_.empty(); }
    std::optional<std::string> lookup(const std::string& key) const;
    void store(const std::string& key, const std::string& body) const;

private:
    std::string path_for(const std::string& key) const;
    std::string dir_;
};

} // namespace gw
