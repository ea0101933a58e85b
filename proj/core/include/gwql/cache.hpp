#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

namespace gwql {

/// On-disk invariant cache: one JSON file per entry under a
/// content-addressed filename (FNV-1a of the canonical key), written with
/// atomic rename so concurrent CLI processes can share a directory.
///
/// Entries record {key, value, engine_version, timestamp}. Only
/// weight-independent final values belong here. A read that hits a corrupt
/// or version-mismatched file is treated as a miss; writing a *different*
/// value under an existing key is a hard error (it would mean the engine
/// went nondeterministic).
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    const std::filesystem::path& directory() const { return dir_; }

    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& value);

    /// Number of entry files currently present.
    long entry_count() const;
    void clear();

    static std::string hash_key(const std::string& key);

private:
    std::filesystem::path entry_path(const std::string& key) const;

    std::filesystem::path dir_;
    mutable std::mutex mutex_;
};

}  // namespace gwql
