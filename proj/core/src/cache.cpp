#include "gwql/cache.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "gwql/errors.hpp"
#include "gwql/version.hpp"

namespace gwql {

namespace fs = std::filesystem;
using nlohmann::json;

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {
    fs::create_directories(dir_);
}

std::string ResultCache::hash_key(const std::string& key) {
    // FNV-1a, 64 bit: stable across runs and platforms.
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex;
    for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xF);
    return os.str();
}

fs::path ResultCache::entry_path(const std::string& key) const {
    return dir_ / (hash_key(key) + ".json");
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
    std::lock_guard lock(mutex_);
    fs::path p = entry_path(key);
    std::ifstream in(p);
    if (!in) return std::nullopt;
    json j;
    try {
        in >> j;
        if (j.at("engine_version").get<std::string>() != kEngineVersion) return std::nullopt;
        if (j.at("key").get<std::string>() != key) return std::nullopt;  // hash collision
        return j.at("value").get<std::string>();
    } catch (const std::exception& e) {
        std::cerr << "gwql: corrupt cache entry " << p << " (" << e.what() << "), ignoring\n";
        return std::nullopt;
    }
}

void ResultCache::put(const std::string& key, const std::string& value) {
    std::lock_guard lock(mutex_);
    fs::path p = entry_path(key);
    {
        // A pre-existing healthy entry must agree byte for byte.
        std::ifstream in(p);
        if (in) {
            try {
                json j;
                in >> j;
                if (j.at("engine_version").get<std::string>() == kEngineVersion &&
                    j.at("key").get<std::string>() == key &&
                    j.at("value").get<std::string>() != value)
                    throw CacheConflict("conflicting value for cache key " + key);
            } catch (const CacheConflict&) {
                throw;
            } catch (const std::exception&) {
                // corrupt or stale: overwrite below
            }
        }
    }
    json j;
    j["key"] = key;
    j["value"] = value;
    j["engine_version"] = kEngineVersion;
    j["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                         std::chrono::system_clock::now().time_since_epoch())
                         .count();
    fs::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw Error("cannot write cache entry " + tmp.string());
        out << j.dump(2) << "\n";
    }
    fs::rename(tmp, p);
}

long ResultCache::entry_count() const {
    std::lock_guard lock(mutex_);
    long n = 0;
    for (const auto& e : fs::directory_iterator(dir_))
        if (e.path().extension() == ".json") ++n;
    return n;
}

void ResultCache::clear() {
    std::lock_guard lock(mutex_);
    for (const auto& e : fs::directory_iterator(dir_))
        if (e.path().extension() == ".json") fs::remove(e.path());
}

}  // namespace gwql
