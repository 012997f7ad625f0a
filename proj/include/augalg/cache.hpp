#pragma once

// Content-addressed on-disk cache of JSON bundles. The key is the SHA-256 of
// the canonical dump of (inputs, operation, parameters, engine version);
// entries are written to a temporary file and renamed into place, so a
// reader sees either nothing or a whole entry.

#include "augalg/report.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>

namespace augalg {

inline constexpr const char* kEngineVersion = "1.0.0";

inline std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

/// Directory named by HHPROD_CACHE_DIR, else $XDG_CACHE_HOME/hhprod, else
/// ~/.cache/hhprod, else a directory under the system temp path.
inline std::filesystem::path default_cache_dir() {
    if (const char* d = std::getenv("HHPROD_CACHE_DIR"); d && *d) return d;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "hhprod";
    if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "hhprod";
    return std::filesystem::temp_directory_path() / "hhprod-cache";
}

struct CacheKey {
    Json inputs;
    std::string operation;
    Json params;

    Json to_json() const {
        return {{"inputs", inputs}, {"operation", operation}, {"params", params}, {"engine", kEngineVersion}};
    }
    std::string digest() const { return sha256_hex(to_json().dump()); }
};

class Cache {
public:
    struct Lookup {
        Json value;
        bool hit = false;
        std::string key;
    };

    explicit Cache(std::filesystem::path dir = default_cache_dir(), bool enabled = true)
        : dir_(std::move(dir)), enabled_(enabled) {}

    bool enabled() const { return enabled_; }
    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_of(const std::string& digest) const { return dir_ / (digest + ".json"); }

    /// Stored bundle for the key, or the producer's result (then stored).
    /// An unreadable or mismatched entry is recomputed and overwritten.
    Lookup get_or_compute(const CacheKey& key, const std::function<Json()>& producer) {
        const std::string digest = key.digest();
        if (!enabled_) return {producer(), false, digest};
        std::lock_guard lock(key_mutex(digest));
        const auto path = path_of(digest);
        if (std::filesystem::exists(path)) {
            std::ifstream in(path, std::ios::binary);
            std::stringstream ss;
            ss << in.rdbuf();
            try {
                Json entry = Json::parse(ss.str());
                if (entry.at("key") == key.to_json()) return {entry.at("value"), true, digest};
                std::cerr << "warning: cache entry " << digest << " has a different key; recomputing\n";
            } catch (const Json::exception&) {
                std::cerr << "warning: corrupt cache entry " << digest << "; recomputing\n";
            }
        }
        Json value = producer();
        store(path, {{"key", key.to_json()}, {"value", value}});
        return {std::move(value), false, digest};
    }

private:
    std::mutex& key_mutex(const std::string& digest) {
        std::lock_guard lock(table_mutex_);
        return locks_[digest];
    }
    void store(const std::filesystem::path& path, const Json& entry) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) {
            std::cerr << "warning: cannot create cache directory " << dir_ << ": " << ec.message() << "\n";
            return;
        }
        auto tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out << entry.dump();
            if (!out) {
                std::cerr << "warning: cannot write cache entry " << path << "\n";
                return;
            }
        }
        std::filesystem::rename(tmp, path, ec);
        if (ec) std::cerr << "warning: cannot finalize cache entry " << path << ": " << ec.message() << "\n";
    }

    std::filesystem::path dir_;
    bool enabled_;
    std::mutex table_mutex_;
    std::map<std::string, std::mutex> locks_;
};

}  // namespace augalg
