#include "table_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <system_error>

namespace partrep::cli {

namespace fs = std::filesystem;

namespace {

constexpr char kCacheFile[] = "partition_table.txt";

std::optional<fs::path> env_path(const char* name) {
    if (const char* value = std::getenv(name); value != nullptr && *value != '\0') {
        return fs::path(value);
    }
    return std::nullopt;
}

}  // namespace

std::optional<fs::path> resolve_cache_path(const std::optional<fs::path>& explicit_path, bool disabled) {
    if (disabled) {
        return std::nullopt;
    }
    if (explicit_path) {
        return explicit_path;
    }
    if (auto dir = env_path("PARTREP_CACHE_DIR")) {
        return *dir / kCacheFile;
    }
    if (auto dir = env_path("XDG_CACHE_HOME")) {
        return *dir / "partrep" / kCacheFile;
    }
    if (auto home = env_path("HOME")) {
        return *home / ".cache" / "partrep" / kCacheFile;
    }
    return std::nullopt;
}

PartitionTable obtain_table(Index n_max, const std::optional<fs::path>& cache_path) {
    if (cache_path) {
        std::ifstream in(*cache_path);
        if (in) {
            try {
                auto cached = read_cache(in);
                if (cached.n_max() == n_max) {
                    return cached;
                }
                if (cached.n_max() > n_max) {
                    // The cache was already checked on load; a prefix needs no re-verification.
                    const auto values = cached.values().first(n_max + 1);
                    return PartitionTable::from_values({values.begin(), values.end()}, false);
                }
            } catch (const std::exception& e) {
                std::cerr << "partrep: ignoring unreadable cache " << *cache_path << ": " << e.what() << '\n';
            }
        }
    }

    auto table = PartitionTable::build(n_max);

    if (cache_path) {
        std::error_code ec;
        if (cache_path->has_parent_path()) {
            fs::create_directories(cache_path->parent_path(), ec);
        }
        const fs::path staging = cache_path->string() + ".tmp";
        {
            std::ofstream out(staging, std::ios::trunc);
            if (out) {
                write_cache(out, table);
            }
            if (!out) {
                std::cerr << "partrep: could not write cache " << *cache_path << '\n';
                fs::remove(staging, ec);
                return table;
            }
        }
        fs::rename(staging, *cache_path, ec);
        if (ec) {
            std::cerr << "partrep: could not write cache " << *cache_path << ": " << ec.message() << '\n';
            fs::remove(staging, ec);
        }
    }
    return table;
}

}  // namespace partrep::cli
