#pragma once

#include <filesystem>
#include <optional>

#include "partrep/partition_engine.hpp"

namespace partrep::cli {

/// Where the partition table cache lives, or nothing when caching is off.
/// Order: explicit path, $PARTREP_CACHE_DIR, $XDG_CACHE_HOME/partrep, ~/.cache/partrep.
std::optional<std::filesystem::path> resolve_cache_path(const std::optional<std::filesystem::path>& explicit_path,
                                                        bool disabled);

/// Loads a cached table holding at least `n_max` entries, or builds one and
/// refreshes the cache. Cache problems are reported on stderr and never fatal.
PartitionTable obtain_table(Index n_max, const std::optional<std::filesystem::path>& cache_path);

}  // namespace partrep::cli
