#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "partrep/bigint.hpp"

namespace partrep {

/// Immutable table of partition numbers p(0..n_max).
///
/// Copies share the underlying storage, so a built table can be handed to any
/// number of concurrent readers. A larger table is always a new object; nothing
/// extends a table in place.
class PartitionTable {
public:
    /// Runs Euler's pentagonal recurrence forward from p(0) = 1.
    ///
    /// Throws CapacityError when the dense table for `n_max` would not fit in
    /// the engine's memory budget.
    static PartitionTable build(Index n_max);

    /// Wraps externally produced values (a cache file, a fault-injection fixture).
    /// With `verify` set, every entry is checked against the recurrence and a
    /// mismatch throws std::invalid_argument naming the first bad index.
    static PartitionTable from_values(std::vector<Natural> values, bool verify);

    Index n_max() const noexcept { return values_->size() - 1; }
    std::size_t size() const noexcept { return values_->size(); }

    /// Unchecked access.
    const Natural& operator[](Index n) const noexcept { return (*values_)[n]; }

    /// Checked access; throws RangeError past n_max.
    const Natural& at(Index n) const;

    std::span<const Natural> values() const noexcept { return *values_; }

private:
    explicit PartitionTable(std::shared_ptr<const std::vector<Natural>> values)
        : values_(std::move(values)) {}

    std::shared_ptr<const std::vector<Natural>> values_;
};

/// Rough number of bytes a table up to `n_max` occupies.
double estimated_table_bytes(Index n_max);

/// Largest n_max `PartitionTable::build` accepts.
Index max_buildable_index();

/// Counts partitions of `n` whose parts are all >= `min_part` with a coin-change
/// dynamic program over part sizes. Shares no code with the recurrence, which
/// makes it usable as an independent oracle. Quadratic in `n`.
Natural count_partitions_oracle(Index n, Index min_part = 1);

/// Partitions of n with no part equal to 1: p(n) - p(n-1) for n >= 1, and 1 for n = 0.
Natural p1(const PartitionTable& table, Index n);

/// Non-empty partitions of size <= n without parts equal to 1, summed term by term
/// from p1(1..n). Requires 1 <= n <= n_max.
Natural psi(const PartitionTable& table, Index n);

/// Log of the Hardy-Ramanujan main term exp(pi*sqrt(2n/3)) / (4n*sqrt(3)).
double hardy_ramanujan_log_estimate(Index n);

/// The Hardy-Ramanujan main term itself. Throws OverflowError once it leaves
/// the double range (n around 2.4e4) and RangeError for n = 0.
double hardy_ramanujan_estimate(Index n);

struct PartitionLookup {
    /// Smallest n >= 1 with p(n) = v, if any.
    std::optional<Index> index;
    /// True when v > p(n_max): the answer is only "absent within this table".
    bool beyond_table = false;
};

/// Binary search over the strictly increasing tail p(1), p(2), ...
PartitionLookup is_partition_number(const PartitionTable& table, const Natural& v);

/// Writes p(0..n_max) as newline-delimited decimals, index implicit.
void write_values(std::ostream& out, const PartitionTable& table);

/// Reads the format produced by write_values. Values are validated against
/// the recurrence. Throws ParseError with a line number on malformed input.
PartitionTable read_values(std::istream& in);

/// Cache file: a "# partrep-table n_max=<N>" header followed by write_values output.
void write_cache(std::ostream& out, const PartitionTable& table);

/// Reads a cache file. Only the header, the count, the seed values and the last
/// recurrence step are checked, so loading stays cheaper than rebuilding.
PartitionTable read_cache(std::istream& in);

}  // namespace partrep
