#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "partrep/bigint.hpp"
#include "partrep/partition_engine.hpp"
#include "partrep/power_geometry.hpp"

namespace partrep {

/// Every M_k(d) and N_d in this module is computed over 0 <= n <= n_max only.
/// The results are verified lower bounds for the unrestricted quantities and
/// agree with them whenever the true value does not exceed n_max.
inline constexpr Index kDefaultRepulsionNMax = 25000;

struct MkQuery {
    unsigned long k = 2;
    Natural d;
    Index n_max = kDefaultRepulsionNMax;
};

/// max{ n : 0 <= n <= n_max, Delta_k(n) <= d }. Always >= 1 since p(1) = 1^k.
/// Throws RangeError when n_max exceeds the table, n_max < 1 or k < 2.
Index m_k_d(const PartitionTable& table, const MkQuery& query);

/// Delta_k(n) for n = 0..n_max.
std::vector<Natural> delta_column(const PartitionTable& table, unsigned long k, Index n_max);

/// M_k(d) for each d in `ds`, sharing the root extractions across thresholds.
///
/// When the k-th powers up to p(n_max) + max(ds) are fewer than the table
/// entries, the bases are enumerated and matched by binary search instead of
/// taking one root per n. Both paths return identical values.
std::vector<Index> m_k_d_batch(const PartitionTable& table, unsigned long k, std::span<const Natural> ds,
                               Index n_max);

/// Matrix of M_k(d; n_max). `cells[row][col]` belongs to k_list[row] and d_values[col].
struct MkGrid {
    std::vector<unsigned long> k_list;
    /// Set when the columns are d = 10^i; empty for arbitrary d columns.
    std::vector<unsigned> d_exponents;
    std::vector<Natural> d_values;
    Index n_max = 0;
    std::vector<std::vector<Index>> cells;

    Index at(unsigned long k, std::size_t column) const;
};

/// Grid over d = 10^i for each i in `d_exponents`. Rows are evaluated on up to
/// `threads` workers (0 picks the hardware concurrency); the result does not
/// depend on the worker count.
MkGrid mk_grid(const PartitionTable& table, std::span<const unsigned long> k_list,
               std::span<const unsigned> d_exponents, Index n_max, unsigned threads = 0);

/// Grid over arbitrary d columns.
MkGrid mk_table(const PartitionTable& table, std::span<const unsigned long> k_list,
                std::span<const Natural> d_values, Index n_max, unsigned threads = 0);

/// L(d) = max{ n : p(n) - 1 <= d }. Throws RangeError unless d < p(n_max) - 1,
/// which is what guarantees the maximum is attained inside the table.
Index limit_L(const PartitionTable& table, const Natural& d);

struct StabilizationCert {
    Index n_max = 0;
    /// Smallest k with 2^k >= 2 p(n_max). For every k at or above it and every
    /// 1 <= n <= n_max the nearest k-th power to p(n) is 1.
    unsigned long k_threshold = 1;
};

StabilizationCert stabilization_threshold(const PartitionTable& table, Index n_max);

struct NdResult {
    Natural d;
    Index limit = 0;
    /// Minimal N >= 2 with M_k(d) = L(d) for every N <= k <= k_threshold.
    unsigned long n_d = 2;
    StabilizationCert cert;
};

/// N_d for a single d.
NdResult n_d(const PartitionTable& table, const Natural& d, Index n_max);

/// N_d for several d at once. Walks k down from the stabilization threshold
/// and stops as soon as every d has met its first mismatch.
std::vector<NdResult> n_d_batch(const PartitionTable& table, std::span<const Natural> ds, Index n_max,
                                unsigned threads = 0);

/// Default column set: 2..8, 50, 100.
std::vector<unsigned long> default_k_list();

/// Default exponent set: 0..70.
std::vector<unsigned> default_d_exponents();

struct Table1Row {
    Index n = 0;
    /// Delta_2, Delta_3, Delta_4.
    std::vector<Natural> deltas;
};

/// Delta_k(n) for n in {10,20,30,40,50} and k in {2,3,4}.
std::vector<Table1Row> table1(const PartitionTable& table);

/// d = 0 followed by d = 10^i for i = 0,5,...,70; default k columns.
MkGrid table2(const PartitionTable& table, Index n_max = kDefaultRepulsionNMax, unsigned threads = 0);

/// d = 0..6; default k columns.
MkGrid table3(const PartitionTable& table, Index n_max = kDefaultRepulsionNMax, unsigned threads = 0);

/// (i, M_k(10^i)) pairs for one row of an exponent grid.
std::vector<std::pair<unsigned, Index>> figure_series(const MkGrid& grid, unsigned long k);

/// "(0,35) (1,35) ..." plot coordinate text.
std::string format_coordinates(std::span<const std::pair<unsigned, Index>> series);

/// Row label for column `col`: the exponent i for exponent grids, else the decimal d.
std::string d_label(const MkGrid& grid, std::size_t column);

/// CSV with one row per d column: "i,<k1>,<k2>,..." for exponent grids,
/// "d,<k1>,..." otherwise. LF line endings.
std::string grid_to_csv(const MkGrid& grid);

std::string grid_to_json(const MkGrid& grid);

}  // namespace partrep
