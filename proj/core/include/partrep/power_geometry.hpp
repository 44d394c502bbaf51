#pragma once

#include <optional>

#include "partrep/bigint.hpp"
#include "partrep/partition_engine.hpp"

namespace partrep {

struct KthRootResult {
    Natural root;
    /// root^k == v.
    bool exact = false;
};

/// The unique r with r^k <= v < (r+1)^k.
///
/// Newton iteration seeded from above by 2^ceil(bits/k), followed by a
/// correction loop that enforces the sandwich exactly. Throws
/// std::invalid_argument for k = 0 or negative v.
KthRootResult floor_kth_root(const Natural& v, unsigned long k);

struct DistanceRecord {
    Index n = 0;
    unsigned long k = 2;
    Natural nearest_base;
    Natural delta;
};

/// Distance from `v` to the nearest k-th power of a natural, ties toward the
/// smaller base. Taking m >= 0 loses nothing for v >= 1: even k gives
/// (-m)^k = m^k, and odd k puts every negative power at or below -1.
DistanceRecord nearest_kth_power(const Natural& v, unsigned long k);

/// Delta_k(n) for the table entry p(n). Throws RangeError for n past the table
/// or k < 2.
DistanceRecord delta_k(const PartitionTable& table, Index n, unsigned long k);

struct PowerWitness {
    Natural base;
    unsigned long exponent = 2;
};

/// Absent iff `v` is not m^k for any k >= 2. Otherwise the witness uses the
/// smallest prime exponent with an exact root; 0 and 1 report exponent 2.
std::optional<PowerWitness> is_perfect_power(const Natural& v);

/// Primes up to `limit`, ascending.
std::vector<unsigned long> primes_up_to(unsigned long limit);

}  // namespace partrep
