#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "partrep/bigint.hpp"
#include "partrep/partition_engine.hpp"
#include "partrep/power_geometry.hpp"

namespace partrep {

/// The 25 primes below 100.
inline constexpr std::array<unsigned long, 25> kSmallPrimes = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

/// Certificate p(n) = x^2 + ell^a with ell a prime below 100 and ell not dividing x.
/// x = 0 never qualifies because every ell divides 0.
struct SWitness {
    Index n = 0;
    Natural x;
    unsigned long ell = 2;
    unsigned long a = 1;
};

/// Representations v = x^2 + ell^a in (ell ascending, a ascending) order.
/// With `first_only` the search stops at the first hit.
std::vector<SWitness> representations(const Natural& v, bool first_only);

/// First witness for p(n) in (ell, a) order, or absent when p(n) has none.
std::optional<SWitness> s_membership(const PartitionTable& table, Index n);

/// Every witness for p(n).
std::vector<SWitness> s_witnesses(const PartitionTable& table, Index n);

/// Ascending v <= bound with no representation x^2 + ell^a. Sieves a bitmap of
/// bound + 1 entries.
std::vector<std::uint64_t> missed_values(std::uint64_t bound);

/// One (q, alpha, y, k) entry of the finite list of solutions to x^2 + q^alpha = y^k
/// with q < 100 prime, q not dividing x, k >= 3.
struct ExceptionalTuple {
    unsigned long q = 2;
    unsigned long alpha = 1;
    Natural y;
    unsigned long k = 3;

    friend bool operator==(const ExceptionalTuple&, const ExceptionalTuple&) = default;
};

/// Empty when the tuple is consistent; otherwise the reason it is not.
std::optional<std::string> tuple_violation(const ExceptionalTuple& tuple);

/// Parses "q alpha y k" lines (single spaces, '#' comments, blank lines skipped).
/// Throws ParseError carrying the line number for bad syntax or a tuple that
/// fails tuple_violation.
std::vector<ExceptionalTuple> load_exceptional_list(std::istream& source);

/// The six tuples quoted explicitly alongside the finite list.
std::vector<ExceptionalTuple> seed_exceptional_list();

struct ExceptionalVerdict {
    ExceptionalTuple tuple;
    Natural power;
    /// Index with p(index) = y^k, if one exists.
    std::optional<Index> partition_index;
};

struct ExceptionalReport {
    Index n_max = 0;
    std::vector<ExceptionalVerdict> verdicts;
    /// No y^k in the list is a partition number. Vacuously true for an empty list.
    bool pass = true;
};

/// Smallest n with p(n) >= v.
Index required_index(const Natural& v);

/// Checks every y^k against the table. Throws RangeError naming the n_max that
/// would be needed when some y^k lies beyond p(n_max).
ExceptionalReport verify_no_exceptional_partition(const PartitionTable& table,
                                                  const std::vector<ExceptionalTuple>& tuples);

enum class Coverage { covered, uncovered };

struct CoverageEntry {
    Index n = 0;
    Coverage status = Coverage::uncovered;
    std::optional<SWitness> witness;
};

/// Coverage status for each n in [n_lo, n_hi]. The "no k-th power for k >= 3"
/// conclusion holds exactly for the covered entries.
std::vector<CoverageEntry> theorem1_scan(const PartitionTable& table, Index n_lo, Index n_hi);

struct PerfectPowerHit {
    Index n = 0;
    PowerWitness witness;
};

/// Every n in (1, n_max] for which p(n) is a perfect power, ascending in n.
std::vector<PerfectPowerHit> sun_direct_scan(const PartitionTable& table, Index n_max, unsigned threads = 0);

std::string to_json(const ExceptionalReport& report);
std::string to_text(const ExceptionalReport& report);
std::string to_json(const std::vector<CoverageEntry>& scan);
std::string to_text(const std::vector<CoverageEntry>& scan);

}  // namespace partrep
