#pragma once

// Brute-force references for the unit and acceptance suites. Nothing here
// calls the library routine it is used to check.

#include <cstdint>
#include <vector>

#include "partrep/bigint.hpp"
#include "partrep/partition_engine.hpp"

namespace partrep::testing {

/// Table shared by every test in a binary, built once.
inline const PartitionTable& shared_table() {
    static const PartitionTable table = PartitionTable::build(25000);
    return table;
}

/// floor(v^(1/k)) for v = 0..limit by walking r upward.
inline std::vector<std::uint64_t> linear_scan_roots(std::uint64_t limit, unsigned k) {
    std::vector<std::uint64_t> roots(limit + 1);
    std::uint64_t r = 0;
    auto next_pow = [k](std::uint64_t base) {
        Natural p = 1;
        for (unsigned i = 0; i < k; ++i) {
            p *= static_cast<unsigned long>(base);
        }
        return p;
    };
    Natural upper = next_pow(1);
    for (std::uint64_t v = 0; v <= limit; ++v) {
        while (upper <= Natural(static_cast<unsigned long>(v))) {
            ++r;
            upper = next_pow(r + 1);
        }
        roots[v] = r;
    }
    return roots;
}

struct BruteDistance {
    Natural base;
    Natural delta;
};

/// min |v - m^k| over all m with m^k <= 2v (and m = 0), ties to the smaller m.
inline BruteDistance brute_distance(const Natural& v, unsigned long k) {
    BruteDistance best{0, v};
    const Natural cap = 2 * v;
    for (Natural m = 1;; ++m) {
        Natural pw = 1;
        for (unsigned long i = 0; i < k; ++i) {
            pw *= m;
        }
        if (pw > cap && m > 1) {
            break;
        }
        Natural diff = v - pw;
        if (diff < 0) {
            diff = -diff;
        }
        if (diff < best.delta) {
            best = {m, diff};
        }
        if (pw > cap) {
            break;
        }
    }
    return best;
}

inline bool is_prime_below_100(std::uint64_t v) {
    if (v < 2 || v >= 100) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            return false;
        }
    }
    return true;
}

/// The prime ell < 100 with v = ell^a, a >= 1, or 0 when v is not such a power.
inline std::uint64_t prime_power_base(std::uint64_t v) {
    for (std::uint64_t ell = 2; ell < 100; ++ell) {
        if (!is_prime_below_100(ell)) {
            continue;
        }
        std::uint64_t x = v;
        if (x < ell) {
            continue;
        }
        while (x % ell == 0) {
            x /= ell;
        }
        if (x == 1) {
            return ell;
        }
    }
    return 0;
}

/// v = x^2 + ell^a with x >= 1, ell < 100 prime, ell not dividing x.
inline bool brute_representable(std::uint64_t v) {
    for (std::uint64_t x = 1; x * x < v; ++x) {
        const std::uint64_t ell = prime_power_base(v - x * x);
        if (ell != 0 && x % ell != 0) {
            return true;
        }
    }
    return false;
}

}  // namespace partrep::testing
