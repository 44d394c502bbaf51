#include "partrep/power_geometry.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "partrep/errors.hpp"

namespace partrep {

KthRootResult floor_kth_root(const Natural& v, unsigned long k) {
    if (k == 0) {
        throw std::invalid_argument("floor_kth_root: k must be >= 1");
    }
    if (sgn(v) < 0) {
        throw std::invalid_argument("floor_kth_root: v must be non-negative");
    }
    if (k == 1 || v < 2) {
        return {v, true};
    }
    const std::size_t bits = bit_length(v);
    if (k >= bits) {
        // v < 2^bits <= 2^k, so the root is 1.
        return {Natural(1), v == 1};
    }

    // 2^ceil(bits/k) > v^(1/k), and integer Newton from above decreases
    // monotonically to the floor root.
    Natural x;
    mpz_setbit(x.get_mpz_t(), (bits + k - 1) / k);
    Natural x_pow;
    Natural next;
    while (true) {
        mpz_pow_ui(x_pow.get_mpz_t(), x.get_mpz_t(), k - 1);
        mpz_tdiv_q(next.get_mpz_t(), v.get_mpz_t(), x_pow.get_mpz_t());
        mpz_addmul_ui(next.get_mpz_t(), x.get_mpz_t(), k - 1);
        mpz_tdiv_q_ui(next.get_mpz_t(), next.get_mpz_t(), k);
        if (next >= x) {
            break;
        }
        mpz_swap(x.get_mpz_t(), next.get_mpz_t());
    }

    // Correction: enforce x^k <= v < (x+1)^k.
    mpz_pow_ui(x_pow.get_mpz_t(), x.get_mpz_t(), k);
    while (x_pow > v) {
        --x;
        mpz_pow_ui(x_pow.get_mpz_t(), x.get_mpz_t(), k);
    }
    while (true) {
        next = x + 1;
        Natural next_pow;
        mpz_pow_ui(next_pow.get_mpz_t(), next.get_mpz_t(), k);
        if (next_pow > v) {
            break;
        }
        x = next;
        x_pow = next_pow;
    }
    return {x, x_pow == v};
}

DistanceRecord nearest_kth_power(const Natural& v, unsigned long k) {
    auto [root, exact] = floor_kth_root(v, k);
    DistanceRecord record;
    record.k = k;
    if (exact) {
        record.nearest_base = root;
        record.delta = 0;
        return record;
    }
    const Natural below = v - power(root, k);
    Natural upper_base = root + 1;
    const Natural above = power(upper_base, k) - v;
    if (below <= above) {
        record.nearest_base = std::move(root);
        record.delta = below;
    } else {
        record.nearest_base = std::move(upper_base);
        record.delta = above;
    }
    return record;
}

DistanceRecord delta_k(const PartitionTable& table, Index n, unsigned long k) {
    if (k < 2) {
        throw RangeError("delta_k needs k >= 2, got " + std::to_string(k));
    }
    auto record = nearest_kth_power(table.at(n), k);
    record.n = n;
    return record;
}

std::vector<unsigned long> primes_up_to(unsigned long limit) {
    std::vector<unsigned long> primes;
    if (limit < 2) {
        return primes;
    }
    std::vector<bool> composite(limit + 1, false);
    for (unsigned long i = 2; i <= limit; ++i) {
        if (composite[i]) {
            continue;
        }
        primes.push_back(i);
        for (unsigned long j = i * i; j <= limit; j += i) {
            composite[j] = true;
        }
    }
    return primes;
}

std::optional<PowerWitness> is_perfect_power(const Natural& v) {
    if (sgn(v) < 0) {
        return std::nullopt;
    }
    if (v < 2) {
        return PowerWitness{v, 2};
    }
    // Any m^k with k >= 2 is also (m^(k/p))^p for a prime p dividing k, and
    // p <= k < bit_length(v) because m >= 2.
    const auto bits = static_cast<unsigned long>(bit_length(v));
    for (unsigned long p : primes_up_to(bits)) {
        auto root = floor_kth_root(v, p);
        if (root.exact) {
            return PowerWitness{std::move(root.root), p};
        }
    }
    return std::nullopt;
}

}  // namespace partrep
