#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "partrep/errors.hpp"
#include "partrep/power_geometry.hpp"

namespace partrep {
namespace {

using testing::shared_table;

Natural random_natural(std::mt19937_64& rng, unsigned max_digits) {
    std::uniform_int_distribution<unsigned> len(1, max_digits);
    std::uniform_int_distribution<int> digit(0, 9);
    std::string s;
    const unsigned n = len(rng);
    for (unsigned i = 0; i < n; ++i) {
        s.push_back(static_cast<char>('0' + digit(rng)));
    }
    return Natural(s, 10);
}

TEST(FloorKthRoot, Examples) {
    for (unsigned long k = 1; k <= 5; ++k) {
        const auto zero = floor_kth_root(Natural(0), k);
        EXPECT_EQ(zero.root, 0);
        EXPECT_TRUE(zero.exact);
    }
    const auto sq = floor_kth_root(Natural(14884), 2);
    EXPECT_EQ(sq.root, 122);
    EXPECT_TRUE(sq.exact);
    const auto inexact = floor_kth_root(Natural(176), 2);
    EXPECT_EQ(inexact.root, 13);
    EXPECT_FALSE(inexact.exact);
    EXPECT_EQ(floor_kth_root(Natural(176), 1).root, 176);
    EXPECT_THROW(floor_kth_root(Natural(5), 0), std::invalid_argument);
    EXPECT_THROW(floor_kth_root(Natural(-5), 2), std::invalid_argument);
}

TEST(FloorKthRoot, MatchesLinearScanSmall) {
    constexpr std::uint64_t kLimit = 20000;
    for (unsigned k = 1; k <= 20; ++k) {
        const auto roots = testing::linear_scan_roots(kLimit, k);
        for (std::uint64_t v = 0; v <= kLimit; ++v) {
            ASSERT_EQ(floor_kth_root(Natural(static_cast<unsigned long>(v)), k).root,
                      static_cast<unsigned long>(roots[v]))
                << "v=" << v << " k=" << k;
        }
    }
}

TEST(FloorKthRoot, SandwichOnRandomLargeValues) {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<unsigned long> kdist(1, 128);
    for (int trial = 0; trial < 2000; ++trial) {
        const Natural v = random_natural(rng, 200);
        const unsigned long k = kdist(rng);
        const auto r = floor_kth_root(v, k);
        ASSERT_LE(power(r.root, k), v);
        ASSERT_GT(power(r.root + 1, k), v);
        ASSERT_EQ(r.exact, power(r.root, k) == v);
        Natural gmp_root;
        mpz_root(gmp_root.get_mpz_t(), v.get_mpz_t(), k);
        ASSERT_EQ(r.root, gmp_root);
    }
}

TEST(FloorKthRoot, ExactPowersAndNeighbours) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const Natural base = random_natural(rng, 30) + 2;
        const unsigned long k = 2 + trial % 9;
        const Natural v = power(base, k);
        EXPECT_TRUE(floor_kth_root(v, k).exact);
        EXPECT_EQ(floor_kth_root(v, k).root, base);
        EXPECT_EQ(floor_kth_root(v - 1, k).root, base - 1);
        EXPECT_FALSE(floor_kth_root(v + 1, k).exact);
    }
}

TEST(DeltaK, PublishedSamples) {
    const auto& t = shared_table();
    EXPECT_EQ(delta_k(t, 10, 2).delta, 6);
    EXPECT_EQ(delta_k(t, 20, 3).delta, 102);
    EXPECT_EQ(delta_k(t, 20, 4).delta, 2);
    EXPECT_EQ(delta_k(t, 50, 4).delta, 9745);
    for (unsigned long k = 2; k <= 40; ++k) {
        EXPECT_EQ(delta_k(t, 1, k).delta, 0);
    }
}

TEST(DeltaK, NearestBase) {
    const auto& t = shared_table();
    const auto rec = delta_k(t, 13, 2);  // p(13) = 101 = 10^2 + 1
    EXPECT_EQ(rec.nearest_base, 10);
    EXPECT_EQ(rec.delta, 1);
    EXPECT_EQ(rec.n, 13u);
    EXPECT_EQ(rec.k, 2u);
    EXPECT_EQ(delta_k(t, 35, 2).nearest_base, 122);
    EXPECT_EQ(delta_k(t, 35, 2).delta, 1);
    EXPECT_EQ(nearest_kth_power(Natural(7), 2).nearest_base, 3);
    EXPECT_EQ(nearest_kth_power(Natural(6), 2).nearest_base, 2);
}

TEST(DeltaK, RangeErrors) {
    const auto t = PartitionTable::build(10);
    EXPECT_THROW(delta_k(t, 11, 2), RangeError);
    EXPECT_THROW(delta_k(t, 5, 1), RangeError);
}

TEST(DeltaK, MatchesBruteForceScan) {
    const auto& t = shared_table();
    for (Index n = 0; n <= 30; ++n) {
        for (unsigned long k : {2, 3, 4}) {
            const auto brute = testing::brute_distance(t[n], k);
            const auto rec = delta_k(t, n, k);
            ASSERT_EQ(rec.delta, brute.delta) << "n=" << n << " k=" << k;
            ASSERT_EQ(rec.nearest_base, brute.base) << "n=" << n << " k=" << k;
        }
    }
}

TEST(DeltaK, ZeroIffExactRoot) {
    const auto& t = shared_table();
    for (Index n = 0; n <= 400; ++n) {
        for (unsigned long k = 2; k <= 12; ++k) {
            ASSERT_EQ(delta_k(t, n, k).delta == 0, floor_kth_root(t[n], k).exact);
        }
    }
}

TEST(PerfectPower, Examples) {
    const auto w = is_perfect_power(Natural(14884));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->base, 122);
    EXPECT_EQ(w->exponent, 2u);
    EXPECT_FALSE(is_perfect_power(Natural(101)));
    EXPECT_FALSE(is_perfect_power(Natural(2)));
    const auto one = is_perfect_power(Natural(1));
    ASSERT_TRUE(one);
    EXPECT_EQ(one->base, 1);
    EXPECT_EQ(one->exponent, 2u);
    const auto zero = is_perfect_power(Natural(0));
    ASSERT_TRUE(zero);
    EXPECT_EQ(zero->base, 0);
}

TEST(PerfectPower, SmallestPrimeExponent) {
    // 2^12: squares are found before cubes.
    auto w = is_perfect_power(Natural(4096));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->exponent, 2u);
    EXPECT_EQ(w->base, 64);
    // 3^15 = (3^5)^3 = (3^3)^5: exponent 3 wins.
    w = is_perfect_power(power(Natural(3), 15));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->exponent, 3u);
    EXPECT_EQ(w->base, 243);
    // 7^35: smallest prime exponent is 5.
    w = is_perfect_power(power(Natural(7), 35));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->exponent, 5u);
    EXPECT_EQ(w->base, power(Natural(7), 7));
}

TEST(PerfectPower, CompositeExponentsReduceToPrimes) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<unsigned long> base_dist(2, 100000);
    std::uniform_int_distribution<unsigned long> exp_dist(2, 40);
    for (int trial = 0; trial < 300; ++trial) {
        const Natural m(base_dist(rng));
        const unsigned long k = exp_dist(rng);
        const auto w = is_perfect_power(power(m, k));
        ASSERT_TRUE(w) << "m=" << m << " k=" << k;
        EXPECT_EQ(power(w->base, w->exponent), power(m, k));
        EXPECT_EQ(mpz_probab_prime_p(Natural(w->exponent).get_mpz_t(), 25) > 0, true);
    }
}

TEST(PerfectPower, AgreesWithGmpOnSmallRange) {
    for (unsigned long v = 0; v <= 200000; ++v) {
        const Natural n(v);
        ASSERT_EQ(is_perfect_power(n).has_value(), mpz_perfect_power_p(n.get_mpz_t()) != 0) << v;
    }
}

TEST(Primes, UpToLimit) {
    EXPECT_EQ(primes_up_to(1).size(), 0u);
    EXPECT_EQ(primes_up_to(100).size(), 25u);
    EXPECT_EQ(primes_up_to(100).back(), 97u);
}

}  // namespace
}  // namespace partrep
