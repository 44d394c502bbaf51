#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "partrep/errors.hpp"
#include "partrep/partition_engine.hpp"

namespace partrep {
namespace {

using testing::shared_table;

TEST(BuildTable, Seeds) {
    const auto t = PartitionTable::build(0);
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(t[0], 1);
}

TEST(BuildTable, KnownValues) {
    const auto t = PartitionTable::build(50);
    EXPECT_EQ(t[13], 101);
    EXPECT_EQ(t[15], 176);
    EXPECT_EQ(t[50], 204226);
    const long first[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231};
    for (Index n = 0; n < std::size(first); ++n) {
        EXPECT_EQ(t[n], first[n]) << "n=" << n;
    }
}

TEST(BuildTable, StrictlyIncreasingAfterOne) {
    const auto& t = shared_table();
    EXPECT_EQ(t[0], 1);
    EXPECT_EQ(t[1], 1);
    for (Index n = 1; n < t.n_max(); ++n) {
        ASSERT_LT(t[n], t[n + 1]) << "n=" << n;
    }
}

TEST(BuildTable, RamanujanCongruences) {
    const auto t = PartitionTable::build(3000);
    for (Index n = 0; 5 * n + 4 <= t.n_max(); ++n) {
        ASSERT_EQ(mpz_divisible_ui_p(t[5 * n + 4].get_mpz_t(), 5), 1);
    }
    for (Index n = 0; 7 * n + 5 <= t.n_max(); ++n) {
        ASSERT_EQ(mpz_divisible_ui_p(t[7 * n + 5].get_mpz_t(), 7), 1);
    }
    for (Index n = 0; 11 * n + 6 <= t.n_max(); ++n) {
        ASSERT_EQ(mpz_divisible_ui_p(t[11 * n + 6].get_mpz_t(), 11), 1);
    }
}

TEST(BuildTable, CopiesShareStorage) {
    const auto a = PartitionTable::build(20);
    const auto b = a;
    EXPECT_EQ(a.values().data(), b.values().data());
}

TEST(BuildTable, AbsurdSizeIsCapacityError) {
    EXPECT_THROW(PartitionTable::build(Index{1} << 40), CapacityError);
    EXPECT_GT(max_buildable_index(), Index{100000});
}

TEST(BuildTable, CheckedAccess) {
    const auto t = PartitionTable::build(10);
    EXPECT_EQ(t.at(10), 42);
    EXPECT_THROW(t.at(11), RangeError);
}

TEST(FromValues, VerifyCatchesCorruption) {
    const auto t = PartitionTable::build(30);
    std::vector<Natural> values(t.values().begin(), t.values().end());
    EXPECT_NO_THROW(PartitionTable::from_values(values, true));
    values[17] += 1;
    EXPECT_THROW(PartitionTable::from_values(values, true), std::invalid_argument);
    EXPECT_NO_THROW(PartitionTable::from_values(values, false));
    EXPECT_THROW(PartitionTable::from_values({}, false), std::invalid_argument);
}

TEST(Oracle, SmallValues) {
    EXPECT_EQ(count_partitions_oracle(0), 1);
    EXPECT_EQ(count_partitions_oracle(5), 7);
    EXPECT_EQ(count_partitions_oracle(1, 2), 0);
}

TEST(Oracle, AgreesWithRecurrenceAt200) {
    const auto t = PartitionTable::build(200);
    EXPECT_EQ(count_partitions_oracle(200), t[200]);
    EXPECT_EQ(to_decimal(t[200]), "3972999029388");
}

TEST(P1, GeneratingFunctionCoefficients) {
    const auto t = PartitionTable::build(10);
    // 1 + q^2 + q^3 + 2q^4 + 2q^5 + 4q^6 + 4q^7 + 7q^8 + 8q^9 + 12q^10
    const long expected[] = {1, 0, 1, 1, 2, 2, 4, 4, 7, 8, 12};
    for (Index n = 0; n <= 10; ++n) {
        EXPECT_EQ(p1(t, n), expected[n]) << "n=" << n;
    }
    EXPECT_THROW(p1(t, 11), RangeError);
}

TEST(P1, MatchesPartsAtLeastTwoOracle) {
    const auto t = PartitionTable::build(100);
    for (Index n = 0; n <= 100; ++n) {
        ASSERT_EQ(p1(t, n), count_partitions_oracle(n, 2)) << "n=" << n;
    }
}

TEST(Psi, GeneratingFunctionCoefficients) {
    const auto t = PartitionTable::build(10);
    // q^2 + 2q^3 + 4q^4 + 6q^5 + 10q^6 + 14q^7 + 21q^8 + 29q^9 + 41q^10
    const long expected[] = {0, 0, 1, 2, 4, 6, 10, 14, 21, 29, 41};
    for (Index n = 1; n <= 10; ++n) {
        EXPECT_EQ(psi(t, n), expected[n]) << "n=" << n;
    }
    EXPECT_THROW(psi(t, 0), RangeError);
    EXPECT_THROW(psi(t, 11), RangeError);
}

TEST(Psi, EqualsPMinusOneAndIncrementalSum) {
    const auto t = PartitionTable::build(1500);
    Natural running = 0;
    for (Index n = 1; n <= t.n_max(); ++n) {
        running += p1(t, n);
        ASSERT_EQ(running, t[n] - 1) << "n=" << n;
    }
    for (Index n : {1, 2, 37, 500, 1500}) {
        EXPECT_EQ(psi(t, n), t[n] - 1);
    }
}

TEST(HardyRamanujan, RatioAtFifty) {
    const double ratio = hardy_ramanujan_estimate(50) / 204226.0;
    EXPECT_GT(ratio, 0.9);
    EXPECT_LT(ratio, 1.2);
    EXPECT_GT(hardy_ramanujan_estimate(1), 0.0);
}

TEST(HardyRamanujan, ConvergesWithN) {
    const auto& t = shared_table();
    auto error = [&](Index n) { return std::abs(std::exp(hardy_ramanujan_log_estimate(n) - natural_log(t[n])) - 1.0); };
    EXPECT_LT(error(5000), error(50));
}

TEST(HardyRamanujan, OverflowIsExplicit) {
    EXPECT_NO_THROW(hardy_ramanujan_estimate(70000));
    EXPECT_THROW(hardy_ramanujan_estimate(90000), OverflowError);
    EXPECT_THROW(hardy_ramanujan_estimate(0), RangeError);
    // The log form keeps working past the double range.
    EXPECT_TRUE(std::isfinite(hardy_ramanujan_log_estimate(1000000)));
}

TEST(IsPartitionNumber, Lookup) {
    const auto t = PartitionTable::build(50);
    EXPECT_EQ(is_partition_number(t, Natural(176)).index, Index{15});
    EXPECT_EQ(is_partition_number(t, Natural(1)).index, Index{1});
    const auto miss = is_partition_number(t, Natural(100));
    EXPECT_FALSE(miss.index);
    EXPECT_FALSE(miss.beyond_table);
    const auto far = is_partition_number(t, Natural(204227));
    EXPECT_FALSE(far.index);
    EXPECT_TRUE(far.beyond_table);
    EXPECT_EQ(is_partition_number(t, Natural(204226)).index, Index{50});
    EXPECT_FALSE(is_partition_number(t, Natural(0)).index);
}

TEST(Export, ValuesRoundTrip) {
    const auto t = PartitionTable::build(120);
    std::stringstream buf;
    write_values(buf, t);
    const auto back = read_values(buf);
    ASSERT_EQ(back.n_max(), t.n_max());
    EXPECT_TRUE(std::equal(t.values().begin(), t.values().end(), back.values().begin()));
}

TEST(Export, ValuesFormat) {
    std::stringstream buf;
    write_values(buf, PartitionTable::build(5));
    EXPECT_EQ(buf.str(), "1\n1\n2\n3\n5\n7\n");
}

TEST(Export, MalformedLineReportsLocation) {
    std::stringstream buf("1\n1\nx2\n");
    try {
        read_values(buf);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    std::stringstream wrong("1\n1\n3\n");
    EXPECT_THROW(read_values(wrong), ParseError);
}

TEST(Cache, RoundTripAndValidation) {
    const auto t = PartitionTable::build(64);
    std::stringstream buf;
    write_cache(buf, t);
    EXPECT_EQ(buf.str().rfind("# partrep-table n_max=64\n", 0), 0u);
    const auto back = read_cache(buf);
    EXPECT_EQ(back.n_max(), 64u);
    EXPECT_EQ(back[64], t[64]);

    std::stringstream truncated;
    write_cache(truncated, t);
    std::string text = truncated.str();
    text.erase(text.rfind('\n', text.size() - 2) + 1);
    std::stringstream short_buf(text);
    EXPECT_THROW(read_cache(short_buf), ParseError);

    std::stringstream tampered;
    write_cache(tampered, t);
    std::string changed = tampered.str();
    changed.replace(changed.rfind(to_decimal(t[64])), to_decimal(t[64]).size(), to_decimal(t[64] + 1));
    std::stringstream tampered_buf(changed);
    EXPECT_THROW(read_cache(tampered_buf), ParseError);

    std::stringstream no_header("1\n1\n");
    EXPECT_THROW(read_cache(no_header), ParseError);
}

}  // namespace
}  // namespace partrep
