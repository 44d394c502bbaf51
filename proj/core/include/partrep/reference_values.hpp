#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "partrep/fit.hpp"

/// Published values of the repulsion statistics, used as golden data by the
/// CLI verifiers and the acceptance suite. Every M value was computed over
/// n <= 25000.
namespace partrep::reference {

struct Table1Entry {
    unsigned n;
    /// Delta_2, Delta_3, Delta_4.
    std::array<std::uint64_t, 3> deltas;
};

/// One d row over the default k columns 2..8, 50, 100.
struct MkRow {
    /// table2(): exponent i with d = 10^i, or -1 for d = 0. table3(): d itself.
    int d_key;
    std::array<unsigned, 9> m;
};

struct FigureSeries {
    unsigned long k;
    /// M_k(10^i) for i = 0..70.
    std::array<unsigned, 71> m;
};

struct NdRange {
    std::uint64_t d_lo;
    std::uint64_t d_hi;
    unsigned long n_d;
};

const std::vector<Table1Entry>& table1();
const std::vector<MkRow>& table2();
const std::vector<MkRow>& table3();
/// Series for k = 2..8 and 50.
const std::vector<FigureSeries>& figure1();
const std::vector<NdRange>& table4();

/// The degree-3 model fitted on d <= 10^12 and the degree-5 model fitted on
/// d <= 10^70, both for k = 50, as printed.
LogPolyModel published_f50_window12();
LogPolyModel published_f50_window70();

/// Positive integers up to p(15) = 176 with no x^2 + ell^a representation.
const std::vector<std::uint64_t>& missed_up_to_176();

/// Indices in 2..19 whose partition number has no such representation.
const std::vector<unsigned>& uncovered_below_20();

}  // namespace partrep::reference
