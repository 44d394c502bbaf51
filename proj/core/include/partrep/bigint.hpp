#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace partrep {

/// Arbitrary-precision natural. Negative values never appear in the public API.
using Natural = mpz_class;

/// Position in the partition sequence.
using Index = std::size_t;

/// Number of bits needed to write `v` in binary; 0 for v = 0.
std::size_t bit_length(const Natural& v);

/// `base` raised to `exponent`.
Natural power(const Natural& base, unsigned long exponent);

/// 10^exponent, held exactly.
Natural power_of_ten(unsigned long exponent);

/// Exact decimal rendering; never uses scientific notation.
std::string to_decimal(const Natural& v);

/// Parses a non-empty run of decimal digits. Throws std::invalid_argument otherwise.
Natural parse_natural(std::string_view text);

/// Natural logarithm of a positive natural, accurate to double precision even
/// when `v` exceeds the double range.
double natural_log(const Natural& v);

}  // namespace partrep
