#include "partrep/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace partrep {

std::size_t bit_length(const Natural& v) {
    if (sgn(v) == 0) {
        return 0;
    }
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

Natural power(const Natural& base, unsigned long exponent) {
    Natural out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Natural power_of_ten(unsigned long exponent) {
    Natural out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
    return out;
}

std::string to_decimal(const Natural& v) { return v.get_str(10); }

Natural parse_natural(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("expected a decimal natural, got an empty string");
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("expected a decimal natural, got '" + std::string(text) + "'");
        }
    }
    return Natural(std::string(text), 10);
}

double natural_log(const Natural& v) {
    if (sgn(v) <= 0) {
        throw std::domain_error("natural_log of a non-positive value");
    }
    long exp2 = 0;
    const double mantissa = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace partrep
