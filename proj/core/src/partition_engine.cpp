#include "partrep/partition_engine.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <new>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "partrep/errors.hpp"

namespace partrep {

namespace {

constexpr double kTableByteBudget = 4.0 * 1024 * 1024 * 1024;
constexpr char kCacheMagic[] = "# partrep-table n_max=";

struct PentagonalTerm {
    Index offset;
    bool add;
};

// Generalized pentagonal numbers k(3k-1)/2 and k(3k+1)/2 up to `limit`, in
// increasing order, with the recurrence sign (+ for odd k).
std::vector<PentagonalTerm> pentagonal_terms(Index limit) {
    std::vector<PentagonalTerm> terms;
    for (Index k = 1;; ++k) {
        const Index first = k * (3 * k - 1) / 2;
        if (first > limit) {
            break;
        }
        const bool add = (k % 2) == 1;
        terms.push_back({first, add});
        const Index second = k * (3 * k + 1) / 2;
        if (second <= limit) {
            terms.push_back({second, add});
        }
    }
    return terms;
}

void recurrence_step(const std::vector<Natural>& values, std::span<const PentagonalTerm> terms,
                     Index n, Natural& out) {
    out = 0;
    for (const auto& term : terms) {
        if (term.offset > n) {
            break;
        }
        const Natural& prior = values[n - term.offset];
        if (term.add) {
            mpz_add(out.get_mpz_t(), out.get_mpz_t(), prior.get_mpz_t());
        } else {
            mpz_sub(out.get_mpz_t(), out.get_mpz_t(), prior.get_mpz_t());
        }
    }
}

std::string trim_line(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
        line.pop_back();
    }
    return line;
}

std::vector<Natural> read_decimal_lines(std::istream& in, std::size_t first_line_number) {
    std::vector<Natural> values;
    std::string line;
    std::size_t line_number = first_line_number;
    while (std::getline(in, line)) {
        line = trim_line(std::move(line));
        if (line.empty()) {
            ++line_number;
            continue;
        }
        try {
            values.push_back(parse_natural(line));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_number, e.what());
        }
        ++line_number;
    }
    return values;
}

}  // namespace

double estimated_table_bytes(Index n_max) {
    // log2 p(n) ~ pi*sqrt(2n/3)/ln 2, so the total bit count grows like n^1.5.
    const double n = static_cast<double>(n_max) + 1.0;
    const double bits = std::numbers::pi * std::sqrt(2.0 / 3.0) / std::numbers::ln2 * (2.0 / 3.0) * n * std::sqrt(n);
    return bits / 8.0 + n * (sizeof(Natural) + 16.0);
}

Index max_buildable_index() {
    Index lo = 1;
    Index hi = Index{1} << 40;
    while (lo < hi) {
        const Index mid = lo + (hi - lo + 1) / 2;
        if (estimated_table_bytes(mid) <= kTableByteBudget) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

const Natural& PartitionTable::at(Index n) const {
    if (n > n_max()) {
        throw RangeError("index " + std::to_string(n) + " exceeds table n_max " + std::to_string(n_max()));
    }
    return (*values_)[n];
}

PartitionTable PartitionTable::build(Index n_max) {
    if (n_max > max_buildable_index()) {
        throw CapacityError("partition table up to n_max=" + std::to_string(n_max) +
                            " exceeds the memory budget (limit " + std::to_string(max_buildable_index()) + ")");
    }
    try {
        const auto terms = pentagonal_terms(n_max);
        auto values = std::make_shared<std::vector<Natural>>(n_max + 1);
        (*values)[0] = 1;
        for (Index n = 1; n <= n_max; ++n) {
            recurrence_step(*values, terms, n, (*values)[n]);
        }
        return PartitionTable(std::move(values));
    } catch (const std::bad_alloc&) {
        throw CapacityError("out of memory building partition table up to n_max=" + std::to_string(n_max));
    }
}

PartitionTable PartitionTable::from_values(std::vector<Natural> values, bool verify) {
    if (values.empty()) {
        throw std::invalid_argument("partition table needs at least p(0)");
    }
    if (verify) {
        const auto terms = pentagonal_terms(values.size() - 1);
        if (values[0] != 1) {
            throw std::invalid_argument("p(0) must be 1");
        }
        Natural expected;
        for (Index n = 1; n < values.size(); ++n) {
            recurrence_step(values, terms, n, expected);
            if (expected != values[n]) {
                throw std::invalid_argument("value at index " + std::to_string(n) +
                                            " does not satisfy the pentagonal recurrence");
            }
        }
    }
    return PartitionTable(std::make_shared<const std::vector<Natural>>(std::move(values)));
}

Natural count_partitions_oracle(Index n, Index min_part) {
    // ways[s] = number of multisets of allowed parts summing to s.
    std::vector<Natural> ways(n + 1);
    ways[0] = 1;
    for (Index part = std::max<Index>(min_part, 1); part <= n; ++part) {
        for (Index s = part; s <= n; ++s) {
            ways[s] += ways[s - part];
        }
    }
    return ways[n];
}

Natural p1(const PartitionTable& table, Index n) {
    if (n == 0) {
        return 1;
    }
    return table.at(n) - table[n - 1];
}

Natural psi(const PartitionTable& table, Index n) {
    if (n == 0) {
        throw RangeError("psi is defined for n >= 1");
    }
    table.at(n);
    Natural sum = 0;
    for (Index j = 1; j <= n; ++j) {
        sum += p1(table, j);
    }
    return sum;
}

double hardy_ramanujan_log_estimate(Index n) {
    if (n == 0) {
        throw RangeError("Hardy-Ramanujan estimate needs n >= 1");
    }
    const double x = static_cast<double>(n);
    return std::numbers::pi * std::sqrt(2.0 * x / 3.0) - std::log(4.0 * x * std::numbers::sqrt3);
}

double hardy_ramanujan_estimate(Index n) {
    const double log_value = hardy_ramanujan_log_estimate(n);
    if (log_value >= std::log(std::numeric_limits<double>::max())) {
        throw OverflowError("Hardy-Ramanujan estimate for n=" + std::to_string(n) + " overflows double");
    }
    return std::exp(log_value);
}

PartitionLookup is_partition_number(const PartitionTable& table, const Natural& v) {
    PartitionLookup result;
    if (v > table[table.n_max()]) {
        result.beyond_table = true;
        return result;
    }
    if (table.n_max() == 0) {
        return result;
    }
    const auto tail = table.values().subspan(1);
    const auto it = std::lower_bound(tail.begin(), tail.end(), v);
    if (it != tail.end() && *it == v) {
        result.index = static_cast<Index>(it - tail.begin()) + 1;
    }
    return result;
}

void write_values(std::ostream& out, const PartitionTable& table) {
    for (const auto& v : table.values()) {
        out << to_decimal(v) << '\n';
    }
}

PartitionTable read_values(std::istream& in) {
    auto values = read_decimal_lines(in, 1);
    if (values.empty()) {
        throw ParseError(0, "no values found");
    }
    try {
        return PartitionTable::from_values(std::move(values), true);
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

void write_cache(std::ostream& out, const PartitionTable& table) {
    out << kCacheMagic << table.n_max() << '\n';
    write_values(out, table);
}

PartitionTable read_cache(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) {
        throw ParseError(1, "empty cache file");
    }
    header = trim_line(std::move(header));
    const std::string magic = kCacheMagic;
    if (header.rfind(magic, 0) != 0) {
        throw ParseError(1, "missing cache header");
    }
    Index declared = 0;
    try {
        declared = static_cast<Index>(std::stoull(header.substr(magic.size())));
    } catch (const std::exception&) {
        throw ParseError(1, "bad n_max in cache header");
    }
    auto values = read_decimal_lines(in, 2);
    if (values.size() != declared + 1) {
        throw ParseError(0, "cache declares n_max=" + std::to_string(declared) + " but holds " +
                                std::to_string(values.size()) + " values");
    }
    if (values[0] != 1 || (declared >= 1 && values[1] != 1)) {
        throw ParseError(0, "cache seed values are not p(0) = p(1) = 1");
    }
    if (declared >= 2) {
        const auto terms = pentagonal_terms(declared);
        Natural expected;
        recurrence_step(values, terms, declared, expected);
        if (expected != values[declared]) {
            throw ParseError(declared + 2, "cached p(n_max) fails the recurrence");
        }
    }
    return PartitionTable::from_values(std::move(values), false);
}

}  // namespace partrep
