#include "partrep/sun_verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "partrep/errors.hpp"

namespace partrep {

namespace {

bool is_small_prime(unsigned long v) {
    return std::find(kSmallPrimes.begin(), kSmallPrimes.end(), v) != kSmallPrimes.end();
}

unsigned long parse_field(const std::string& token, std::size_t line, const char* name) {
    Natural value;
    try {
        value = parse_natural(token);
    } catch (const std::invalid_argument&) {
        throw ParseError(line, std::string("field '") + name + "' is not a decimal natural: '" + token + "'");
    }
    if (!value.fits_ulong_p()) {
        throw ParseError(line, std::string("field '") + name + "' is too large");
    }
    return value.get_ui();
}

nlohmann::ordered_json witness_json(const SWitness& w) {
    return {{"x", to_decimal(w.x)}, {"ell", w.ell}, {"a", w.a}};
}

}  // namespace

std::vector<SWitness> representations(const Natural& v, bool first_only) {
    std::vector<SWitness> found;
    Natural prime_power;
    Natural rest;
    for (unsigned long ell : kSmallPrimes) {
        prime_power = ell;
        // x >= 1 forces ell^a <= v - 1.
        for (unsigned long a = 1; prime_power < v; ++a, prime_power *= ell) {
            rest = v - prime_power;
            auto root = floor_kth_root(rest, 2);
            if (root.exact && mpz_divisible_ui_p(root.root.get_mpz_t(), ell) == 0) {
                found.push_back({0, std::move(root.root), ell, a});
                if (first_only) {
                    return found;
                }
            }
        }
    }
    return found;
}

std::optional<SWitness> s_membership(const PartitionTable& table, Index n) {
    auto found = representations(table.at(n), true);
    if (found.empty()) {
        return std::nullopt;
    }
    found.front().n = n;
    return found.front();
}

std::vector<SWitness> s_witnesses(const PartitionTable& table, Index n) {
    auto found = representations(table.at(n), false);
    for (auto& w : found) {
        w.n = n;
    }
    return found;
}

std::vector<std::uint64_t> missed_values(std::uint64_t bound) {
    std::vector<bool> covered(bound + 1, false);
    for (unsigned long ell : kSmallPrimes) {
        for (std::uint64_t prime_power = ell; prime_power < bound; ) {
            for (std::uint64_t x = 1; x * x <= bound - prime_power; ++x) {
                if (x % ell != 0) {
                    covered[x * x + prime_power] = true;
                }
            }
            if (prime_power > bound / ell) {
                break;
            }
            prime_power *= ell;
        }
    }
    std::vector<std::uint64_t> missed;
    for (std::uint64_t v = 1; v <= bound; ++v) {
        if (!covered[v]) {
            missed.push_back(v);
        }
    }
    return missed;
}

std::optional<std::string> tuple_violation(const ExceptionalTuple& t) {
    if (!is_small_prime(t.q)) {
        return "q=" + std::to_string(t.q) + " is not a prime below 100";
    }
    if (t.alpha < 1) {
        return std::string("alpha must be >= 1");
    }
    if (t.k < 3) {
        return "k=" + std::to_string(t.k) + " is below 3";
    }
    const Natural square = power(t.y, t.k) - power(Natural(t.q), t.alpha);
    if (sgn(square) <= 0) {
        return std::string("y^k - q^alpha is not positive");
    }
    const auto root = floor_kth_root(square, 2);
    if (!root.exact) {
        return "y^k - q^alpha = " + to_decimal(square) + " is not a perfect square";
    }
    if (mpz_divisible_ui_p(root.root.get_mpz_t(), t.q) != 0) {
        return "q divides x = " + to_decimal(root.root);
    }
    return std::nullopt;
}

std::vector<ExceptionalTuple> load_exceptional_list(std::istream& source) {
    std::vector<ExceptionalTuple> tuples;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(source, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const auto space = line.find(' ', start);
            fields.push_back(line.substr(start, space - start));
            if (space == std::string::npos) {
                break;
            }
            start = space + 1;
        }
        if (fields.size() != 4) {
            throw ParseError(line_number, "expected 4 fields \"q alpha y k\" separated by single spaces");
        }
        ExceptionalTuple t;
        t.q = parse_field(fields[0], line_number, "q");
        t.alpha = parse_field(fields[1], line_number, "alpha");
        try {
            t.y = parse_natural(fields[2]);
        } catch (const std::invalid_argument&) {
            throw ParseError(line_number, "field 'y' is not a decimal natural: '" + fields[2] + "'");
        }
        t.k = parse_field(fields[3], line_number, "k");
        if (auto why = tuple_violation(t)) {
            throw ParseError(line_number, "invalid tuple: " + *why);
        }
        tuples.push_back(std::move(t));
    }
    return tuples;
}

std::vector<ExceptionalTuple> seed_exceptional_list() {
    return {
        {2, 1, Natural(3), 3},  {2, 2, Natural(5), 3},      {2, 5, Natural(3), 4},
        {89, 1, Natural(5), 3}, {97, 2, Natural(12545), 3}, {97, 1, Natural(7), 4},
    };
}

Index required_index(const Natural& v) {
    // Grow geometrically; each attempt is a fresh table.
    Index n_max = 64;
    while (true) {
        const auto table = PartitionTable::build(n_max);
        if (table[n_max] >= v) {
            const auto values = table.values();
            return static_cast<Index>(std::lower_bound(values.begin(), values.end(), v) - values.begin());
        }
        n_max *= 2;
    }
}

ExceptionalReport verify_no_exceptional_partition(const PartitionTable& table,
                                                  const std::vector<ExceptionalTuple>& tuples) {
    ExceptionalReport report;
    report.n_max = table.n_max();
    for (const auto& t : tuples) {
        Natural value = power(t.y, t.k);
        const auto lookup = is_partition_number(table, value);
        if (lookup.beyond_table) {
            throw RangeError("y^k = " + to_decimal(value) + " exceeds p(" + std::to_string(table.n_max()) +
                             "); need n_max >= " + std::to_string(required_index(value)));
        }
        report.verdicts.push_back({t, std::move(value), lookup.index});
        if (lookup.index) {
            report.pass = false;
        }
    }
    return report;
}

std::vector<CoverageEntry> theorem1_scan(const PartitionTable& table, Index n_lo, Index n_hi) {
    if (n_hi > table.n_max()) {
        throw RangeError("scan upper bound " + std::to_string(n_hi) + " exceeds table n_max " +
                         std::to_string(table.n_max()));
    }
    std::vector<CoverageEntry> out;
    for (Index n = n_lo; n <= n_hi; ++n) {
        CoverageEntry entry{n, Coverage::uncovered, s_membership(table, n)};
        if (entry.witness) {
            entry.status = Coverage::covered;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<PerfectPowerHit> sun_direct_scan(const PartitionTable& table, Index n_max, unsigned threads) {
    if (n_max > table.n_max()) {
        throw RangeError("scan bound " + std::to_string(n_max) + " exceeds table n_max " +
                         std::to_string(table.n_max()));
    }
    if (n_max < 2) {
        return {};
    }
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    std::vector<PerfectPowerHit> hits;
    std::mutex hits_mutex;
    std::atomic<Index> next{2};
    auto worker = [&] {
        for (Index n = next++; n <= n_max; n = next++) {
            if (auto w = is_perfect_power(table[n])) {
                std::lock_guard lock(hits_mutex);
                hits.push_back({n, std::move(*w)});
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
    }
    std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
    return hits;
}

std::string to_json(const ExceptionalReport& report) {
    nlohmann::ordered_json doc;
    doc["n_max"] = report.n_max;
    doc["pass"] = report.pass;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& v : report.verdicts) {
        nlohmann::ordered_json e;
        e["q"] = v.tuple.q;
        e["alpha"] = v.tuple.alpha;
        e["y"] = to_decimal(v.tuple.y);
        e["k"] = v.tuple.k;
        e["y_pow_k"] = to_decimal(v.power);
        e["partition_index"] = v.partition_index ? nlohmann::ordered_json(*v.partition_index) : nullptr;
        entries.push_back(std::move(e));
    }
    doc["tuples"] = std::move(entries);
    return doc.dump(2) + "\n";
}

std::string to_text(const ExceptionalReport& report) {
    std::ostringstream out;
    for (const auto& v : report.verdicts) {
        out << '(' << v.tuple.q << ',' << v.tuple.alpha << ',' << to_decimal(v.tuple.y) << ',' << v.tuple.k
            << ") y^k=" << to_decimal(v.power) << ": ";
        if (v.partition_index) {
            out << "IS p(" << *v.partition_index << ")\n";
        } else {
            out << "not a partition number\n";
        }
    }
    out << (report.pass ? "PASS" : "FAIL") << " (" << report.verdicts.size() << " tuples, n_max=" << report.n_max
        << ")\n";
    return out.str();
}

std::string to_json(const std::vector<CoverageEntry>& scan) {
    auto doc = nlohmann::ordered_json::array();
    for (const auto& e : scan) {
        nlohmann::ordered_json row;
        row["n"] = e.n;
        row["status"] = e.status == Coverage::covered ? "COVERED" : "UNCOVERED";
        row["witness"] = e.witness ? witness_json(*e.witness) : nlohmann::ordered_json(nullptr);
        doc.push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

std::string to_text(const std::vector<CoverageEntry>& scan) {
    std::ostringstream out;
    for (const auto& e : scan) {
        out << e.n << ' ';
        if (e.witness) {
            out << "COVERED " << to_decimal(e.witness->x) << "^2 + " << e.witness->ell << '^' << e.witness->a << '\n';
        } else {
            out << "UNCOVERED\n";
        }
    }
    return out.str();
}

}  // namespace partrep
