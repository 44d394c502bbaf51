// partrep: exact partition numbers, distances to k-th powers and the
// verifiers built on them.
//
// Exit status: 0 success, 1 a verification failed (golden mismatch, a
// counterexample, a partition number in the exceptional list), 2 usage or
// configuration error.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "partrep/errors.hpp"
#include "partrep/fit.hpp"
#include "partrep/partition_engine.hpp"
#include "partrep/power_geometry.hpp"
#include "partrep/reference_values.hpp"
#include "partrep/repulsion_tables.hpp"
#include "partrep/sun_verifier.hpp"
#include "table_cache.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace partrep::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Index n_max = kDefaultRepulsionNMax;
    std::vector<unsigned long> k_list;
    std::vector<std::string> d_exp_specs;
    std::optional<fs::path> bs_list;
    std::optional<std::string> format;
    std::optional<fs::path> cache;
    bool no_cache = false;
    std::optional<fs::path> golden;
    unsigned threads = 0;
};

std::vector<unsigned> parse_exponents(const std::vector<std::string>& specs) {
    std::vector<unsigned> out;
    for (const auto& spec : specs) {
        const auto dots = spec.find("..");
        try {
            if (dots == std::string::npos) {
                out.push_back(static_cast<unsigned>(std::stoul(spec)));
            } else {
                const auto lo = std::stoul(spec.substr(0, dots));
                const auto hi = std::stoul(spec.substr(dots + 2));
                if (lo > hi) {
                    throw std::invalid_argument("empty range");
                }
                for (auto i = lo; i <= hi; ++i) {
                    out.push_back(static_cast<unsigned>(i));
                }
            }
        } catch (const std::exception&) {
            throw UsageError("--d-exp: expected an exponent or a range a..b, got '" + spec + "'");
        }
    }
    return out;
}

std::string format_of(const RunConfig& cfg, const char* fallback) { return cfg.format.value_or(fallback); }

std::string read_file(const fs::path& path, const char* flag) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError(std::string(flag) + ": cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string normalize(std::string text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c != '\r') {
            out.push_back(c);
        }
    }
    while (!out.empty() && (out.back() == '\n' || out.back() == ' ')) {
        out.pop_back();
    }
    return out;
}

// Compares `csv` against the --golden file when one is given.
bool golden_matches(const RunConfig& cfg, const std::string& csv) {
    if (!cfg.golden) {
        return true;
    }
    if (normalize(read_file(*cfg.golden, "--golden")) != normalize(csv)) {
        std::cerr << "partrep: output differs from golden file " << *cfg.golden << '\n';
        return false;
    }
    return true;
}

PartitionTable table_for(const RunConfig& cfg, Index n_max) {
    return obtain_table(n_max, resolve_cache_path(cfg.cache, cfg.no_cache));
}

std::vector<unsigned long> k_list_or(const RunConfig& cfg, std::vector<unsigned long> fallback) {
    auto ks = cfg.k_list.empty() ? std::move(fallback) : cfg.k_list;
    for (auto k : ks) {
        if (k < 2) {
            throw UsageError("--k: entries must be >= 2, got " + std::to_string(k));
        }
    }
    return ks;
}

void print_grid(const MkGrid& grid, const std::string& format) {
    if (format == "json") {
        std::cout << grid_to_json(grid);
    } else if (format == "text") {
        std::cout << "n_max=" << grid.n_max << '\n';
        for (std::size_t row = 0; row < grid.k_list.size(); ++row) {
            std::cout << "M_" << grid.k_list[row] << ':';
            for (std::size_t col = 0; col < grid.d_values.size(); ++col) {
                std::cout << ' ' << grid.cells[row][col];
            }
            std::cout << '\n';
        }
    } else {
        std::cout << grid_to_csv(grid);
    }
}

// Compares grid cells to published rows; only meaningful at the published n_max.
bool grid_matches_reference(const MkGrid& grid, const std::vector<reference::MkRow>& rows) {
    const auto ks = default_k_list();
    bool ok = true;
    for (std::size_t col = 0; col < rows.size(); ++col) {
        for (std::size_t r = 0; r < ks.size(); ++r) {
            const auto got = grid.at(ks[r], col);
            if (got != rows[col].m[r]) {
                std::cerr << "partrep: mismatch at d=" << to_decimal(grid.d_values[col]) << ", k=" << ks[r]
                          << ": computed " << got << ", published " << rows[col].m[r] << '\n';
                ok = false;
            }
        }
    }
    return ok;
}

int cmd_pn(const RunConfig& cfg, Index n, bool list) {
    const auto table = table_for(cfg, n);
    const auto format = format_of(cfg, "text");
    if (list) {
        if (format == "json") {
            json values = json::array();
            for (Index i = 0; i <= n; ++i) {
                values.push_back(to_decimal(table[i]));
            }
            std::cout << json{{"n_max", n}, {"values", values}}.dump(2) << '\n';
        } else {
            for (Index i = 0; i <= n; ++i) {
                std::cout << to_decimal(table[i]) << '\n';
            }
        }
        return kExitOk;
    }
    if (format == "json") {
        std::cout << json{{"n", n}, {"p", to_decimal(table[n])}}.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "n,p\n" << n << ',' << to_decimal(table[n]) << '\n';
    } else {
        std::cout << to_decimal(table[n]) << '\n';
    }
    return kExitOk;
}

int cmd_delta(const RunConfig& cfg, Index n) {
    const auto table = table_for(cfg, n);
    const auto ks = k_list_or(cfg, default_k_list());
    const auto format = format_of(cfg, "csv");
    json rows = json::array();
    std::ostringstream csv;
    csv << "n,k,nearest_base,delta\n";
    for (auto k : ks) {
        const auto rec = delta_k(table, n, k);
        csv << n << ',' << k << ',' << to_decimal(rec.nearest_base) << ',' << to_decimal(rec.delta) << '\n';
        rows.push_back(
            {{"n", n}, {"k", k}, {"nearest_base", to_decimal(rec.nearest_base)}, {"delta", to_decimal(rec.delta)}});
    }
    if (format == "json") {
        std::cout << rows.dump(2) << '\n';
    } else if (format == "text") {
        for (const auto& r : rows) {
            std::cout << "Delta_" << r["k"].get<unsigned long>() << '(' << n << ") = " << r["delta"].get<std::string>()
                      << "  (nearest " << r["nearest_base"].get<std::string>() << '^' << r["k"].get<unsigned long>()
                      << ")\n";
        }
    } else {
        std::cout << csv.str();
    }
    return kExitOk;
}

int cmd_table1(const RunConfig& cfg) {
    const auto table = table_for(cfg, 50);
    const auto rows = table1(table);
    std::ostringstream csv;
    csv << "n,delta_2,delta_3,delta_4\n";
    bool ok = true;
    const auto& published = reference::table1();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        csv << rows[i].n;
        for (std::size_t j = 0; j < rows[i].deltas.size(); ++j) {
            csv << ',' << to_decimal(rows[i].deltas[j]);
            if (rows[i].deltas[j] != Natural(static_cast<unsigned long>(published[i].deltas[j]))) {
                std::cerr << "partrep: Delta_" << j + 2 << '(' << rows[i].n << ") differs from the published value\n";
                ok = false;
            }
        }
        csv << '\n';
    }
    const auto format = format_of(cfg, "csv");
    if (format == "json") {
        json doc = json::array();
        for (const auto& r : rows) {
            doc.push_back({{"n", r.n},
                           {"delta_2", to_decimal(r.deltas[0])},
                           {"delta_3", to_decimal(r.deltas[1])},
                           {"delta_4", to_decimal(r.deltas[2])}});
        }
        std::cout << doc.dump(2) << '\n';
    } else if (format == "text") {
        for (const auto& r : rows) {
            std::cout << "n=" << r.n << ": " << to_decimal(r.deltas[0]) << ' ' << to_decimal(r.deltas[1]) << ' '
                      << to_decimal(r.deltas[2]) << '\n';
        }
    } else {
        std::cout << csv.str();
    }
    ok = golden_matches(cfg, csv.str()) && ok;
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_mk_table(const RunConfig& cfg, bool second) {
    const auto table = table_for(cfg, cfg.n_max);
    const auto grid = second ? table2(table, cfg.n_max, cfg.threads) : table3(table, cfg.n_max, cfg.threads);
    print_grid(grid, format_of(cfg, "csv"));
    bool ok = true;
    if (cfg.n_max == kDefaultRepulsionNMax) {
        ok = grid_matches_reference(grid, second ? reference::table2() : reference::table3());
    } else {
        std::cerr << "partrep: n_max differs from " << kDefaultRepulsionNMax
                  << "; published values not checked\n";
    }
    ok = golden_matches(cfg, grid_to_csv(grid)) && ok;
    return ok ? kExitOk : kExitVerificationFailed;
}

std::vector<Natural> table4_endpoints(bool all_ranges) {
    std::vector<Natural> ds;
    for (const auto& range : reference::table4()) {
        if (!all_ranges && range.d_hi > 2534) {
            break;
        }
        ds.emplace_back(static_cast<unsigned long>(range.d_lo));
        if (range.d_hi != range.d_lo) {
            ds.emplace_back(static_cast<unsigned long>(range.d_hi));
        }
    }
    return ds;
}

int cmd_table4(const RunConfig& cfg, const std::vector<std::string>& d_specs, bool all_ranges) {
    std::vector<Natural> ds;
    for (const auto& s : d_specs) {
        try {
            ds.push_back(parse_natural(s));
        } catch (const std::invalid_argument&) {
            throw UsageError("--d: expected a decimal natural, got '" + s + "'");
        }
    }
    if (ds.empty()) {
        ds = table4_endpoints(all_ranges);
    }
    const auto table = table_for(cfg, cfg.n_max);
    const auto results = n_d_batch(table, ds, cfg.n_max, cfg.threads);

    bool ok = true;
    std::ostringstream csv;
    csv << "d,L,N_d,k_threshold,n_max\n";
    json doc = json::array();
    for (const auto& r : results) {
        csv << to_decimal(r.d) << ',' << r.limit << ',' << r.n_d << ',' << r.cert.k_threshold << ',' << r.cert.n_max
            << '\n';
        doc.push_back({{"d", to_decimal(r.d)},
                       {"L", r.limit},
                       {"N_d", r.n_d},
                       {"k_threshold", r.cert.k_threshold},
                       {"n_max", r.cert.n_max}});
        if (cfg.n_max != kDefaultRepulsionNMax) {
            continue;
        }
        for (const auto& range : reference::table4()) {
            if (r.d >= Natural(static_cast<unsigned long>(range.d_lo)) &&
                r.d <= Natural(static_cast<unsigned long>(range.d_hi)) && r.n_d != range.n_d) {
                std::cerr << "partrep: N_d for d=" << to_decimal(r.d) << " is " << r.n_d << ", published "
                          << range.n_d << '\n';
                ok = false;
            }
        }
    }
    const auto format = format_of(cfg, "csv");
    if (format == "json") {
        std::cout << doc.dump(2) << '\n';
    } else if (format == "text") {
        for (const auto& r : results) {
            std::cout << "d=" << to_decimal(r.d) << ": L(d)=" << r.limit << ", N_d=" << r.n_d
                      << " (k checked up to " << r.cert.k_threshold << ", n <= " << r.cert.n_max << ")\n";
        }
    } else {
        std::cout << csv.str();
    }
    ok = golden_matches(cfg, csv.str()) && ok;
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_figure_data(const RunConfig& cfg) {
    const auto ks = k_list_or(cfg, {2, 3, 4, 5, 6, 7, 8, 50});
    auto exponents = parse_exponents(cfg.d_exp_specs);
    if (exponents.empty()) {
        exponents = default_d_exponents();
    }
    const auto table = table_for(cfg, cfg.n_max);
    const auto grid = mk_grid(table, ks, exponents, cfg.n_max, cfg.threads);

    const auto format = format_of(cfg, "text");
    if (format == "text") {
        for (auto k : ks) {
            const auto series = figure_series(grid, k);
            std::cout << "M_" << k << ": " << format_coordinates(series) << '\n';
        }
    } else {
        print_grid(grid, format);
    }

    bool ok = true;
    if (cfg.n_max == kDefaultRepulsionNMax) {
        for (const auto& published : reference::figure1()) {
            if (std::find(ks.begin(), ks.end(), published.k) == ks.end()) {
                continue;
            }
            for (std::size_t col = 0; col < exponents.size(); ++col) {
                if (exponents[col] > 70) {
                    continue;
                }
                const auto got = grid.at(published.k, col);
                if (got != published.m[exponents[col]]) {
                    std::cerr << "partrep: M_" << published.k << "(10^" << exponents[col] << ") is " << got
                              << ", plotted " << published.m[exponents[col]] << '\n';
                    ok = false;
                }
            }
        }
    }
    ok = golden_matches(cfg, grid_to_csv(grid)) && ok;
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_s_check(const RunConfig& cfg, std::optional<Index> single, Index from, Index to, bool all_witnesses) {
    Index lo = from;
    Index hi = to;
    if (single) {
        lo = hi = *single;
    }
    if (lo > hi) {
        throw UsageError("--from must not exceed --to");
    }
    const auto table = table_for(cfg, hi);
    const auto format = format_of(cfg, "text");
    if (single && all_witnesses) {
        const auto witnesses = s_witnesses(table, *single);
        if (format == "json") {
            json doc = json::array();
            for (const auto& w : witnesses) {
                doc.push_back({{"x", to_decimal(w.x)}, {"ell", w.ell}, {"a", w.a}});
            }
            std::cout << doc.dump(2) << '\n';
        } else {
            std::cout << "x,ell,a\n";
            for (const auto& w : witnesses) {
                std::cout << to_decimal(w.x) << ',' << w.ell << ',' << w.a << '\n';
            }
        }
        return kExitOk;
    }
    const auto scan = theorem1_scan(table, lo, hi);
    if (format == "json") {
        std::cout << to_json(scan);
    } else if (format == "csv") {
        std::cout << "n,status,x,ell,a\n";
        for (const auto& e : scan) {
            std::cout << e.n << ',' << (e.witness ? "COVERED" : "UNCOVERED");
            if (e.witness) {
                std::cout << ',' << to_decimal(e.witness->x) << ',' << e.witness->ell << ',' << e.witness->a;
            } else {
                std::cout << ",,,";
            }
            std::cout << '\n';
        }
    } else {
        std::cout << to_text(scan);
    }
    return kExitOk;
}

int cmd_missed(const RunConfig& cfg, std::uint64_t bound) {
    if (bound < 1) {
        throw UsageError("--bound must be >= 1");
    }
    const auto values = missed_values(bound);
    const auto format = format_of(cfg, "text");
    if (format == "json") {
        std::cout << json{{"bound", bound}, {"missed", values}}.dump(2) << '\n';
    } else {
        if (format == "csv") {
            std::cout << "v\n";
        }
        for (auto v : values) {
            std::cout << v << '\n';
        }
    }
    return kExitOk;
}

int cmd_verify_bs(const RunConfig& cfg) {
    std::vector<ExceptionalTuple> tuples;
    if (cfg.bs_list) {
        std::ifstream in(*cfg.bs_list);
        if (!in) {
            throw UsageError("--bs-list: cannot open '" + cfg.bs_list->string() + "'");
        }
        try {
            tuples = load_exceptional_list(in);
        } catch (const ParseError& e) {
            throw UsageError("--bs-list: " + cfg.bs_list->string() + ": " + e.what());
        }
    } else {
        tuples = seed_exceptional_list();
    }
    const auto table = table_for(cfg, cfg.n_max);
    const auto report = verify_no_exceptional_partition(table, tuples);
    std::cout << (format_of(cfg, "text") == "json" ? to_json(report) : to_text(report));
    return report.pass ? kExitOk : kExitVerificationFailed;
}

int cmd_sun_scan(const RunConfig& cfg) {
    const auto table = table_for(cfg, cfg.n_max);
    const auto hits = sun_direct_scan(table, cfg.n_max, cfg.threads);
    const auto format = format_of(cfg, "text");
    if (format == "json") {
        json doc = json::array();
        for (const auto& h : hits) {
            doc.push_back({{"n", h.n}, {"base", to_decimal(h.witness.base)}, {"exponent", h.witness.exponent}});
        }
        std::cout << json{{"n_max", cfg.n_max}, {"counterexamples", doc}}.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "n,base,exponent\n";
        for (const auto& h : hits) {
            std::cout << h.n << ',' << to_decimal(h.witness.base) << ',' << h.witness.exponent << '\n';
        }
    } else {
        for (const auto& h : hits) {
            std::cout << "p(" << h.n << ") = " << to_decimal(h.witness.base) << '^' << h.witness.exponent << '\n';
        }
        std::cout << hits.size() << " perfect powers among p(2.." << cfg.n_max << ")\n";
    }
    return hits.empty() ? kExitOk : kExitVerificationFailed;
}

int cmd_fit(const RunConfig& cfg, unsigned window, std::optional<unsigned> degree_opt) {
    const auto ks = k_list_or(cfg, {50});
    if (ks.size() != 1) {
        throw UsageError("--k: fit takes a single k");
    }
    const unsigned degree = degree_opt.value_or(window <= 12 ? 3 : 5);
    std::vector<unsigned> exponents(window + 1);
    for (unsigned i = 0; i <= window; ++i) {
        exponents[i] = i;
    }
    const auto table = table_for(cfg, cfg.n_max);
    const auto grid = mk_grid(table, ks, exponents, cfg.n_max, cfg.threads);
    const auto& row = grid.cells.front();
    const auto points = power_of_ten_points(row, window);
    const auto model = fit_mk(points, degree);

    const auto format = format_of(cfg, "json");
    if (format == "json") {
        std::cout << to_json(model);
    } else if (format == "csv") {
        std::cout << "i,M,model\n";
        for (unsigned i = 0; i <= window; ++i) {
            std::cout << i << ',' << row[i] << ',' << evaluate(model, points[i].d) << '\n';
        }
    } else {
        std::cout << "f_" << ks.front() << "(10^" << window << "; d) =";
        for (std::size_t j = model.coefficients.size(); j-- > 0;) {
            std::cout << ' ' << (model.coefficients[j] < 0 ? "- " : "+ ") << std::abs(model.coefficients[j]);
            if (j > 0) {
                std::cout << "*log(d)^" << j;
            }
        }
        std::cout << "\nrms residual " << rms_residual(model, points) << '\n';
    }
    return kExitOk;
}

}  // namespace
}  // namespace partrep::cli

int main(int argc, char** argv) {
    using namespace partrep;
    using namespace partrep::cli;

    CLI::App app{"Exact partition numbers, distances to k-th powers, and their verifiers"};
    app.require_subcommand(1);
    RunConfig cfg;

    app.add_option("--n-max", cfg.n_max, "Largest n considered (default 25000)")->check(CLI::PositiveNumber);
    app.add_option("--k", cfg.k_list, "Comma-separated k values")->delimiter(',');
    app.add_option("--d-exp", cfg.d_exp_specs, "Exponents i (d = 10^i): list or range a..b")->delimiter(',');
    app.add_option("--bs-list", cfg.bs_list, "Exceptional tuple file (\"q alpha y k\" per line)");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
    app.add_option("--cache", cfg.cache, "Partition table cache file");
    app.add_flag("--no-cache", cfg.no_cache, "Do not read or write the table cache");
    app.add_option("--golden", cfg.golden, "Compare CSV output with this file; mismatch exits 1");
    app.add_option("--threads", cfg.threads, "Worker threads (0 = hardware concurrency)");

    Index pn_n = 0;
    bool pn_list = false;
    auto* pn = app.add_subcommand("pn", "Print p(n)");
    pn->add_option("n", pn_n, "Index")->required();
    pn->add_flag("--list", pn_list, "Print p(0..n), one per line");

    Index delta_n = 0;
    auto* delta = app.add_subcommand("delta", "Distance from p(n) to the nearest k-th powers");
    delta->add_option("n", delta_n, "Index")->required();

    auto* t1 = app.add_subcommand("table1", "Delta_k(n) for n = 10..50, k = 2..4");
    auto* t2 = app.add_subcommand("table2", "M_k(d) for d = 0 and 10^0, 10^5, ..., 10^70");
    auto* t3 = app.add_subcommand("table3", "M_k(d) for d = 0..6");

    std::vector<std::string> t4_ds;
    bool t4_all = false;
    auto* t4 = app.add_subcommand("table4", "Stabilization index N_d");
    t4->add_option("--d", t4_ds, "Comma-separated d values (default: range endpoints up to 2534)")->delimiter(',');
    t4->add_flag("--all-ranges", t4_all, "Include the ranges above d = 2534 (slow)");

    auto* fig = app.add_subcommand("figure-data", "(i, M_k(10^i)) coordinate series");

    std::optional<Index> s_n;
    Index s_from = 0;
    Index s_to = 19;
    bool s_all = false;
    auto* s_check = app.add_subcommand("s-check", "x^2 + ell^a certificates for p(n)");
    s_check->add_option("n", s_n, "Single index");
    s_check->add_option("--from", s_from, "First index of a scan");
    s_check->add_option("--to", s_to, "Last index of a scan");
    s_check->add_flag("--all", s_all, "List every witness for a single n");

    std::uint64_t bound = 176;
    auto* missed = app.add_subcommand("missed", "Integers up to a bound with no x^2 + ell^a form");
    missed->add_option("--bound", bound, "Upper bound");

    auto* verify_bs = app.add_subcommand("verify-bs", "Check that no exceptional y^k is a partition number");
    auto* sun_scan = app.add_subcommand("sun-scan", "Search p(2..n_max) for perfect powers");

    unsigned window = 70;
    std::optional<unsigned> degree;
    auto* fit = app.add_subcommand("fit", "Least-squares polynomial in log d through M_k(10^i)");
    fit->add_option("--window", window, "Fit d = 10^0..10^window");
    fit->add_option("--degree", degree, "Polynomial degree (default 3 for window <= 12, else 5)");

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*pn) return cmd_pn(cfg, pn_n, pn_list);
        if (*delta) return cmd_delta(cfg, delta_n);
        if (*t1) return cmd_table1(cfg);
        if (*t2) return cmd_mk_table(cfg, true);
        if (*t3) return cmd_mk_table(cfg, false);
        if (*t4) return cmd_table4(cfg, t4_ds, t4_all);
        if (*fig) return cmd_figure_data(cfg);
        if (*s_check) return cmd_s_check(cfg, s_n, s_from, s_to, s_all);
        if (*missed) return cmd_missed(cfg, bound);
        if (*verify_bs) return cmd_verify_bs(cfg);
        if (*sun_scan) return cmd_sun_scan(cfg);
        if (*fit) return cmd_fit(cfg, window, degree);
    } catch (const UsageError& e) {
        std::cerr << "partrep: " << e.what() << '\n';
        return kExitUsage;
    } catch (const RangeError& e) {
        std::cerr << "partrep: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapacityError& e) {
        std::cerr << "partrep: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "partrep: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
