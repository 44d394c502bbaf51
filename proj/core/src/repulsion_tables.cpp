#include "partrep/repulsion_tables.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include <json.hpp>

#include "partrep/errors.hpp"

namespace partrep {

namespace {

void check_range(const PartitionTable& table, unsigned long k, Index n_max) {
    if (k < 2) {
        throw RangeError("M_k(d) needs k >= 2, got " + std::to_string(k));
    }
    if (n_max < 1) {
        throw RangeError("M_k(d) needs n_max >= 1");
    }
    if (n_max > table.n_max()) {
        throw RangeError("n_max " + std::to_string(n_max) + " exceeds table n_max " + std::to_string(table.n_max()));
    }
}

// Largest n in [0, n_max] with deltas[n] <= d; deltas[1] = 0 bounds the scan.
Index last_within(std::span<const Natural> deltas, const Natural& d) {
    for (Index n = deltas.size() - 1; n > 0; --n) {
        if (deltas[n] <= d) {
            return n;
        }
    }
    return 0;
}

// max{ n <= n_max : p(n) - 1 <= d }, the contribution of the base m = 1.
Index capped_limit(const PartitionTable& table, const Natural& d, Index n_max) {
    const Natural bound = d + 1;
    const auto prefix = table.values().subspan(0, n_max + 1);
    const auto it = std::upper_bound(prefix.begin(), prefix.end(), bound);
    return static_cast<Index>(it - prefix.begin()) - 1;
}

std::vector<Index> batch_by_columns(const PartitionTable& table, unsigned long k, std::span<const Natural> ds,
                                    Index n_max) {
    const auto deltas = delta_column(table, k, n_max);
    std::vector<Index> out;
    out.reserve(ds.size());
    for (const auto& d : ds) {
        out.push_back(last_within(deltas, d));
    }
    return out;
}

std::vector<Index> batch_by_bases(const PartitionTable& table, unsigned long k, std::span<const Natural> ds,
                                  const Natural& d_max, const Natural& base_limit, Index n_max) {
    // Closest distance to any base >= 2, recorded only for n that come within d_max.
    std::map<Index, Natural> near;
    const auto prefix = table.values().subspan(0, n_max + 1);
    Natural target;
    Natural low;
    for (Natural m = 2; m <= base_limit; ++m) {
        mpz_pow_ui(target.get_mpz_t(), m.get_mpz_t(), k);
        low = target - d_max;
        auto it = std::lower_bound(prefix.begin(), prefix.end(), low);
        for (; it != prefix.end(); ++it) {
            Natural distance = *it - target;
            if (distance > d_max) {
                break;
            }
            distance = abs(distance);
            const Index n = static_cast<Index>(it - prefix.begin());
            auto [slot, inserted] = near.try_emplace(n, distance);
            if (!inserted && distance < slot->second) {
                slot->second = std::move(distance);
            }
        }
    }
    std::vector<Index> out;
    out.reserve(ds.size());
    for (const auto& d : ds) {
        Index best = capped_limit(table, d, n_max);
        for (auto it = near.rbegin(); it != near.rend() && it->first > best; ++it) {
            if (it->second <= d) {
                best = it->first;
                break;
            }
        }
        out.push_back(best);
    }
    return out;
}

unsigned resolve_threads(unsigned threads, std::size_t jobs) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));
}

// Runs job(i) for i in [0, count) on a small pool. Each job writes only its own slot.
template <typename Job>
void parallel_for(std::size_t count, unsigned threads, Job&& job) {
    const unsigned workers = resolve_threads(threads, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            job(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count && !failed; i = next++) {
                    try {
                        job(i);
                    } catch (...) {
                        if (!failed.exchange(true)) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace

Index MkGrid::at(unsigned long k, std::size_t column) const {
    const auto it = std::find(k_list.begin(), k_list.end(), k);
    if (it == k_list.end() || column >= d_values.size()) {
        throw RangeError("no grid cell for k=" + std::to_string(k) + ", column " + std::to_string(column));
    }
    return cells[static_cast<std::size_t>(it - k_list.begin())][column];
}

std::vector<Natural> delta_column(const PartitionTable& table, unsigned long k, Index n_max) {
    check_range(table, k, n_max);
    std::vector<Natural> deltas(n_max + 1);
    for (Index n = 0; n <= n_max; ++n) {
        deltas[n] = nearest_kth_power(table[n], k).delta;
    }
    return deltas;
}

Index m_k_d(const PartitionTable& table, const MkQuery& query) {
    check_range(table, query.k, query.n_max);
    for (Index n = query.n_max; n > 1; --n) {
        if (nearest_kth_power(table[n], query.k).delta <= query.d) {
            return n;
        }
    }
    return 1;
}

std::vector<Index> m_k_d_batch(const PartitionTable& table, unsigned long k, std::span<const Natural> ds,
                               Index n_max) {
    check_range(table, k, n_max);
    if (ds.empty()) {
        return {};
    }
    const Natural d_max = *std::max_element(ds.begin(), ds.end());
    const Natural base_limit = floor_kth_root(table[n_max] + d_max, k).root;
    if (base_limit <= n_max) {
        return batch_by_bases(table, k, ds, d_max, base_limit, n_max);
    }
    return batch_by_columns(table, k, ds, n_max);
}

MkGrid mk_table(const PartitionTable& table, std::span<const unsigned long> k_list,
                std::span<const Natural> d_values, Index n_max, unsigned threads) {
    for (auto k : k_list) {
        check_range(table, k, n_max);
    }
    MkGrid grid;
    grid.k_list.assign(k_list.begin(), k_list.end());
    grid.d_values.assign(d_values.begin(), d_values.end());
    grid.n_max = n_max;
    grid.cells.resize(k_list.size());
    parallel_for(k_list.size(), threads,
                 [&](std::size_t row) { grid.cells[row] = m_k_d_batch(table, k_list[row], d_values, n_max); });
    return grid;
}

MkGrid mk_grid(const PartitionTable& table, std::span<const unsigned long> k_list,
               std::span<const unsigned> d_exponents, Index n_max, unsigned threads) {
    std::vector<Natural> d_values;
    d_values.reserve(d_exponents.size());
    for (auto i : d_exponents) {
        d_values.push_back(power_of_ten(i));
    }
    auto grid = mk_table(table, k_list, d_values, n_max, threads);
    grid.d_exponents.assign(d_exponents.begin(), d_exponents.end());
    return grid;
}

Index limit_L(const PartitionTable& table, const Natural& d) {
    if (sgn(d) < 0 || d + 1 >= table[table.n_max()]) {
        throw RangeError("L(d) for d=" + to_decimal(d) + " needs a table with p(n_max) - 1 > d (n_max=" +
                         std::to_string(table.n_max()) + ")");
    }
    return capped_limit(table, d, table.n_max());
}

StabilizationCert stabilization_threshold(const PartitionTable& table, Index n_max) {
    const Natural twice = 2 * table.at(n_max);
    // 2^k >= 2p  <=>  k >= bit_length(2p - 1).
    return {n_max, static_cast<unsigned long>(bit_length(twice - 1))};
}

std::vector<NdResult> n_d_batch(const PartitionTable& table, std::span<const Natural> ds, Index n_max,
                                unsigned threads) {
    if (n_max < 1 || n_max > table.n_max()) {
        throw RangeError("N_d needs 1 <= n_max <= " + std::to_string(table.n_max()));
    }
    const auto cert = stabilization_threshold(table, n_max);
    std::vector<NdResult> results;
    results.reserve(ds.size());
    for (const auto& d : ds) {
        NdResult r;
        r.d = d;
        r.cert = cert;
        if (sgn(d) < 0 || d + 1 >= table[n_max]) {
            throw RangeError("N_d for d=" + to_decimal(d) + " needs p(n_max) - 1 > d (n_max=" +
                             std::to_string(n_max) + ")");
        }
        r.limit = limit_L(table, d);
        results.push_back(std::move(r));
    }

    std::vector<bool> settled(ds.size(), false);
    std::size_t remaining = ds.size();
    // Chunks of consecutive k are evaluated in parallel and then merged top-down.
    const unsigned long chunk = std::max(1u, resolve_threads(threads, 64));
    unsigned long top = cert.k_threshold;
    while (remaining > 0 && top >= 2) {
        const unsigned long bottom = top + 1 > chunk + 2 ? top + 1 - chunk : 2;
        const std::size_t span_len = top - bottom + 1;
        std::vector<std::vector<Index>> rows(span_len);
        parallel_for(span_len, threads, [&](std::size_t i) {
            std::vector<Natural> open;
            for (std::size_t j = 0; j < ds.size(); ++j) {
                open.push_back(settled[j] ? Natural(0) : ds[j]);
            }
            rows[i] = m_k_d_batch(table, top - i, open, n_max);
        });
        for (std::size_t i = 0; i < span_len && remaining > 0; ++i) {
            const unsigned long k = top - i;
            for (std::size_t j = 0; j < ds.size(); ++j) {
                if (!settled[j] && rows[i][j] != results[j].limit) {
                    results[j].n_d = k + 1;
                    settled[j] = true;
                    --remaining;
                }
            }
        }
        if (bottom == 2) {
            break;
        }
        top = bottom - 1;
    }
    return results;
}

NdResult n_d(const PartitionTable& table, const Natural& d, Index n_max) {
    const Natural ds[] = {d};
    return n_d_batch(table, ds, n_max).front();
}

std::vector<unsigned long> default_k_list() { return {2, 3, 4, 5, 6, 7, 8, 50, 100}; }

std::vector<unsigned> default_d_exponents() {
    std::vector<unsigned> out(71);
    for (unsigned i = 0; i <= 70; ++i) {
        out[i] = i;
    }
    return out;
}

std::vector<Table1Row> table1(const PartitionTable& table) {
    std::vector<Table1Row> rows;
    for (Index n : {10, 20, 30, 40, 50}) {
        Table1Row row{n, {}};
        for (unsigned long k : {2, 3, 4}) {
            row.deltas.push_back(delta_k(table, n, k).delta);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

MkGrid table2(const PartitionTable& table, Index n_max, unsigned threads) {
    std::vector<Natural> ds{Natural(0)};
    for (unsigned i = 0; i <= 70; i += 5) {
        ds.push_back(power_of_ten(i));
    }
    const auto ks = default_k_list();
    return mk_table(table, ks, ds, n_max, threads);
}

MkGrid table3(const PartitionTable& table, Index n_max, unsigned threads) {
    std::vector<Natural> ds;
    for (int d = 0; d <= 6; ++d) {
        ds.emplace_back(d);
    }
    const auto ks = default_k_list();
    return mk_table(table, ks, ds, n_max, threads);
}

std::vector<std::pair<unsigned, Index>> figure_series(const MkGrid& grid, unsigned long k) {
    if (grid.d_exponents.size() != grid.d_values.size()) {
        throw std::invalid_argument("figure series needs a grid over d = 10^i");
    }
    std::vector<std::pair<unsigned, Index>> series;
    for (std::size_t col = 0; col < grid.d_exponents.size(); ++col) {
        series.emplace_back(grid.d_exponents[col], grid.at(k, col));
    }
    return series;
}

std::string format_coordinates(std::span<const std::pair<unsigned, Index>> series) {
    std::ostringstream out;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (i != 0) {
            out << ' ';
        }
        out << '(' << series[i].first << ',' << series[i].second << ')';
    }
    return out.str();
}

std::string d_label(const MkGrid& grid, std::size_t column) {
    if (grid.d_exponents.size() == grid.d_values.size()) {
        return std::to_string(grid.d_exponents[column]);
    }
    return to_decimal(grid.d_values[column]);
}

std::string grid_to_csv(const MkGrid& grid) {
    const bool exponents = grid.d_exponents.size() == grid.d_values.size();
    std::ostringstream out;
    out << (exponents ? "i" : "d");
    for (auto k : grid.k_list) {
        out << ',' << k;
    }
    out << '\n';
    for (std::size_t col = 0; col < grid.d_values.size(); ++col) {
        out << d_label(grid, col);
        for (std::size_t row = 0; row < grid.k_list.size(); ++row) {
            out << ',' << grid.cells[row][col];
        }
        out << '\n';
    }
    return out.str();
}

std::string grid_to_json(const MkGrid& grid) {
    nlohmann::ordered_json doc;
    doc["n_max"] = grid.n_max;
    doc["k"] = grid.k_list;
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t col = 0; col < grid.d_values.size(); ++col) {
        nlohmann::ordered_json row;
        if (grid.d_exponents.size() == grid.d_values.size()) {
            row["i"] = grid.d_exponents[col];
        }
        // d can exceed 64 bits; keep it as an exact decimal string.
        row["d"] = to_decimal(grid.d_values[col]);
        auto values = nlohmann::ordered_json::array();
        for (std::size_t r = 0; r < grid.k_list.size(); ++r) {
            values.push_back(grid.cells[r][col]);
        }
        row["M"] = std::move(values);
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

}  // namespace partrep
