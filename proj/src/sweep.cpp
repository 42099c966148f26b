#include "kcbg/sweep.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "kcbg/connectivity.hpp"

namespace kcbg {

namespace {

std::optional<int> smallest_tripledot_c(int n, int m) {
    for (int c = 2; c <= m; ++c) {
        if (n % c != 0 || m % c != 0) continue;
        if (n - m + 1 <= n / c && m / c >= 2) return c;
    }
    return std::nullopt;
}

std::optional<BipartiteGraph> build_for_row(SweepRow& row) {
    ConstructionSpec spec;
    spec.family = row.family;
    spec.n = row.n;
    spec.m = row.m;
    if (row.family == Family::tripledot) {
        std::optional<int> c = smallest_tripledot_c(row.n, row.m);
        if (!c) {
            row.status = errc_name(errc::invalid_c);
            return std::nullopt;
        }
        spec.c = c;
    }
    try {
        return construct(spec);
    } catch (const Error& e) {
        row.status = errc_name(e.code());
        return std::nullopt;
    }
}

void fill_row(SweepRow& row, const SweepOptions& options) {
    std::optional<BipartiteGraph> g = build_for_row(row);
    if (!g) return;
    DegreeStats stats = degree_stats(*g);
    row.edge_count = stats.edge_count;
    row.Delta_U = stats.Delta_U;
    row.delta_U = stats.delta_U;
    row.Delta_V = stats.Delta_V;
    row.delta_V = stats.delta_V;

    if (row.n <= options.bruteforce_cap_n) {
        VerifyReport r = is_kcb_bruteforce(*g, options.budget);
        row.kcb_bruteforce = r.verdict;
        row.work_bruteforce = r.work;
        row.t_bruteforce_ms = r.wall_ms;
    }
    if (row.m <= options.hall_cap_m) {
        VerifyReport r = is_kcb_hall(*g, options.budget);
        row.kcb_hall = r.verdict;
        row.work_hall = r.work;
        row.t_hall_ms = r.wall_ms;
    }
    {
        VerifyReport r = is_kcb_fast(*g);
        row.kcb_fast = r.verdict;
        row.work_fast = r.work;
        row.t_fast_ms = r.wall_ms;
    }
    row.kappa = kappa(*g);
    if (g->n() >= 2) row.kappa_U = kappa_set(*g, u_class(*g));
    if (g->m() >= 2) row.kappa_V = kappa_set(*g, v_class(*g));
}

void fill_row_guarded(SweepRow& row, const SweepOptions& options) {
    try {
        fill_row(row, options);
    } catch (const Error& e) {
        row.status = errc_name(e.code());
    }
}

std::string opt_bool_cell(const std::optional<bool>& v) {
    if (!v) return "skip";
    return *v ? "true" : "false";
}

std::string opt_int_cell(const std::optional<int>& v) {
    return v ? std::to_string(*v) : "";
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepOptions& options) {
    for (Family f : options.families) {
        if (f == Family::kappa_tuned) {
            fail(errc::invalid_kappa, "kappa_tuned has no per-(n, m) parameter; sweep refuses it");
        }
    }
    std::vector<SweepRow> rows;
    for (int n = options.n_min; n <= options.n_max; ++n) {
        int m_hi = options.m_max > 0 ? std::min(options.m_max, n - 1) : n - 1;
        for (int m = options.m_min; m <= m_hi; ++m) {
            for (Family f : options.families) {
                SweepRow row;
                row.n = n;
                row.m = m;
                row.k = n - m;
                row.family = f;
                rows.push_back(row);
            }
        }
    }
    int jobs = std::max(1, options.jobs);
    if (jobs == 1 || rows.size() <= 1) {
        for (SweepRow& row : rows) fill_row_guarded(row, options);
        return rows;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                size_t idx = next.fetch_add(1);
                if (idx >= rows.size()) return;
                fill_row_guarded(rows[idx], options);
            }
        });
    }
    for (std::thread& t : pool) t.join();
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, bool timings) {
    std::ostringstream out;
    out << "n,m,k,family,status,edge_count,Delta_U,delta_U,Delta_V,delta_V,"
           "kcb_bruteforce,kcb_hall,kcb_fast,kappa,kappa_U,kappa_V,"
           "work_bruteforce,work_hall,work_fast";
    if (timings) out << ",t_bruteforce_ms,t_hall_ms,t_fast_ms";
    out << '\n';
    for (const SweepRow& row : rows) {
        out << row.n << ',' << row.m << ',' << row.k << ',' << family_name(row.family) << ','
            << row.status << ',';
        if (row.status == "ok") {
            out << row.edge_count << ',' << row.Delta_U << ',' << row.delta_U << ','
                << row.Delta_V << ',' << row.delta_V << ',' << opt_bool_cell(row.kcb_bruteforce)
                << ',' << opt_bool_cell(row.kcb_hall) << ',' << opt_bool_cell(row.kcb_fast) << ','
                << opt_int_cell(row.kappa) << ',' << opt_int_cell(row.kappa_U) << ','
                << opt_int_cell(row.kappa_V) << ',' << row.work_bruteforce << ',' << row.work_hall
                << ',' << row.work_fast;
        } else {
            out << ",,,,,,,,,,,,,";
        }
        if (timings) {
            out << ',' << row.t_bruteforce_ms << ',' << row.t_hall_ms << ',' << row.t_fast_ms;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace kcbg
