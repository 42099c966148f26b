#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kcbg/constructions.hpp"
#include "kcbg/criticality.hpp"

namespace kcbg {

struct SweepOptions {
    int n_min = 3;
    int n_max = 8;
    int m_min = 2;
    int m_max = 0;  // 0 = up to n - 1 for each n
    std::vector<Family> families = {Family::bar};
    int jobs = 1;
    bool timings = false;        // append wall-clock columns (not byte-stable)
    int bruteforce_cap_n = 14;   // above this the bruteforce column is skipped
    int hall_cap_m = 24;         // above this the hall column is skipped
    Budget budget;
};

struct SweepRow {
    int n = 0;
    int m = 0;
    int k = 0;
    Family family = Family::bar;
    std::string status = "ok";  // errc name when the family rejects (n, m)
    long long edge_count = 0;
    int Delta_U = 0, delta_U = 0, Delta_V = 0, delta_V = 0;
    std::optional<bool> kcb_bruteforce, kcb_hall, kcb_fast;
    std::optional<int> kappa, kappa_U, kappa_V;
    long long work_bruteforce = 0, work_hall = 0, work_fast = 0;
    double t_bruteforce_ms = 0, t_hall_ms = 0, t_fast_ms = 0;
};

// One row per (n, m, family), ordered by n, then m, then family. Families use
// fixed derived parameters; kappa_tuned is not sweepable. Rows
// are computed in parallel when jobs > 1; output order is deterministic.
std::vector<SweepRow> run_sweep(const SweepOptions& options);

// Fixed header; verdict cells are true/false/skip, metric cells empty when
// the row's status is not ok. Byte-stable unless timings is set.
std::string sweep_csv(const std::vector<SweepRow>& rows, bool timings = false);

}  // namespace kcbg
