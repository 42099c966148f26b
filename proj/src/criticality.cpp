#include "kcbg/criticality.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <climits>
#include <numeric>

#include "kcbg/connectivity.hpp"
#include "kcbg/matching.hpp"
#include "kcbg/numeric.hpp"

namespace kcbg {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_surplus(const BipartiteGraph& g) {
    if (!(g.n() > g.m() && g.m() >= 1)) {
        fail(errc::invalid_order, "(" + std::to_string(g.n()) + ", " + std::to_string(g.m()) +
                                      ") needs n > m >= 1");
    }
}

// lexicographically next k-combination of [n]; false when exhausted
bool next_combination(std::vector<int>& comb, int n) {
    int k = static_cast<int>(comb.size());
    int t = k - 1;
    while (t >= 0 && comb[t] == n - k + t) --t;
    if (t < 0) return false;
    ++comb[t];
    for (int s = t + 1; s < k; ++s) comb[s] = comb[s - 1] + 1;
    return true;
}

// among equal-cardinality subsets: the one owning the lowest differing index
// comes first in index-sequence order
bool lex_less_mask(unsigned long long a, unsigned long long b) {
    unsigned long long d = a ^ b;
    if (d == 0) return false;
    return (a & (d & ~(d - 1))) != 0;
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::bruteforce: return "bruteforce";
        case Method::hall: return "hall";
        case Method::fast: return "fast";
    }
    return "?";
}

long long binom_clamped(int n, int k, long long cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long result = 1;
    for (int t = 1; t <= k; ++t) {
        if (result > cap / (n - k + t)) return cap;
        result = result * (n - k + t) / t;
        if (result >= cap) return cap;
    }
    return result;
}

VerifyReport is_kcb_bruteforce(const BipartiteGraph& g, Budget budget) {
    auto start = Clock::now();
    require_surplus(g);
    int n = g.n(), m = g.m(), k = n - m;
    long long cap = budget.subsets > 0 ? budget.subsets : kDefaultSubsetBudget;
    long long total = binom_clamped(n, k, LLONG_MAX / 4);
    if (total > cap && !budget.force) {
        fail(errc::budget_exceeded, "C(" + std::to_string(n) + ", " + std::to_string(k) + ") = " +
                                        std::to_string(total) + " fault sets exceed budget " +
                                        std::to_string(cap));
    }
    VerifyReport r;
    r.method = Method::bruteforce;
    r.verdict = true;
    MatchingSolver solver(g);
    std::vector<char> deleted(n, 0);
    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    do {
        ++r.work;
        for (int u : comb) deleted[u] = 1;
        bool complete = solver.max_size(deleted, {}) == m;
        for (int u : comb) deleted[u] = 0;
        if (!complete) {
            r.verdict = false;
            r.witness = FaultSetWitness{comb};
            break;
        }
    } while (next_combination(comb, n));
    r.wall_ms = elapsed_ms(start);
    return r;
}

VerifyReport is_kcb_hall(const BipartiteGraph& g, Budget budget) {
    auto start = Clock::now();
    require_surplus(g);
    int n = g.n(), m = g.m(), k = n - m;
    if (n > 64 || m > 62) {
        fail(errc::budget_exceeded, "hall enumeration supports n <= 64 and m <= 62");
    }
    long long cap = budget.subsets > 0 ? budget.subsets : kDefaultHallBudget;
    long long total = (1LL << m) - 1;
    if (total > cap && !budget.force) {
        fail(errc::budget_exceeded, "2^" + std::to_string(m) + " - 1 = " + std::to_string(total) +
                                        " subsets exceed budget " + std::to_string(cap));
    }
    std::vector<unsigned long long> nbr(m, 0);
    for (int j = 0; j < m; ++j) {
        for (int i : g.neighbors_of_v(j)) nbr[j] |= 1ULL << i;
    }
    VerifyReport r;
    r.method = Method::hall;
    int best_surplus = INT_MAX;
    int best_pop = INT_MAX;
    unsigned long long best_mask = 0;
    for (unsigned long long mask = 1; mask <= static_cast<unsigned long long>(total); ++mask) {
        ++r.work;
        unsigned long long hood = 0;
        for (unsigned long long rest = mask; rest;) {
            unsigned long long low = rest & ~(rest - 1);
            hood |= nbr[std::countr_zero(rest)];
            rest ^= low;
        }
        int pop = std::popcount(mask);
        int surplus = std::popcount(hood) - pop;
        if (surplus < best_surplus ||
            (surplus == best_surplus &&
             (pop < best_pop || (pop == best_pop && lex_less_mask(mask, best_mask))))) {
            best_surplus = surplus;
            best_pop = pop;
            best_mask = mask;
        }
    }
    r.verdict = best_surplus >= k;
    if (!r.verdict) {
        HallWitness w;
        for (int j = 0; j < m; ++j) {
            if (best_mask & (1ULL << j)) w.v_vertices.push_back(j);
        }
        r.witness = std::move(w);
    }
    r.wall_ms = elapsed_ms(start);
    return r;
}

std::optional<std::vector<int>> find_hall_violator(const BipartiteGraph& g) {
    int n = g.n(), m = g.m(), k = n - m;
    if (k < 0) {
        fail(errc::invalid_order, "violator search needs n >= m");
    }
    int vtotal = m + k;  // V plus k clones of the probe vertex
    std::vector<int> match_u(n), match_v(vtotal);
    std::vector<char> visited_u(n);
    for (int probe = 0; probe < m; ++probe) {
        auto source_of = [&](int w) { return w < m ? w : probe; };
        std::fill(match_u.begin(), match_u.end(), -1);
        std::fill(match_v.begin(), match_v.end(), -1);
        auto augment = [&](auto&& self, int w) -> bool {
            for (int u : g.neighbors_of_v(source_of(w))) {
                if (visited_u[u]) continue;
                visited_u[u] = 1;
                if (match_u[u] < 0 || self(self, match_u[u])) {
                    match_u[u] = w;
                    match_v[w] = u;
                    return true;
                }
            }
            return false;
        };
        int size = 0;
        for (int w = 0; w < vtotal; ++w) {
            std::fill(visited_u.begin(), visited_u.end(), 0);
            if (augment(augment, w)) ++size;
        }
        if (size == vtotal) continue;

        // deficiency set: alternating reachability from the first unmatched
        // V-side vertex; its neighborhood is one short of its size
        int w0 = 0;
        while (match_v[w0] >= 0) ++w0;
        std::vector<char> in_set(vtotal, 0), u_seen(n, 0);
        std::vector<int> frontier = {w0};
        in_set[w0] = 1;
        while (!frontier.empty()) {
            int w = frontier.back();
            frontier.pop_back();
            for (int u : g.neighbors_of_v(source_of(w))) {
                if (u_seen[u]) continue;
                u_seen[u] = 1;
                int w2 = match_u[u];
                if (w2 >= 0 && !in_set[w2]) {
                    in_set[w2] = 1;
                    frontier.push_back(w2);
                }
            }
        }
        std::vector<int> violator;
        for (int w = 0; w < vtotal; ++w) {
            if (in_set[w]) violator.push_back(source_of(w));
        }
        std::sort(violator.begin(), violator.end());
        violator.erase(std::unique(violator.begin(), violator.end()), violator.end());
        return violator;
    }
    return std::nullopt;
}

VerifyReport is_kcb_fast(const BipartiteGraph& g) {
    auto start = Clock::now();
    require_surplus(g);
    int k = g.n() - g.m();
    VerifyReport r;
    r.method = Method::fast;
    ++r.work;  // connectivity prefilter
    if (component_count(g).count != 1) {
        r.verdict = false;  // a k-critical-bipartite graph is connected
    } else {
        BipartiteGraph tilde = build_tilde(g);
        MatchingSolver solver(tilde);
        ++r.work;
        if (solver.max_size() < tilde.m()) {
            r.verdict = false;
        } else {
            Digraph d = contract_matching(tilde, solver.extract());
            StrongConnectivityCheck sc = check_strongly_k_connected(d, k);
            r.work += sc.flow_calls;
            r.verdict = sc.ok;
        }
    }
    if (!r.verdict) {
        std::optional<std::vector<int>> violator = find_hall_violator(g);
        assert(violator.has_value());
        if (violator) r.witness = HallWitness{*violator};
    }
    r.wall_ms = elapsed_ms(start);
    return r;
}

bool is_k_extendable(const BipartiteGraph& g, int k, Budget budget) {
    if (g.n() != g.m()) {
        fail(errc::unequal_classes, "extendability needs equal class sizes, got (" +
                                        std::to_string(g.n()) + ", " + std::to_string(g.m()) + ")");
    }
    int N = g.n();
    if (k < 0 || k > (2 * N - 2) / 2) {
        fail(errc::invalid_order, "k = " + std::to_string(k) + " not in [0, " +
                                      std::to_string((2 * N - 2) / 2) + "]");
    }
    long long cap = budget.subsets > 0 ? budget.subsets : kDefaultSubsetBudget;
    long long combos = binom_clamped(N, k, LLONG_MAX / 4);
    if (combos > cap / std::max(combos, 1LL) && !budget.force) {
        fail(errc::budget_exceeded,
             "C(" + std::to_string(N) + ", " + std::to_string(k) + ")^2 exceeds budget");
    }
    MatchingSolver solver(g);
    std::vector<char> du(N, 0), dv(N, 0);
    std::vector<int> cu(k), cv(k);
    std::iota(cu.begin(), cu.end(), 0);
    do {
        for (int u : cu) du[u] = 1;
        std::iota(cv.begin(), cv.end(), 0);
        bool ok = true;
        do {
            for (int v : cv) dv[v] = 1;
            ok = solver.max_size(du, dv) == N - k;
            for (int v : cv) dv[v] = 0;
            if (!ok) break;
        } while (next_combination(cv, N));
        for (int u : cu) du[u] = 0;
        if (!ok) return false;
    } while (next_combination(cu, N));
    return true;
}

MinimumCheck is_minimum_kcb(const BipartiteGraph& g) {
    if (!(g.n() > g.m() && g.m() > 1)) {
        fail(errc::invalid_order, "minimum check needs n > m > 1");
    }
    int n = g.n(), m = g.m(), k = n - m;
    MinimumCheck c;
    c.stats = degree_stats(g);
    c.kcb = is_kcb_fast(g).verdict;
    long long optimal_edges = static_cast<long long>(m) * (k + 1);
    int optimal_du = static_cast<int>(ceil_div(optimal_edges, n));
    c.minimum = c.kcb && c.stats.edge_count == optimal_edges && c.stats.Delta_U == optimal_du &&
                c.stats.Delta_V == k + 1;
    return c;
}

bool is_edge_minimal_kcb(const BipartiteGraph& g) {
    if (!is_kcb_fast(g).verdict) {
        fail(errc::not_kcb, "edge minimality is defined on k-critical-bipartite graphs");
    }
    for (const Edge& e : g.edges()) {
        if (is_kcb_fast(remove_edge(g, e)).verdict) return false;
    }
    return true;
}

}  // namespace kcbg
