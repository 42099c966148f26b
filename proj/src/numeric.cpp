#include "kcbg/numeric.hpp"

#include <algorithm>
#include <numeric>

namespace kcbg {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long ceil_div(long long a, long long b) {
    return -floor_div(-a, b);
}

namespace {

void check_order(int n, int m, int j) {
    if (!(n > m && m > 1)) {
        fail(errc::invalid_order,
             "(" + std::to_string(n) + ", " + std::to_string(m) + ") needs n > m > 1");
    }
    if (j < 0 || j >= m) {
        fail(errc::invalid_order, "j = " + std::to_string(j) + " not in [0, " + std::to_string(m) + ")");
    }
}

}  // namespace

int count_solutions(int n, int m, int j) {
    check_order(n, m, j);
    return static_cast<int>(floor_div(static_cast<long long>(j) * n, m) -
                            floor_div(static_cast<long long>(j - 1) * n, m));
}

int max_solution_index(int n, int m, int j) {
    check_order(n, m, j);
    return static_cast<int>(floor_div(static_cast<long long>(j) * n, m));
}

DegreeProfile degree_profile(int x, int y, int b) {
    if (!(x > y && y > 1)) {
        fail(errc::invalid_profile_args,
             "(" + std::to_string(x) + ", " + std::to_string(y) + ") needs x > y > 1");
    }
    if (b < 1 || b > x) {
        fail(errc::invalid_profile_args,
             "b = " + std::to_string(b) + " not in [1, " + std::to_string(x) + "]");
    }
    DegreeProfile p;
    p.x = x;
    p.y = y;
    p.b = b;
    long long yb = static_cast<long long>(y) * b;
    long long lo = yb / x;
    p.l = static_cast<int>(yb - x * lo);
    p.P.assign(x, static_cast<int>(lo));
    for (int i = 0; i < p.l; ++i) p.P[i] = static_cast<int>(lo) + 1;
    p.Q.assign(y, b);
    p.D.assign(x, 0);
    long long prefix = 0;
    for (int i = 1; i < x; ++i) {
        prefix += p.P[i - 1];
        p.D[i] = static_cast<int>(prefix % y);
    }
    return p;
}

BigraphicResult is_bigraphic(const std::vector<int>& P, const std::vector<int>& Q) {
    for (const std::vector<int>* seq : {&P, &Q}) {
        for (size_t t = 0; t < seq->size(); ++t) {
            if ((*seq)[t] < 0) {
                fail(errc::invalid_profile_args, "degree sequences must be non-negative");
            }
            if (t > 0 && (*seq)[t] > (*seq)[t - 1]) {
                fail(errc::not_sorted, "degree sequence is not non-increasing");
            }
        }
    }
    BigraphicResult result;
    long long sum_p = std::accumulate(P.begin(), P.end(), 0LL);
    long long sum_q = std::accumulate(Q.begin(), Q.end(), 0LL);
    if (sum_p != sum_q) return result;

    // remaining Q degrees with original indices; P is consumed in input order
    // (it is sorted, and the reduction never modifies it)
    std::vector<std::pair<int, int>> rem(Q.size());
    for (size_t j = 0; j < Q.size(); ++j) rem[j] = {Q[j], static_cast<int>(j)};
    std::vector<Edge> edges;
    for (size_t i = 0; i < P.size(); ++i) {
        int p = P[i];
        if (p == 0) continue;
        if (p > static_cast<int>(rem.size())) return result;
        std::sort(rem.begin(), rem.end(),
                  [](const auto& a, const auto& b) {
                      if (a.first != b.first) return a.first > b.first;
                      return a.second < b.second;
                  });
        if (rem[p - 1].first == 0) return result;
        for (int t = 0; t < p; ++t) {
            --rem[t].first;
            edges.emplace_back(static_cast<int>(i), rem[t].second);
        }
    }
    result.bigraphic = true;
    std::sort(edges.begin(), edges.end());
    result.realization = std::move(edges);
    return result;
}

}  // namespace kcbg
