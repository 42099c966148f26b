#include "kcbg/constructions.hpp"

#include <numeric>

#include "kcbg/numeric.hpp"

namespace kcbg {

namespace {

void require_order(int n, int m) {
    if (!(n > m && m > 1)) {
        fail(errc::invalid_order,
             "(" + std::to_string(n) + ", " + std::to_string(m) + ") needs n > m > 1");
    }
}

int mod(long long a, int modulus) {
    long long r = a % modulus;
    if (r < 0) r += modulus;
    return static_cast<int>(r);
}

}  // namespace

Family family_from_string(const std::string& name) {
    if (name == "hat") return Family::hat;
    if (name == "bar") return Family::bar;
    if (name == "check") return Family::check;
    if (name == "dot") return Family::dot;
    if (name == "ddot") return Family::ddot;
    if (name == "tripledot") return Family::tripledot;
    if (name == "star") return Family::star;
    if (name == "kappa_tuned") return Family::kappa_tuned;
    if (name == "complete") return Family::complete;
    fail(errc::parse_error, "unknown family '" + name + "'");
}

const char* family_name(Family f) {
    switch (f) {
        case Family::hat: return "hat";
        case Family::bar: return "bar";
        case Family::check: return "check";
        case Family::dot: return "dot";
        case Family::ddot: return "ddot";
        case Family::tripledot: return "tripledot";
        case Family::star: return "star";
        case Family::kappa_tuned: return "kappa_tuned";
        case Family::complete: return "complete";
    }
    return "?";
}

BipartiteGraph hat_g(int n, int m, int a) {
    require_order(n, m);
    if (a < 1 || a > m) {
        fail(errc::invalid_a, "a = " + std::to_string(a) + " not in [1, " + std::to_string(m) + "]");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * a);
    for (int i = 0; i < n; ++i) {
        long long j = ceil_div(static_cast<long long>(i) * m, n);
        for (int alpha = 0; alpha < a; ++alpha) {
            edges.emplace_back(i, mod(j + alpha, m));
        }
    }
    return BipartiteGraph(n, m, std::move(edges));
}

BipartiteGraph bar_g(int n, int m) {
    require_order(n, m);
    int k = n - m;
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m) * (k + 1));
    for (int j = 0; j < m; ++j) {
        long long i = floor_div(static_cast<long long>(j) * n, m);
        for (int beta = 0; beta <= k; ++beta) {
            edges.emplace_back(mod(i - beta, n), j);
        }
    }
    return BipartiteGraph(n, m, std::move(edges));
}

BipartiteGraph check_g(int n, int m) {
    require_order(n, m);
    long long num = static_cast<long long>(n - m + 1) * m;
    if (num % n != 0) {
        fail(errc::not_integer_a, "a = " + std::to_string(num) + "/" + std::to_string(n) +
                                      " not an integer");
    }
    int a = static_cast<int>(num / n);
    int c = std::gcd(n, m);
    int x = n / c;
    int y = m / c;
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * a);
    for (int i = 0; i < n; ++i) {
        long long j = static_cast<long long>(i / x) * y;
        for (int alpha = 0; alpha < a; ++alpha) {
            edges.emplace_back(i, mod(j + alpha, m));
        }
    }
    return BipartiteGraph(n, m, std::move(edges));
}

BipartiteGraph dot_g(int x, int y, int b) {
    DegreeProfile profile = degree_profile(x, y, b);
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(y) * b);
    for (int i = 0; i < x; ++i) {
        for (int pi = 0; pi < profile.P[i]; ++pi) {
            edges.emplace_back(i, mod(profile.D[i] + pi, y));
        }
    }
    return BipartiteGraph(x, y, std::move(edges));
}

BipartiteGraph ddot_g(int x, int y, int b) {
    if (x < 1 || y < 1 || b < 1 || b > x) {
        fail(errc::invalid_profile_args,
             "(" + std::to_string(x) + ", " + std::to_string(y) + ", " + std::to_string(b) +
                 ") needs x, y >= 1 and 1 <= b <= x");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(y) * b);
    for (int j = 0; j < y; ++j) {
        for (int beta = 0; beta < b; ++beta) {
            edges.emplace_back(mod(static_cast<long long>(j) * b + beta, x), j);
        }
    }
    return BipartiteGraph(x, y, std::move(edges));
}

BipartiteGraph tripledot_g(int n, int m, int c) {
    require_order(n, m);
    if (c <= 1 || n % c != 0 || m % c != 0) {
        fail(errc::invalid_c,
             "c = " + std::to_string(c) + " must exceed 1 and divide both n and m");
    }
    int x = n / c;
    int y = m / c;
    int b = n - m + 1;
    if (b > x) {
        fail(errc::invalid_c, "k+1 = " + std::to_string(b) + " exceeds n/c = " + std::to_string(x));
    }
    if (y < 2) {
        fail(errc::invalid_c, "m/c = " + std::to_string(y) + " leaves no room for the copies");
    }
    BipartiteGraph copy = dot_g(x, y, b);
    std::vector<Edge> edges;
    edges.reserve(copy.edges().size() * c);
    for (int t = 0; t < c; ++t) {
        for (const Edge& e : copy.edges()) {
            edges.emplace_back(t * x + e.first, t * y + e.second);
        }
    }
    return BipartiteGraph(n, m, std::move(edges));
}

BipartiteGraph star_g(int n, int m) {
    require_order(n, m);
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m) * (n - m + 1));
    for (int i = 0; i < m; ++i) edges.emplace_back(i, i);
    for (int i = m; i < n; ++i) {
        for (int j = 0; j < m; ++j) edges.emplace_back(i, j);
    }
    return BipartiteGraph(n, m, std::move(edges));
}

BipartiteGraph kappa_tuned_g(int n, int m, int kappa) {
    require_order(n, m);
    if (kappa < 1 || kappa > m) {
        fail(errc::invalid_kappa,
             "kappa = " + std::to_string(kappa) + " not in [1, " + std::to_string(m) + "]");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * m - (m - kappa));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == 0 && j < m - kappa) continue;
            edges.emplace_back(i, j);
        }
    }
    return BipartiteGraph(n, m, std::move(edges));
}

BipartiteGraph complete_g(int n, int m) {
    if (n < 1 || m < 1) {
        fail(errc::invalid_order, "complete graph needs n, m >= 1");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * m);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) edges.emplace_back(i, j);
    }
    return BipartiteGraph(n, m, std::move(edges));
}

BipartiteGraph construct(const ConstructionSpec& spec) {
    int n = spec.n, m = spec.m;
    switch (spec.family) {
        case Family::hat: {
            int a = spec.a ? *spec.a
                           : static_cast<int>(ceil_div(static_cast<long long>(m) * (n - m + 1), n));
            return hat_g(n, m, a);
        }
        case Family::bar: return bar_g(n, m);
        case Family::check: return check_g(n, m);
        case Family::dot: return dot_g(n, m, spec.b ? *spec.b : n - m + 1);
        case Family::ddot: return ddot_g(n, m, spec.b ? *spec.b : n - m + 1);
        case Family::tripledot:
            if (!spec.c) fail(errc::invalid_c, "tripledot needs an explicit c");
            return tripledot_g(n, m, *spec.c);
        case Family::star: return star_g(n, m);
        case Family::kappa_tuned:
            if (!spec.kappa) fail(errc::invalid_kappa, "kappa_tuned needs an explicit kappa");
            return kappa_tuned_g(n, m, *spec.kappa);
        case Family::complete: return complete_g(n, m);
    }
    fail(errc::parse_error, "unknown family");
}

}  // namespace kcbg
