#pragma once

#include <optional>
#include <string>

#include "kcbg/bigraph.hpp"

namespace kcbg {

// Every generated family. hat/bar are the minimum positive constructions,
// check/dot/ddot/tripledot the negative families with matching degree data,
// star the minimal-but-not-minimum baseline, kappa_tuned the connectivity
// dial, complete the trivial upper baseline.
enum class Family { hat, bar, check, dot, ddot, tripledot, star, kappa_tuned, complete };

Family family_from_string(const std::string& name);
const char* family_name(Family f);

// U-vertex u_i gets the a cyclically consecutive V-neighbors starting at
// ceil(im/n). Requires n > m > 1 and 1 <= a <= m.
BipartiteGraph hat_g(int n, int m, int a);

// V-vertex v_j gets the k+1 cyclically consecutive U-neighbors ending at
// floor(jn/m), k = n - m. The minimum k-critical-bipartite construction.
BipartiteGraph bar_g(int n, int m);

// The biregular blow-up family: requires a = (n-m+1)m/n to be an integer;
// u_i attaches to the a consecutive V-indices starting at floor(i/x)*y where
// x = n/gcd(n,m), y = m/gcd(n,m).
BipartiteGraph check_g(int n, int m);

// Realization of the (P, Q) profile laid out by prefix-sum offsets:
// N(u_i) = { (D_i + pi) mod y : pi in [p_i] }. Requires x > y > 1, 1 <= b <= x.
BipartiteGraph dot_g(int x, int y, int b);

// Realization of the same profile from the V side:
// N(v_j) = { (jb + beta) mod x : beta in [b] }. Requires 1 <= b <= x.
BipartiteGraph ddot_g(int x, int y, int b);

// Disjoint union of c copies of dot_g(n/c, m/c, k+1). Requires c > 1 dividing
// both n and m with k+1 <= n/c.
BipartiteGraph tripledot_g(int n, int m, int c);

// Matching of size m plus k = n - m universal U-vertices. Edge-minimal
// k-critical-bipartite but not minimum (Delta_U = m).
BipartiteGraph star_g(int n, int m);

// K_{n,m} minus (m - kappa) edges at u_0: k-critical-bipartite with vertex
// connectivity exactly kappa. Requires 1 <= kappa <= m.
BipartiteGraph kappa_tuned_g(int n, int m, int kappa);

BipartiteGraph complete_g(int n, int m);

struct ConstructionSpec {
    Family family = Family::bar;
    int n = 0;
    int m = 0;
    std::optional<int> a;      // hat
    std::optional<int> b;      // dot, ddot
    std::optional<int> c;      // tripledot
    std::optional<int> kappa;  // kappa_tuned
};

// Dispatches on family. hat defaults a to ceil(m(k+1)/n) and dot/ddot default
// b to k+1 (the reference parameterizations); tripledot and kappa_tuned
// require their parameter.
BipartiteGraph construct(const ConstructionSpec& spec);

}  // namespace kcbg
