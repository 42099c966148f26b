#pragma once

#include <optional>
#include <vector>

#include "kcbg/bigraph.hpp"
#include "kcbg/matching.hpp"

namespace kcbg {

// Directed graph produced by matching contraction (and synthetic test
// digraphs). Arcs are deduplicated and kept sorted; contracted_from maps a
// vertex back to the matched (u, v) pair it stands for, when applicable.
struct Digraph {
    int order = 0;
    std::vector<std::pair<int, int>> arcs;
    std::vector<Edge> contracted_from;
    bool has_arc(int a, int b) const;
};

Digraph make_digraph(int order, std::vector<std::pair<int, int>> arcs);

// Smallest vertex cut separating two distinct nonadjacent vertices, by
// node-split max-flow; 0 when they sit in different components.
int local_connectivity(const BipartiteGraph& g, VertexRef x, VertexRef y);

// Set connectivity: min over pairs in S of local_connectivity. All pairs in
// S must be nonadjacent (always true for S = U or S = V).
int kappa_set(const BipartiteGraph& g, const std::vector<VertexRef>& S);

inline std::vector<VertexRef> u_class(const BipartiteGraph& g) {
    std::vector<VertexRef> s;
    for (int i = 0; i < g.n(); ++i) s.push_back({Side::U, i});
    return s;
}

inline std::vector<VertexRef> v_class(const BipartiteGraph& g) {
    std::vector<VertexRef> s;
    for (int j = 0; j < g.m(); ++j) s.push_back({Side::V, j});
    return s;
}

// Global vertex connectivity: min local connectivity over all nonadjacent
// pairs. K_{1,1} has no such pair and is rejected.
int kappa(const BipartiteGraph& g);

// Directs every edge U -> V and contracts the perfect matching M; parallel
// arcs collapse. M must be a perfect matching of g (equal class sizes).
Digraph contract_matching(const BipartiteGraph& g, const Matching& M);

struct StrongConnectivityCheck {
    bool ok = false;
    long long flow_calls = 0;
};

// True iff d stays strongly connected after deleting any fewer than k
// vertices; needs more than k vertices. Full sweep of non-arc ordered pairs,
// each bounded min-cut >= k.
StrongConnectivityCheck check_strongly_k_connected(const Digraph& d, int k);

inline bool strongly_k_connected(const Digraph& d, int k) {
    return check_strongly_k_connected(d, k).ok;
}

struct ConnectivityReport {
    int kappa = 0;
    int kappa_U = 0;
    int kappa_V = 0;
    DegreeStats degrees;
    int components = 1;
    bool kappaV_bound_ok = false;  // kappa_V >= k
    bool kappaU_bound_ok = false;  // kappa_U >= min(delta_U, k)
    bool kappa_bound_ok = false;   // kappa >= min(delta, k)
    // every separator smaller than k leaves some u in U with N(u) inside it;
    // checked exhaustively when n + m <= 16, absent otherwise
    std::optional<bool> small_separator_isolates_u;
};

// Requires a k-critical-bipartite input with n > m > 1 (verified internally).
ConnectivityReport check_connectivity_bounds(const BipartiteGraph& g);

}  // namespace kcbg
