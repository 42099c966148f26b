#include "kcbg/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "kcbg/criticality.hpp"

namespace kcbg {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 2;

// Dinic with an early-exit limit; all the networks here are tiny, the limit
// just spares the strong-connectivity sweep from computing exact cuts.
class FlowNetwork {
public:
    explicit FlowNetwork(int nodes) : adj_(nodes), level_(nodes), it_(nodes) {}

    void add_arc(int from, int to, int cap) {
        adj_[from].push_back({to, cap, static_cast<int>(adj_[to].size())});
        adj_[to].push_back({from, 0, static_cast<int>(adj_[from].size()) - 1});
    }

    int max_flow(int s, int t, int limit = kInf) {
        int flow = 0;
        while (flow < limit && bfs(s, t)) {
            std::fill(it_.begin(), it_.end(), 0);
            int f;
            while (flow < limit && (f = dfs(s, t, limit - flow)) > 0) flow += f;
        }
        return flow;
    }

private:
    struct Arc {
        int to;
        int cap;
        int rev;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : adj_[v]) {
                if (a.cap > 0 && level_[a.to] < 0) {
                    level_[a.to] = level_[v] + 1;
                    q.push(a.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    int dfs(int v, int t, int limit) {
        if (v == t) return limit;
        for (int& i = it_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
            Arc& a = adj_[v][i];
            if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
                int f = dfs(a.to, t, std::min(limit, a.cap));
                if (f > 0) {
                    a.cap -= f;
                    adj_[a.to][a.rev].cap += f;
                    return f;
                }
            }
        }
        return 0;
    }

    std::vector<std::vector<Arc>> adj_;
    std::vector<int> level_;
    std::vector<int> it_;
};

int flat_id(const BipartiteGraph& g, VertexRef r) {
    if (r.side == Side::U) {
        if (r.index < 0 || r.index >= g.n()) fail(errc::index_out_of_range, "U index " + std::to_string(r.index));
        return r.index;
    }
    if (r.index < 0 || r.index >= g.m()) fail(errc::index_out_of_range, "V index " + std::to_string(r.index));
    return g.n() + r.index;
}

bool adjacent(const BipartiteGraph& g, VertexRef a, VertexRef b) {
    if (a.side == b.side) return false;
    const VertexRef& u = a.side == Side::U ? a : b;
    const VertexRef& v = a.side == Side::U ? b : a;
    return g.has_edge(u.index, v.index);
}

// min vertex cut between distinct nonadjacent flat ids, by node splitting:
// in(t) = t, out(t) = total + t, unit internal arcs, infinite edge arcs.
int vertex_cut_undirected(const BipartiteGraph& g, int sx, int sy) {
    int total = g.n() + g.m();
    FlowNetwork net(2 * total);
    for (int t = 0; t < total; ++t) net.add_arc(t, total + t, 1);
    for (const Edge& e : g.edges()) {
        int p = e.first, q = g.n() + e.second;
        net.add_arc(total + p, q, kInf);
        net.add_arc(total + q, p, kInf);
    }
    return net.max_flow(total + sx, sy);
}

}  // namespace

bool Digraph::has_arc(int a, int b) const {
    return std::binary_search(arcs.begin(), arcs.end(), std::make_pair(a, b));
}

Digraph make_digraph(int order, std::vector<std::pair<int, int>> arcs) {
    Digraph d;
    d.order = order;
    for (const auto& arc : arcs) {
        if (arc.first < 0 || arc.first >= order || arc.second < 0 || arc.second >= order) {
            fail(errc::index_out_of_range, "arc endpoint out of range");
        }
        if (arc.first == arc.second) {
            fail(errc::index_out_of_range, "self-loop at vertex " + std::to_string(arc.first));
        }
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    d.arcs = std::move(arcs);
    return d;
}

int local_connectivity(const BipartiteGraph& g, VertexRef x, VertexRef y) {
    int fx = flat_id(g, x);
    int fy = flat_id(g, y);
    if (fx == fy) fail(errc::same_vertex, "local connectivity needs two distinct vertices");
    if (adjacent(g, x, y)) fail(errc::adjacent_pair, "pair is adjacent, no vertex cut exists");
    return vertex_cut_undirected(g, fx, fy);
}

int kappa_set(const BipartiteGraph& g, const std::vector<VertexRef>& S) {
    if (S.size() < 2) fail(errc::degenerate, "set connectivity needs at least two vertices");
    for (size_t a = 0; a < S.size(); ++a) {
        for (size_t b = a + 1; b < S.size(); ++b) {
            if (adjacent(g, S[a], S[b])) {
                fail(errc::adjacent_pair_in_set, "set contains an adjacent pair");
            }
        }
    }
    int best = kInf;
    for (size_t a = 0; a < S.size(); ++a) {
        for (size_t b = a + 1; b < S.size(); ++b) {
            best = std::min(best, local_connectivity(g, S[a], S[b]));
        }
    }
    return best;
}

int kappa(const BipartiteGraph& g) {
    int best = kInf;
    bool any = false;
    for (int i = 0; i < g.n(); ++i) {
        for (int i2 = i + 1; i2 < g.n(); ++i2) {
            best = std::min(best, vertex_cut_undirected(g, i, i2));
            any = true;
        }
    }
    for (int j = 0; j < g.m(); ++j) {
        for (int j2 = j + 1; j2 < g.m(); ++j2) {
            best = std::min(best, vertex_cut_undirected(g, g.n() + j, g.n() + j2));
            any = true;
        }
    }
    for (int i = 0; i < g.n(); ++i) {
        for (int j = 0; j < g.m(); ++j) {
            if (g.has_edge(i, j)) continue;
            best = std::min(best, vertex_cut_undirected(g, i, g.n() + j));
            any = true;
        }
    }
    if (!any) fail(errc::degenerate, "K_{1,1} has no nonadjacent pair");
    return best;
}

Digraph contract_matching(const BipartiteGraph& g, const Matching& M) {
    if (g.n() != g.m()) {
        fail(errc::not_perfect_matching, "matching contraction needs equal class sizes");
    }
    if (M.size() != g.n()) {
        fail(errc::not_perfect_matching,
             "matching of size " + std::to_string(M.size()) + " is not perfect on order (" +
                 std::to_string(g.n()) + ", " + std::to_string(g.m()) + ")");
    }
    std::vector<int> pair_of_u(g.n(), -1), pair_of_v(g.m(), -1);
    std::vector<Edge> pairs = M.pairs;
    std::sort(pairs.begin(), pairs.end());
    for (size_t t = 0; t < pairs.size(); ++t) {
        const Edge& e = pairs[t];
        if (!g.has_edge(e.first, e.second)) {
            fail(errc::not_perfect_matching, "matching pair is not an edge of the graph");
        }
        if (pair_of_u[e.first] >= 0 || pair_of_v[e.second] >= 0) {
            fail(errc::not_perfect_matching, "matching repeats a vertex");
        }
        pair_of_u[e.first] = static_cast<int>(t);
        pair_of_v[e.second] = static_cast<int>(t);
    }
    std::vector<std::pair<int, int>> arcs;
    for (const Edge& e : g.edges()) {
        int a = pair_of_u[e.first];
        int b = pair_of_v[e.second];
        if (a == b) continue;  // the matching edge itself
        arcs.emplace_back(a, b);
    }
    Digraph d = make_digraph(g.n(), std::move(arcs));
    d.contracted_from = std::move(pairs);
    return d;
}

StrongConnectivityCheck check_strongly_k_connected(const Digraph& d, int k) {
    if (d.order <= k) {
        fail(errc::too_few_vertices, "digraph on " + std::to_string(d.order) +
                                         " vertices cannot be strongly " + std::to_string(k) +
                                         "-connected");
    }
    StrongConnectivityCheck result;
    result.ok = true;
    if (k <= 0) return result;
    for (int s = 0; s < d.order && result.ok; ++s) {
        for (int t = 0; t < d.order; ++t) {
            if (s == t || d.has_arc(s, t)) continue;
            FlowNetwork net(2 * d.order);
            for (int w = 0; w < d.order; ++w) net.add_arc(w, d.order + w, 1);
            for (const auto& arc : d.arcs) {
                net.add_arc(d.order + arc.first, arc.second, kInf);
            }
            int cut = net.max_flow(d.order + s, t, k);
            ++result.flow_calls;
            if (cut < k) {
                result.ok = false;
                break;
            }
        }
    }
    return result;
}

namespace {

// component count of g minus a deleted-vertex mask over U + V flat ids
int masked_components(const BipartiteGraph& g, const std::vector<char>& deleted) {
    int total = g.n() + g.m();
    std::vector<int> label(total, -1);
    int count = 0;
    std::vector<int> stack;
    for (int s = 0; s < total; ++s) {
        if (deleted[s] || label[s] >= 0) continue;
        label[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v < g.n()) {
                for (int j : g.neighbors_of_u(v)) {
                    int w = g.n() + j;
                    if (!deleted[w] && label[w] < 0) {
                        label[w] = count;
                        stack.push_back(w);
                    }
                }
            } else {
                for (int i : g.neighbors_of_v(v - g.n())) {
                    if (!deleted[i] && label[i] < 0) {
                        label[i] = count;
                        stack.push_back(i);
                    }
                }
            }
        }
        ++count;
    }
    return count;
}

// exhaustive: every separator Z with |Z| < k leaves some u in U \ Z whose
// whole neighborhood sits inside Z
bool separator_property(const BipartiteGraph& g, int k) {
    int total = g.n() + g.m();
    std::vector<char> deleted(total, 0);
    std::vector<int> subset;
    bool ok = true;
    auto check_subset = [&]() {
        if (masked_components(g, deleted) < 2) return;
        for (int i = 0; i < g.n(); ++i) {
            if (deleted[i]) continue;
            bool isolated = true;
            for (int j : g.neighbors_of_u(i)) {
                if (!deleted[g.n() + j]) {
                    isolated = false;
                    break;
                }
            }
            if (isolated) return;
        }
        ok = false;
    };
    auto recurse = [&](auto&& self, int start, int remaining) -> void {
        if (!ok) return;
        if (remaining == 0) {
            check_subset();
            return;
        }
        for (int v = start; v <= total - remaining; ++v) {
            deleted[v] = 1;
            self(self, v + 1, remaining - 1);
            deleted[v] = 0;
            if (!ok) return;
        }
    };
    for (int z = 1; z < k && ok; ++z) recurse(recurse, 0, z);
    return ok;
}

}  // namespace

ConnectivityReport check_connectivity_bounds(const BipartiteGraph& g) {
    if (!(g.n() > g.m() && g.m() > 1)) {
        fail(errc::invalid_order, "connectivity bounds need n > m > 1");
    }
    if (!is_kcb_fast(g).verdict) {
        fail(errc::not_kcb, "graph is not k-critical-bipartite");
    }
    int k = g.n() - g.m();
    ConnectivityReport r;
    r.degrees = degree_stats(g);
    r.components = component_count(g).count;
    r.kappa = kappa(g);
    r.kappa_U = kappa_set(g, u_class(g));
    r.kappa_V = kappa_set(g, v_class(g));
    r.kappaV_bound_ok = r.kappa_V >= k;
    r.kappaU_bound_ok = r.kappa_U >= std::min(r.degrees.delta_U, k);
    int delta = std::min(r.degrees.delta_U, r.degrees.delta_V);
    r.kappa_bound_ok = r.kappa >= std::min(delta, k);
    if (g.n() + g.m() <= 16) {
        r.small_separator_isolates_u = separator_property(g, k);
    }
    return r;
}

}  // namespace kcbg
