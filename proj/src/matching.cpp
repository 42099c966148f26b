#include "kcbg/matching.hpp"

namespace kcbg {

MatchingSolver::MatchingSolver(const BipartiteGraph& g)
    : g_(g), match_u_(g.n(), -1), match_v_(g.m(), -1), visited_(g.m(), 0) {}

bool MatchingSolver::try_augment(int u, const std::vector<char>& deleted_v) {
    for (int v : g_.neighbors_of_u(u)) {
        if (!deleted_v.empty() && deleted_v[v]) continue;
        if (visited_[v] == stamp_) continue;
        visited_[v] = stamp_;
        if (match_v_[v] < 0 || try_augment(match_v_[v], deleted_v)) {
            match_u_[u] = v;
            match_v_[v] = u;
            return true;
        }
    }
    return false;
}

int MatchingSolver::max_size(const std::vector<char>& deleted_u,
                             const std::vector<char>& deleted_v) {
    std::fill(match_u_.begin(), match_u_.end(), -1);
    std::fill(match_v_.begin(), match_v_.end(), -1);
    int size = 0;
    for (int u = 0; u < g_.n(); ++u) {
        if (!deleted_u.empty() && deleted_u[u]) continue;
        ++stamp_;
        if (try_augment(u, deleted_v)) ++size;
    }
    return size;
}

Matching MatchingSolver::extract() const {
    Matching m;
    for (int u = 0; u < g_.n(); ++u) {
        if (match_u_[u] >= 0) m.pairs.emplace_back(u, match_u_[u]);
    }
    return m;
}

Matching max_matching(const BipartiteGraph& g) {
    MatchingSolver solver(g);
    solver.max_size();
    return solver.extract();
}

bool has_complete_matching(const BipartiteGraph& g) {
    MatchingSolver solver(g);
    return solver.max_size() == std::min(g.n(), g.m());
}

}  // namespace kcbg
