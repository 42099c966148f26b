#pragma once

#include <vector>

#include "kcbg/bigraph.hpp"

namespace kcbg {

struct Matching {
    std::vector<Edge> pairs;  // vertex-disjoint edges of the host graph
    int size() const { return static_cast<int>(pairs.size()); }
};

// Deterministic maximum matching: augmenting paths in canonical vertex order,
// ties broken by lowest index.
Matching max_matching(const BipartiteGraph& g);

// True iff the maximum matching saturates the smaller class (size m whenever
// n >= m, which is the regime the verifiers run in).
bool has_complete_matching(const BipartiteGraph& g);

// Augmenting-path solver over an immutable graph with vertex masks, so
// deletion queries (G - S) run without rebuilding or allocating per query.
// Not thread-safe per instance; use one solver per worker.
class MatchingSolver {
public:
    explicit MatchingSolver(const BipartiteGraph& g);
    MatchingSolver(BipartiteGraph&&) = delete;  // the graph must outlive the solver

    // Maximum matching size ignoring masked vertices. Mask vectors may be
    // empty (nothing deleted) or sized n / m with nonzero = deleted.
    int max_size(const std::vector<char>& deleted_u, const std::vector<char>& deleted_v);

    int max_size() { return max_size(no_u_, no_v_); }

    // Matching pairs from the last max_size call.
    Matching extract() const;

private:
    bool try_augment(int u, const std::vector<char>& deleted_v);

    const BipartiteGraph& g_;
    std::vector<int> match_u_;  // matched V index per U vertex, -1 if free
    std::vector<int> match_v_;
    std::vector<int> visited_;  // stamp per V vertex
    int stamp_ = 0;
    std::vector<char> no_u_, no_v_;
};

}  // namespace kcbg
