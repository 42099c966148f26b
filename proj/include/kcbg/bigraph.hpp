#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kcbg/errors.hpp"

namespace kcbg {

// Edge (i, j): i indexes the U class, j indexes the V class.
using Edge = std::pair<int, int>;

enum class Side { U, V };

// Class-tagged vertex id, used by connectivity queries that mix classes.
struct VertexRef {
    Side side;
    int index;
};

inline bool operator==(const VertexRef& a, const VertexRef& b) {
    return a.side == b.side && a.index == b.index;
}

/// Labeled bipartite graph of order (n, m) with 0-based class-indexed
/// vertex ids. Immutable after construction; edges are kept in canonical
/// order (sorted lexicographically by (i, j)) so equality is edge-set
/// equality at fixed order. Labels are cosmetic and excluded from equality.
class BipartiteGraph {
public:
    // Validates ranges and duplicates. With lenient=true duplicate edges are
    // collapsed instead of rejected.
    BipartiteGraph(int n, int m, std::vector<Edge> edges, bool lenient = false);

    int n() const { return n_; }
    int m() const { return m_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors_of_u(int i) const;
    const std::vector<int>& neighbors_of_v(int j) const;
    int deg_u(int i) const { return static_cast<int>(neighbors_of_u(i).size()); }
    int deg_v(int j) const { return static_cast<int>(neighbors_of_v(j).size()); }
    bool has_edge(int i, int j) const;

    const std::vector<std::string>& u_labels() const { return u_labels_; }
    const std::vector<std::string>& v_labels() const { return v_labels_; }
    void set_labels(std::vector<std::string> u_labels, std::vector<std::string> v_labels);

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    int m_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> u_adj_;
    std::vector<std::vector<int>> v_adj_;
    std::vector<std::string> u_labels_;
    std::vector<std::string> v_labels_;
};

struct DegreeStats {
    int delta_U = 0;
    int Delta_U = 0;
    int delta_V = 0;
    int Delta_V = 0;
    long long edge_count = 0;
};

DegreeStats degree_stats(const BipartiteGraph& g);

// G with k = n - m extra V-side vertices adjacent to all of U. The added
// vertices take indices m, ..., m+k-1; the result has equal class sizes.
BipartiteGraph build_tilde(const BipartiteGraph& g);

struct Components {
    int count = 0;
    std::vector<int> label_u;  // component id per U vertex, 0-based discovery order
    std::vector<int> label_v;
};

Components component_count(const BipartiteGraph& g);

// E(g1) subseteq E(g2); both graphs must have the same order.
bool is_subgraph(const BipartiteGraph& g1, const BipartiteGraph& g2);

// g minus one edge (which must exist).
BipartiteGraph remove_edge(const BipartiteGraph& g, Edge e);

enum class Format { edgelist, dot, json };

Format format_from_string(const std::string& name);
const char* format_name(Format f);

// Round-trip identities hold on canonical forms for all three formats.
// Edge-list format is bit-exact: "n m\n" then one "i j\n" per edge in
// canonical order; '#' starts a comment on parse.
std::string serialize(const BipartiteGraph& g, Format format);
BipartiteGraph parse(const std::string& text, Format format, bool lenient = false);

}  // namespace kcbg
