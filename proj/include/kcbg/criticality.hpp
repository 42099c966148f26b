#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kcbg/bigraph.hpp"

namespace kcbg {

enum class Method { bruteforce, hall, fast };

const char* method_name(Method m);

// k-subset of U whose deletion kills the complete matching.
struct FaultSetWitness {
    std::vector<int> u_vertices;
};

// V' with |N(V')| < |V'| + k.
struct HallWitness {
    std::vector<int> v_vertices;
};

using Witness = std::variant<FaultSetWitness, HallWitness>;

struct VerifyReport {
    bool verdict = false;
    Method method = Method::bruteforce;
    std::optional<Witness> witness;  // present exactly when verdict is false
    long long work = 0;              // subproblems examined
    double wall_ms = 0.0;
};

struct Budget {
    long long subsets = 0;  // 0 = method default: 1e7 subsets, 2^24 for hall
    bool force = false;
};

constexpr long long kDefaultSubsetBudget = 10'000'000;
constexpr long long kDefaultHallBudget = 1LL << 24;

// Definition-level oracle: every k-subset of U is deleted and the remainder
// checked for a complete matching. Witness is the lexicographically smallest
// failing subset. Requires n > m >= 1 and C(n, k) within budget unless forced.
VerifyReport is_kcb_bruteforce(const BipartiteGraph& g, Budget budget = {});

// Surplus test: |N(V')| >= |V'| + k for every nonempty V'. Scans all 2^m - 1
// subsets; witness is a minimum-surplus violator (then smallest, then
// lexicographic). Requires 2^m within budget unless forced.
VerifyReport is_kcb_hall(const BipartiteGraph& g, Budget budget = {});

// Polynomial test: the augmented equal-class graph must be connected, carry a
// perfect matching M, and contract through M to a strongly k-connected
// digraph. Witness on failure is a Hall violator extracted in polynomial time.
VerifyReport is_kcb_fast(const BipartiteGraph& g);

// Every k-subset pair (U', V') leaves a perfect matching after deletion.
// Requires equal classes and C(n, k)^2 within budget unless forced.
bool is_k_extendable(const BipartiteGraph& g, int k, Budget budget = {});

// Hall violator in polynomial time via clone matchings, or nullopt when the
// graph is k-critical-bipartite. Independent of the contraction route.
std::optional<std::vector<int>> find_hall_violator(const BipartiteGraph& g);

struct MinimumCheck {
    bool minimum = false;  // kcb and the optimal (|E|, Delta_U, Delta_V) triple
    bool kcb = false;
    DegreeStats stats;
};

// Minimum witness triple: |E| = m(k+1), Delta_U = ceil(m(k+1)/n),
// Delta_V = k+1, on top of k-critical-bipartiteness. Requires n > m > 1.
MinimumCheck is_minimum_kcb(const BipartiteGraph& g);

// True iff removing any single edge destroys k-critical-bipartiteness.
// The input must itself be k-critical-bipartite.
bool is_edge_minimal_kcb(const BipartiteGraph& g);

// C(n, k) clamped to the given cap (avoids overflow in budget checks).
long long binom_clamped(int n, int k, long long cap);

}  // namespace kcbg
