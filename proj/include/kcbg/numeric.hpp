#pragma once

#include <optional>
#include <vector>

#include "kcbg/bigraph.hpp"

namespace kcbg {

// Floor division rounding toward negative infinity (the closed forms below
// evaluate floor((j-1)n/m) at j = 0).
long long floor_div(long long a, long long b);
long long ceil_div(long long a, long long b);

// |{i in [n] : ceil(im/n) = j (mod m)}| via the closed form
// floor(jn/m) - floor((j-1)n/m). Requires n > m > 1 and j in [m].
int count_solutions(int n, int m, int j);

// max{i in [n] : ceil(im/n) = j (mod m)} = floor(jn/m). Same preconditions.
int max_solution_index(int n, int m, int j);

// The (P, Q) degree pair realized by the two negative constructions:
// x U-degrees split between ceil(yb/x) (first l) and floor(yb/x), constant
// V-degree b, with the prefix-sum offsets used to lay the U side out.
struct DegreeProfile {
    int x = 0;
    int y = 0;
    int b = 0;
    int l = 0;               // by mod x
    std::vector<int> P;      // non-increasing, length x
    std::vector<int> Q;      // constant b, length y
    std::vector<int> D;      // D[0]=0, D[i] = (sum of P[0..i-1]) mod y
};

// Requires x > y > 1 and 1 <= b <= x.
DegreeProfile degree_profile(int x, int y, int b);

struct BigraphicResult {
    bool bigraphic = false;
    std::vector<Edge> realization;  // present iff bigraphic; degrees match (P, Q)
};

// Bigraphic test by the reduction that deletes the largest element of P and
// decrements the |p| largest elements of Q (ties: earliest index). Sequences
// must be non-negative and sorted non-increasing.
BigraphicResult is_bigraphic(const std::vector<int>& P, const std::vector<int>& Q);

}  // namespace kcbg
