#pragma once

#include <string>
#include <vector>

#include "kcbg/bigraph.hpp"

namespace kcbg {

struct Fixture {
    std::string name;
    BipartiteGraph graph;
};

// The (7,4) graph with delta_U = 1 below floor(m(k+1)/n), transcribed
// vertex by vertex.
BipartiteGraph small_delta_7_4();

// The five reference graphs shipped with the repo: the order-(6,5) positive
// pair, the order-(6,5) negative pair, and the (7,4) small-delta graph.
std::vector<Fixture> reference_fixtures();

// Writes <name>.edgelist for every fixture into dir; returns the file names.
std::vector<std::string> write_fixtures(const std::string& dir);

}  // namespace kcbg
