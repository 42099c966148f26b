#include "kcbg/fixtures.hpp"

#include <filesystem>
#include <fstream>

#include "kcbg/constructions.hpp"

namespace kcbg {

BipartiteGraph small_delta_7_4() {
    // v0: u0 u1 u2 u4 / v1: u0 u1 u3 u5 / v2: u0 u2 u3 u5 / v3: u1 u2 u4 u6
    std::vector<Edge> edges = {
        {0, 0}, {1, 0}, {2, 0}, {4, 0},
        {0, 1}, {1, 1}, {3, 1}, {5, 1},
        {0, 2}, {2, 2}, {3, 2}, {5, 2},
        {1, 3}, {2, 3}, {4, 3}, {6, 3},
    };
    return BipartiteGraph(7, 4, std::move(edges));
}

std::vector<Fixture> reference_fixtures() {
    std::vector<Fixture> fixtures;
    fixtures.push_back({"bar_6_5", bar_g(6, 5)});
    fixtures.push_back({"hat_6_5_a2", hat_g(6, 5, 2)});
    fixtures.push_back({"dot_6_5_b2", dot_g(6, 5, 2)});
    fixtures.push_back({"ddot_6_5_b2", ddot_g(6, 5, 2)});
    fixtures.push_back({"small_delta_7_4", small_delta_7_4()});
    return fixtures;
}

std::vector<std::string> write_fixtures(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) fail(errc::io_error, "cannot create directory " + dir + ": " + ec.message());
    std::vector<std::string> names;
    for (const Fixture& f : reference_fixtures()) {
        std::string name = f.name + ".edgelist";
        std::filesystem::path path = std::filesystem::path(dir) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) fail(errc::io_error, "cannot open " + path.string() + " for writing");
        out << serialize(f.graph, Format::edgelist);
        if (!out) fail(errc::io_error, "write failed for " + path.string());
        names.push_back(name);
    }
    return names;
}

}  // namespace kcbg
