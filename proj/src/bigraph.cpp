#include "kcbg/bigraph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace kcbg {

BipartiteGraph::BipartiteGraph(int n, int m, std::vector<Edge> edges, bool lenient)
    : n_(n), m_(m) {
    if (n < 1 || m < 1) {
        fail(errc::invalid_order, "order (" + std::to_string(n) + ", " + std::to_string(m) +
                                      ") needs n >= 1 and m >= 1");
    }
    for (const Edge& e : edges) {
        if (e.first < 0 || e.first >= n) {
            fail(errc::index_out_of_range,
                 "U index " + std::to_string(e.first) + " not in [0, " + std::to_string(n) + ")");
        }
        if (e.second < 0 || e.second >= m) {
            fail(errc::index_out_of_range,
                 "V index " + std::to_string(e.second) + " not in [0, " + std::to_string(m) + ")");
        }
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
        if (!lenient) {
            fail(errc::duplicate_edge, "duplicate edge (" + std::to_string(dup->first) + ", " +
                                           std::to_string(dup->second) + ")");
        }
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }
    edges_ = std::move(edges);
    u_adj_.resize(n_);
    v_adj_.resize(m_);
    for (const Edge& e : edges_) {
        u_adj_[e.first].push_back(e.second);
        v_adj_[e.second].push_back(e.first);
    }
    // canonical edge order already leaves every adjacency list sorted
}

const std::vector<int>& BipartiteGraph::neighbors_of_u(int i) const {
    if (i < 0 || i >= n_) fail(errc::index_out_of_range, "U index " + std::to_string(i));
    return u_adj_[i];
}

const std::vector<int>& BipartiteGraph::neighbors_of_v(int j) const {
    if (j < 0 || j >= m_) fail(errc::index_out_of_range, "V index " + std::to_string(j));
    return v_adj_[j];
}

bool BipartiteGraph::has_edge(int i, int j) const {
    const std::vector<int>& adj = neighbors_of_u(i);
    return std::binary_search(adj.begin(), adj.end(), j);
}

void BipartiteGraph::set_labels(std::vector<std::string> u_labels,
                                std::vector<std::string> v_labels) {
    if (!u_labels.empty() && static_cast<int>(u_labels.size()) != n_) {
        fail(errc::index_out_of_range, "U label count does not match n");
    }
    if (!v_labels.empty() && static_cast<int>(v_labels.size()) != m_) {
        fail(errc::index_out_of_range, "V label count does not match m");
    }
    u_labels_ = std::move(u_labels);
    v_labels_ = std::move(v_labels);
}

DegreeStats degree_stats(const BipartiteGraph& g) {
    DegreeStats s;
    s.delta_U = g.deg_u(0);
    s.Delta_U = g.deg_u(0);
    for (int i = 1; i < g.n(); ++i) {
        s.delta_U = std::min(s.delta_U, g.deg_u(i));
        s.Delta_U = std::max(s.Delta_U, g.deg_u(i));
    }
    s.delta_V = g.deg_v(0);
    s.Delta_V = g.deg_v(0);
    for (int j = 1; j < g.m(); ++j) {
        s.delta_V = std::min(s.delta_V, g.deg_v(j));
        s.Delta_V = std::max(s.Delta_V, g.deg_v(j));
    }
    s.edge_count = g.edge_count();
    return s;
}

BipartiteGraph build_tilde(const BipartiteGraph& g) {
    int k = g.n() - g.m();
    if (k < 1) {
        fail(errc::not_surplus, "order (" + std::to_string(g.n()) + ", " + std::to_string(g.m()) +
                                    ") has no U surplus");
    }
    std::vector<Edge> edges = g.edges();
    edges.reserve(edges.size() + static_cast<size_t>(k) * g.n());
    for (int i = 0; i < g.n(); ++i) {
        for (int t = 0; t < k; ++t) {
            edges.emplace_back(i, g.m() + t);
        }
    }
    return BipartiteGraph(g.n(), g.n(), std::move(edges));
}

Components component_count(const BipartiteGraph& g) {
    Components c;
    c.label_u.assign(g.n(), -1);
    c.label_v.assign(g.m(), -1);
    std::vector<int> stack_u, stack_v;
    auto sweep = [&](Side side, int start) {
        stack_u.clear();
        stack_v.clear();
        if (side == Side::U) {
            c.label_u[start] = c.count;
            stack_u.push_back(start);
        } else {
            c.label_v[start] = c.count;
            stack_v.push_back(start);
        }
        while (!stack_u.empty() || !stack_v.empty()) {
            if (!stack_u.empty()) {
                int i = stack_u.back();
                stack_u.pop_back();
                for (int j : g.neighbors_of_u(i)) {
                    if (c.label_v[j] < 0) {
                        c.label_v[j] = c.count;
                        stack_v.push_back(j);
                    }
                }
            } else {
                int j = stack_v.back();
                stack_v.pop_back();
                for (int i : g.neighbors_of_v(j)) {
                    if (c.label_u[i] < 0) {
                        c.label_u[i] = c.count;
                        stack_u.push_back(i);
                    }
                }
            }
        }
        ++c.count;
    };
    for (int i = 0; i < g.n(); ++i) {
        if (c.label_u[i] < 0) sweep(Side::U, i);
    }
    for (int j = 0; j < g.m(); ++j) {
        if (c.label_v[j] < 0) sweep(Side::V, j);
    }
    return c;
}

bool is_subgraph(const BipartiteGraph& g1, const BipartiteGraph& g2) {
    if (g1.n() != g2.n() || g1.m() != g2.m()) {
        fail(errc::order_mismatch, "orders (" + std::to_string(g1.n()) + ", " +
                                       std::to_string(g1.m()) + ") and (" + std::to_string(g2.n()) +
                                       ", " + std::to_string(g2.m()) + ") differ");
    }
    return std::includes(g2.edges().begin(), g2.edges().end(), g1.edges().begin(),
                         g1.edges().end());
}

BipartiteGraph remove_edge(const BipartiteGraph& g, Edge e) {
    std::vector<Edge> edges = g.edges();
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) {
        fail(errc::index_out_of_range, "edge (" + std::to_string(e.first) + ", " +
                                           std::to_string(e.second) + ") not in graph");
    }
    edges.erase(it);
    return BipartiteGraph(g.n(), g.m(), std::move(edges));
}

Format format_from_string(const std::string& name) {
    if (name == "edgelist") return Format::edgelist;
    if (name == "dot") return Format::dot;
    if (name == "json") return Format::json;
    fail(errc::parse_error, "unknown format '" + name + "'");
}

const char* format_name(Format f) {
    switch (f) {
        case Format::edgelist: return "edgelist";
        case Format::dot: return "dot";
        case Format::json: return "json";
    }
    return "?";
}

namespace {

std::string serialize_edgelist(const BipartiteGraph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.first << ' ' << e.second << '\n';
    }
    return out.str();
}

std::string serialize_dot(const BipartiteGraph& g) {
    std::ostringstream out;
    out << "graph kcbg {\n";
    out << "  rankdir=LR;\n";
    out << "  { rank=same;";
    for (int i = 0; i < g.n(); ++i) out << " u" << i << ';';
    out << " }\n";
    out << "  { rank=same;";
    for (int j = 0; j < g.m(); ++j) out << " v" << j << ';';
    out << " }\n";
    for (const Edge& e : g.edges()) {
        out << "  u" << e.first << " -- v" << e.second << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string serialize_json(const BipartiteGraph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    j["m"] = g.m();
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) {
        edges.push_back({e.first, e.second});
    }
    j["edges"] = std::move(edges);
    if (!g.u_labels().empty() || !g.v_labels().empty()) {
        j["labels"] = {{"u", g.u_labels()}, {"v", g.v_labels()}};
    }
    return j.dump();
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
    fail(errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

int parse_int(const std::string& token, int line) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(token, &pos);
    } catch (const std::exception&) {
        parse_fail(line, "expected integer, got '" + token + "'");
    }
    if (pos != token.size()) parse_fail(line, "trailing junk in '" + token + "'");
    return value;
}

BipartiteGraph parse_edgelist(const std::string& text, bool lenient) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool have_header = false;
    int n = 0, m = 0;
    std::vector<Edge> edges;
    std::vector<int> header_lines;  // line number per edge, for range diagnostics
    std::vector<int> edge_lines;
    while (std::getline(in, raw)) {
        ++line_no;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        std::istringstream fields(raw);
        std::vector<std::string> toks;
        std::string tok;
        while (fields >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() != 2) parse_fail(line_no, "expected two integers");
        int a = parse_int(toks[0], line_no);
        int b = parse_int(toks[1], line_no);
        if (!have_header) {
            n = a;
            m = b;
            have_header = true;
        } else {
            edges.emplace_back(a, b);
            edge_lines.push_back(line_no);
        }
    }
    if (!have_header) parse_fail(line_no == 0 ? 1 : line_no, "missing 'n m' header");
    for (size_t t = 0; t < edges.size(); ++t) {
        if (edges[t].first < 0 || edges[t].first >= n || edges[t].second < 0 ||
            edges[t].second >= m) {
            fail(errc::index_out_of_range,
                 "line " + std::to_string(edge_lines[t]) + ": edge (" +
                     std::to_string(edges[t].first) + ", " + std::to_string(edges[t].second) +
                     ") out of range for order (" + std::to_string(n) + ", " + std::to_string(m) +
                     ")");
        }
    }
    return BipartiteGraph(n, m, std::move(edges), lenient);
}

struct DotToken {
    std::string text;
    int line;
};

std::vector<DotToken> dot_tokens(const std::string& text) {
    std::vector<DotToken> toks;
    std::string cur;
    int line = 1, cur_line = 1;
    auto flush = [&] {
        if (!cur.empty()) {
            toks.push_back({cur, cur_line});
            cur.clear();
        }
    };
    for (char c : text) {
        if (c == '\n') {
            flush();
            ++line;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
            continue;
        }
        if (c == '{' || c == '}' || c == ';' || c == '=') {
            flush();
            toks.push_back({std::string(1, c), line});
            continue;
        }
        if (cur.empty()) cur_line = line;
        cur += c;
    }
    flush();
    return toks;
}

// Accepts the dialect written by serialize_dot: a single undirected graph,
// two rank=same groups listing the U and V nodes, then "u<i> -- v<j>;" lines.
BipartiteGraph parse_dot(const std::string& text, bool lenient) {
    std::vector<DotToken> toks = dot_tokens(text);
    size_t p = 0;
    auto at_end = [&] { return p >= toks.size(); };
    auto expect = [&](const std::string& s) {
        if (at_end()) parse_fail(toks.empty() ? 1 : toks.back().line, "unexpected end of input");
        if (toks[p].text != s) parse_fail(toks[p].line, "expected '" + s + "', got '" + toks[p].text + "'");
        ++p;
    };
    auto node_id = [&](const DotToken& t, char side) -> int {
        if (t.text.size() < 2 || t.text[0] != side) {
            parse_fail(t.line, std::string("expected ") + side + "<index> node id, got '" + t.text + "'");
        }
        return parse_int(t.text.substr(1), t.line);
    };

    expect("graph");
    if (!at_end() && toks[p].text != "{") ++p;  // optional graph name
    expect("{");

    std::vector<int> u_ids, v_ids;
    std::vector<Edge> edges;
    int rank_groups = 0;
    while (!at_end() && toks[p].text != "}") {
        if (toks[p].text == "{") {
            // rank group
            ++p;
            expect("rank");
            expect("=");
            expect("same");
            expect(";");
            ++rank_groups;
            while (!at_end() && toks[p].text != "}") {
                const DotToken& t = toks[p];
                if (t.text == ";") {
                    ++p;
                    continue;
                }
                if (rank_groups == 1) {
                    u_ids.push_back(node_id(t, 'u'));
                } else {
                    v_ids.push_back(node_id(t, 'v'));
                }
                ++p;
            }
            expect("}");
            continue;
        }
        if (toks[p].text == "rankdir") {
            ++p;
            expect("=");
            if (at_end()) parse_fail(toks.back().line, "unexpected end of input");
            ++p;
            if (!at_end() && toks[p].text == ";") ++p;
            continue;
        }
        // edge statement: u<i> -- v<j> ;
        int i = node_id(toks[p], 'u');
        int edge_line = toks[p].line;
        ++p;
        expect("--");
        if (at_end()) parse_fail(edge_line, "dangling edge statement");
        int j = node_id(toks[p], 'v');
        ++p;
        if (!at_end() && toks[p].text == ";") ++p;
        edges.emplace_back(i, j);
    }
    expect("}");

    if (rank_groups != 2) parse_fail(1, "expected two rank=same groups (U and V)");
    auto check_ids = [&](std::vector<int>& ids, const char* side) {
        std::sort(ids.begin(), ids.end());
        for (size_t t = 0; t < ids.size(); ++t) {
            if (ids[t] != static_cast<int>(t)) {
                parse_fail(1, std::string(side) + " rank group is not 0..count-1");
            }
        }
        if (ids.empty()) parse_fail(1, std::string(side) + " rank group is empty");
    };
    check_ids(u_ids, "U");
    check_ids(v_ids, "V");
    return BipartiteGraph(static_cast<int>(u_ids.size()), static_cast<int>(v_ids.size()),
                          std::move(edges), lenient);
}

BipartiteGraph parse_json(const std::string& text, bool lenient) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(errc::parse_error, e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("edges")) {
        fail(errc::parse_error, "expected object with fields n, m, edges");
    }
    if (!j["n"].is_number_integer() || !j["m"].is_number_integer() || !j["edges"].is_array()) {
        fail(errc::parse_error, "fields n, m must be integers and edges an array");
    }
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
            fail(errc::parse_error, "edges entries must be [i, j] integer pairs");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    BipartiteGraph g(j["n"].get<int>(), j["m"].get<int>(), std::move(edges), lenient);
    if (j.contains("labels") && j["labels"].is_object()) {
        std::vector<std::string> lu, lv;
        if (j["labels"].contains("u")) lu = j["labels"]["u"].get<std::vector<std::string>>();
        if (j["labels"].contains("v")) lv = j["labels"]["v"].get<std::vector<std::string>>();
        g.set_labels(std::move(lu), std::move(lv));
    }
    return g;
}

}  // namespace

std::string serialize(const BipartiteGraph& g, Format format) {
    switch (format) {
        case Format::edgelist: return serialize_edgelist(g);
        case Format::dot: return serialize_dot(g);
        case Format::json: return serialize_json(g);
    }
    fail(errc::parse_error, "unknown format");
}

BipartiteGraph parse(const std::string& text, Format format, bool lenient) {
    switch (format) {
        case Format::edgelist: return parse_edgelist(text, lenient);
        case Format::dot: return parse_dot(text, lenient);
        case Format::json: return parse_json(text, lenient);
    }
    fail(errc::parse_error, "unknown format");
}

}  // namespace kcbg
