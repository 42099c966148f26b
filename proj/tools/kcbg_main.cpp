#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kcbg/connectivity.hpp"
#include "kcbg/constructions.hpp"
#include "kcbg/criticality.hpp"
#include "kcbg/fixtures.hpp"
#include "kcbg/json_io.hpp"
#include "kcbg/sweep.hpp"

namespace {

kcbg::Budget budget_from_env(bool force) {
    kcbg::Budget b;
    b.force = force;
    if (const char* env = std::getenv("KCBG_BUDGET")) {
        b.subsets = std::atoll(env);
    }
    return b;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) kcbg::fail(kcbg::errc::io_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

kcbg::Format infer_format(const std::string& path, const std::string& override_name) {
    if (!override_name.empty()) return kcbg::format_from_string(override_name);
    std::string ext = std::filesystem::path(path).extension().string();
    if (ext == ".json") return kcbg::Format::json;
    if (ext == ".dot" || ext == ".gv") return kcbg::Format::dot;
    return kcbg::Format::edgelist;
}

kcbg::BipartiteGraph load_graph(const std::string& path, const std::string& format_name,
                                bool lenient) {
    return kcbg::parse(read_input(path), infer_format(path, format_name), lenient);
}

void write_output(const std::string& path, const std::string& body) {
    if (path.empty() || path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) kcbg::fail(kcbg::errc::io_error, "cannot open " + path + " for writing");
    out << body;
}

struct ConstructArgs {
    std::string family;
    int n = 0;
    int m = 0;
    int a = -1, b = -1, c = -1, kappa = -1;
    std::string format = "edgelist";
    std::string output;
};

int cmd_construct(const ConstructArgs& args) {
    kcbg::ConstructionSpec spec;
    spec.family = kcbg::family_from_string(args.family);
    spec.n = args.n;
    spec.m = args.m;
    if (args.a >= 0) spec.a = args.a;
    if (args.b >= 0) spec.b = args.b;
    if (args.c >= 0) spec.c = args.c;
    if (args.kappa >= 0) spec.kappa = args.kappa;
    kcbg::BipartiteGraph g = kcbg::construct(spec);
    write_output(args.output, kcbg::serialize(g, kcbg::format_from_string(args.format)));
    return 0;
}

struct VerifyArgs {
    std::string file;
    std::string method = "fast";
    std::string format;
    bool force = false;
};

int cmd_verify(const VerifyArgs& args) {
    kcbg::BipartiteGraph g = load_graph(args.file, args.format, false);
    kcbg::Budget budget = budget_from_env(args.force);
    std::vector<kcbg::VerifyReport> reports;
    if (args.method == "all" || args.method == "bruteforce") {
        reports.push_back(kcbg::is_kcb_bruteforce(g, budget));
    }
    if (args.method == "all" || args.method == "hall") {
        reports.push_back(kcbg::is_kcb_hall(g, budget));
    }
    if (args.method == "all" || args.method == "fast") {
        reports.push_back(kcbg::is_kcb_fast(g));
    }
    if (reports.empty()) {
        kcbg::fail(kcbg::errc::parse_error, "unknown method '" + args.method + "'");
    }
    for (const kcbg::VerifyReport& r : reports) std::cout << kcbg::to_json(r);
    for (size_t t = 1; t < reports.size(); ++t) {
        if (reports[t].verdict != reports[0].verdict) {
            std::cerr << "error: verifier verdicts disagree; this is a bug\n";
            return 2;
        }
    }
    return reports[0].verdict ? 0 : 1;
}

struct ConnectivityArgs {
    std::string file;
    std::string format;
};

int cmd_connectivity(const ConnectivityArgs& args) {
    kcbg::BipartiteGraph g = load_graph(args.file, args.format, false);
    kcbg::ConnectivityReport report = kcbg::check_connectivity_bounds(g);
    std::cout << kcbg::to_json(report, g.n(), g.m());
    return 0;
}

struct SweepArgs {
    int n_min = 3;
    int n_max = 8;
    int m_min = 2;
    int m_max = 0;
    std::string families = "bar";
    std::string output;
    int jobs = 1;
    bool timings = false;
    bool force = false;
};

int cmd_sweep(const SweepArgs& args) {
    kcbg::SweepOptions options;
    options.n_min = args.n_min;
    options.n_max = args.n_max;
    options.m_min = args.m_min;
    options.m_max = args.m_max;
    options.jobs = args.jobs;
    options.timings = args.timings;
    options.budget = budget_from_env(args.force);
    options.families.clear();
    std::istringstream list(args.families);
    std::string item;
    while (std::getline(list, item, ',')) {
        if (!item.empty()) options.families.push_back(kcbg::family_from_string(item));
    }
    if (options.families.empty()) {
        kcbg::fail(kcbg::errc::parse_error, "no families given");
    }
    std::vector<kcbg::SweepRow> rows = kcbg::run_sweep(options);
    write_output(args.output, kcbg::sweep_csv(rows, options.timings));
    return 0;
}

int cmd_fixtures(const std::string& dir) {
    for (const std::string& name : kcbg::write_fixtures(dir)) {
        std::cout << (std::filesystem::path(dir) / name).string() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct, verify and measure k-critical-bipartite graphs"};
    app.require_subcommand(1);

    ConstructArgs construct_args;
    CLI::App* construct = app.add_subcommand("construct", "generate a graph family member");
    construct->add_option("family,--family", construct_args.family,
                          "hat|bar|check|dot|ddot|tripledot|star|kappa_tuned|complete")
        ->required();
    construct->add_option("--n", construct_args.n, "U class size (x for dot/ddot)")->required();
    construct->add_option("--m", construct_args.m, "V class size (y for dot/ddot)")->required();
    construct->add_option("--a", construct_args.a, "hat width (default ceil(m(k+1)/n))");
    construct->add_option("--b", construct_args.b, "dot/ddot V-degree (default k+1)");
    construct->add_option("--c", construct_args.c, "tripledot copy count");
    construct->add_option("--kappa", construct_args.kappa, "kappa_tuned target connectivity");
    construct->add_option("--format", construct_args.format, "edgelist|dot|json");
    construct->add_option("--output,-o", construct_args.output, "output file (default stdout)");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "test k-critical-bipartiteness");
    verify->add_option("file", verify_args.file, "graph file ('-' for stdin)")->required();
    verify->add_option("--method", verify_args.method, "bruteforce|hall|fast|all");
    verify->add_option("--format", verify_args.format, "input format (default by extension)");
    verify->add_flag("--force", verify_args.force, "ignore subset budgets");

    ConnectivityArgs connectivity_args;
    CLI::App* connectivity = app.add_subcommand("connectivity", "kappa report with bound checks");
    connectivity->add_option("file", connectivity_args.file, "graph file ('-' for stdin)")
        ->required();
    connectivity->add_option("--format", connectivity_args.format,
                             "input format (default by extension)");

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "family sweep to CSV");
    sweep->add_option("--n-min", sweep_args.n_min, "smallest n");
    sweep->add_option("--n-max", sweep_args.n_max, "largest n");
    sweep->add_option("--m-min", sweep_args.m_min, "smallest m");
    sweep->add_option("--m-max", sweep_args.m_max, "largest m (default n-1)");
    sweep->add_option("--families,--family", sweep_args.families, "comma-separated family list");
    sweep->add_option("--output,-o", sweep_args.output, "CSV file (default stdout)");
    sweep->add_option("--jobs", sweep_args.jobs, "parallel row workers");
    sweep->add_flag("--timings", sweep_args.timings, "append wall-clock columns");
    sweep->add_flag("--force", sweep_args.force, "ignore subset budgets");

    std::string fixtures_dir = "fixtures";
    CLI::App* fixtures = app.add_subcommand("fixtures", "write the five reference edge lists");
    fixtures->add_option("--output,-o", fixtures_dir, "target directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) return cmd_construct(construct_args);
        if (verify->parsed()) return cmd_verify(verify_args);
        if (connectivity->parsed()) return cmd_connectivity(connectivity_args);
        if (sweep->parsed()) return cmd_sweep(sweep_args);
        if (fixtures->parsed()) return cmd_fixtures(fixtures_dir);
    } catch (const kcbg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
