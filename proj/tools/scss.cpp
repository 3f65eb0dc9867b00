// Command-line driver: classify, reduce, solve-scss3, approx, meg, verify,
// oracle, bounds, gen. Reads a graph file (or stdin with "-"), writes results
// to stdout and diagnostics to stderr. Exit codes: 0 ok, 1 infeasible input,
// 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "meg/approx.hpp"
#include "meg/classify.hpp"
#include "meg/cover.hpp"
#include "meg/io.hpp"
#include "meg/oracle.hpp"
#include "meg/scss3.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;

struct infeasible_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw infeasible_input("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

meg::DirectedGraph load_graph(const std::string& path) {
    try {
        return meg::parse_graph(read_input(path));
    } catch (const meg::parse_error& e) {
        throw infeasible_input(path + ": " + e.what());
    }
}

void require_scss3_input(const meg::DirectedGraph& g) {
    if (!meg::is_strongly_connected(g)) throw infeasible_input("graph is not strongly connected");
    if (auto c = meg::find_cycle_with_length_at_least(g, 4))
        throw infeasible_input("graph has a cycle of length " + std::to_string(c->length()));
}

std::string format_fixed(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", value);
    return buf;
}

int cmd_classify(const std::string& file) {
    meg::DirectedGraph g = load_graph(file);
    require_scss3_input(g);
    std::vector<meg::EdgeClass> cls(g.edge_count());
    for (meg::EdgeId e = 0; e < g.edge_count(); ++e) cls[e] = meg::classify_edge_naive(g, e);
    auto unsat = meg::compute_unsatisfied(g, cls);
    for (meg::EdgeId e = 0; e < g.edge_count(); ++e) {
        std::cout << g.edge(e).tail << " " << g.edge(e).head << " "
                  << (cls[e] == meg::EdgeClass::Necessary ? "necessary" : "redundant");
        if (unsat.count(e)) std::cout << " unsatisfied";
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_reduce(const std::string& file) {
    meg::DirectedGraph g = load_graph(file);
    require_scss3_input(g);
    meg::Classification cls;
    try {
        cls = meg::classify(g);
    } catch (const meg::solver_error& e) {
        throw infeasible_input(e.what());
    }
    meg::CoverInstance inst = meg::build_cover_instance(g, cls);
    std::cout << inst.vertex_count << " " << inst.cover_edges.size() << "\n";
    for (const auto& ce : inst.cover_edges) std::cout << ce.a << " " << ce.b << "\n";
    for (int v = 0; v < inst.vertex_count; ++v) {
        meg::EdgeId e = inst.vertex_origin[v];
        std::cout << "# vertex " << v << " = unsatisfied edge " << e << " (" << g.edge(e).tail
                  << " " << g.edge(e).head << ")\n";
    }
    for (int i = 0; i < static_cast<int>(inst.cover_edges.size()); ++i) {
        meg::EdgeId e = inst.cover_edges[i].origin;
        std::cout << "# edge " << i << " = redundant edge " << e << " (" << g.edge(e).tail << " "
                  << g.edge(e).head << ")\n";
    }
    return kExitOk;
}

int cmd_solve_scss3(const std::string& file) {
    meg::DirectedGraph g = load_graph(file);
    try {
        std::cout << meg::serialize_edge_set(g, meg::scss3_minimum(g));
    } catch (const meg::solver_error& e) {
        throw infeasible_input(e.what());
    }
    return kExitOk;
}

int cmd_approx(const std::string& file, int k, bool no_exact_finish) {
    meg::DirectedGraph g = load_graph(file);
    meg::ApproxResult result;
    try {
        result = meg::scss_approx(g, k, !no_exact_finish);
    } catch (const meg::solver_error& e) {
        throw infeasible_input(e.what());
    }
    std::cout << meg::serialize_edge_set(g, result.edges);

    // Lower bound on the optimum: at least n edges, and at least the
    // bounded-cycle bound certified by each contraction phase (after phase i
    // no cycle of i or more edges remains).
    long long lb = g.vertex_count() >= 2 ? g.vertex_count() : 0;
    for (const auto& phase : result.trace.phases) {
        if (phase.vertices_remaining >= 2 && phase.threshold >= 3)
            lb = std::max(lb, meg::scss_lower_bound(phase.vertices_remaining,
                                                    phase.threshold - 1).ceil());
    }
    std::cerr << "size=" << result.edges.size() << " lower_bound=" << lb
              << " guarantee=" << format_fixed(meg::performance_bounds(k).exact_bound) << "\n";
    return kExitOk;
}

int cmd_meg(const std::string& file, int k) {
    meg::DirectedGraph g = load_graph(file);
    std::cout << meg::serialize_edge_set(g, meg::meg(g, k));
    return kExitOk;
}

int cmd_verify(const std::string& file, const std::string& solution_file,
               const std::string& mode) {
    meg::DirectedGraph g = load_graph(file);
    std::string text = read_input(solution_file);
    auto lines = meg::detail::tokenize_graph_text(text);
    if (lines.empty() || lines[0].values.size() != 1)
        throw infeasible_input("solution file must start with an edge count");
    if (static_cast<long long>(lines.size()) - 1 != lines[0].values[0])
        throw infeasible_input("solution edge count mismatch");
    std::vector<meg::EdgeId> subset;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].values.size() != 2)
            throw infeasible_input("solution line must be two integers 'u v'");
        auto id = g.find_edge(static_cast<int>(lines[i].values[0]),
                              static_cast<int>(lines[i].values[1]));
        if (!id)
            throw infeasible_input("solution edge (" + std::to_string(lines[i].values[0]) + ", " +
                                   std::to_string(lines[i].values[1]) + ") is not in the graph");
        subset.push_back(*id);
    }
    bool ok = mode == "meg" ? meg::reachability_equal(g, subset)
                            : meg::is_strongly_connected_on(g, subset);
    if (!ok) {
        std::cerr << "solution is infeasible\n";
        return kExitInfeasible;
    }
    std::cerr << "solution is feasible\n";
    return kExitOk;
}

int cmd_oracle(const std::string& file, const std::string& mode) {
    meg::DirectedGraph g = load_graph(file);
    try {
        if (mode == "cycles") {
            std::cout << meg::max_cycle_length(g) << "\n";
        } else if (mode == "meg") {
            std::cout << meg::serialize_edge_set(g, meg::min_equivalent_bruteforce(g));
        } else {
            std::cout << meg::serialize_edge_set(g, meg::min_scss_bruteforce(g));
        }
    } catch (const meg::oracle_error& e) {
        throw infeasible_input(e.what());
    }
    return kExitOk;
}

int cmd_bounds(int k, std::optional<int> l) {
    meg::GuaranteeReport report;
    try {
        report = meg::performance_bounds(k, l);
    } catch (const meg::graph_error& e) {
        throw infeasible_input(e.what());
    }
    std::cout << "exact_bound=" << format_fixed(report.exact_bound) << "\n";
    std::cout << "simplified_bound=" << format_fixed(report.simplified_bound) << "\n";
    if (report.bounded_cycle_bound)
        std::cout << "bounded_cycle_bound=" << format_fixed(*report.bounded_cycle_bound) << "\n";
    return kExitOk;
}

int cmd_gen(const std::string& family, int n, double density, std::uint64_t seed) {
    try {
        meg::DirectedGraph g = family == "random"
                                   ? meg::gen_random_sc_digraph(n, density, seed)
                                   : meg::gen_triangle_composite(n, seed);
        std::cout << meg::serialize_graph(g);
    } catch (const meg::oracle_error& e) {
        throw infeasible_input(e.what());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum equivalent graph / strongly connected spanning subgraph toolkit"};
    app.require_subcommand(1);

    std::string file = "-", solution_file, mode = "scss", family = "triangles";
    int k = 5, n = 0;
    std::optional<int> l;
    double density = 0.3;
    std::uint64_t seed = 0;
    bool no_exact_finish = false, allow_large_k = false;

    auto* classify = app.add_subcommand("classify", "label each edge necessary/redundant");
    classify->add_option("file", file);

    auto* reduce = app.add_subcommand("reduce", "emit the edge-cover instance G'");
    reduce->add_option("file", file);

    auto* solve = app.add_subcommand("solve-scss3", "exact minimum SCSS (max cycle length 3)");
    solve->add_option("file", file);

    auto* approx = app.add_subcommand("approx", "cycle-contraction approximation");
    approx->add_option("--k", k)->check(CLI::Range(4, 1 << 20));
    approx->add_flag("--no-exact-finish", no_exact_finish,
                     "take all residual edges instead of solving exactly");
    approx->add_flag("--allow-large-k", allow_large_k,
                     "lift the k <= 8 cap (cycle search is O(n^k))");
    approx->add_option("file", file);

    auto* megc = app.add_subcommand("meg", "minimum equivalent graph pipeline");
    megc->add_option("--k", k)->check(CLI::Range(4, 1 << 20));
    megc->add_flag("--allow-large-k", allow_large_k,
                   "lift the k <= 8 cap (cycle search is O(n^k))");
    megc->add_option("file", file);

    auto* verify = app.add_subcommand("verify", "check a solution file for feasibility");
    verify->add_option("file", file)->required();
    verify->add_option("solution-file", solution_file)->required();
    verify->add_option("--mode", mode)->check(CLI::IsMember({"scss", "meg"}));

    auto* oracle = app.add_subcommand("oracle", "brute-force answers (cap-guarded)");
    oracle->add_option("file", file);
    oracle->add_option("--mode", mode)->check(CLI::IsMember({"scss", "meg", "cycles"}));

    auto* bounds = app.add_subcommand("bounds", "print guarantee values to 12 decimals");
    bounds->add_option("--k", k)->required();
    bounds->add_option("--l", l);

    auto* gen = app.add_subcommand("gen", "emit a generated graph file");
    gen->add_option("--family", family)->check(CLI::IsMember({"triangles", "random"}));
    gen->add_option("--n", n)->required();
    gen->add_option("--density", density);
    gen->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if ((approx->parsed() || megc->parsed()) && k > 8 && !allow_large_k) {
            std::cerr << "k > 8 makes the cycle search O(n^k); pass --allow-large-k to proceed\n";
            return kExitUsage;
        }
        if (classify->parsed()) return cmd_classify(file);
        if (reduce->parsed()) return cmd_reduce(file);
        if (solve->parsed()) return cmd_solve_scss3(file);
        if (approx->parsed()) return cmd_approx(file, k, no_exact_finish);
        if (megc->parsed()) return cmd_meg(file, k);
        if (verify->parsed()) return cmd_verify(file, solution_file, mode);
        if (oracle->parsed()) return cmd_oracle(file, mode);
        if (bounds->parsed()) return cmd_bounds(k, l);
        if (gen->parsed()) return cmd_gen(family, n, density, seed);
    } catch (const infeasible_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    }
    return kExitUsage;
}
