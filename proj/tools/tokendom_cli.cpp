// Command-line front end: build/export token graphs, run the dominating-set
// constructions and solvers, verify certificates, and emit result tables.
//
// Exit codes: 0 success/dominating, 1 domination-check failure, 2 input
// error, 3 resource limit.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tokendom/tokendom.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_not_dominating = 1;
constexpr int exit_input_error = 2;
constexpr int exit_resource_limit = 3;

struct GlobalFlags {
    std::uint64_t budget_vertices = tokendom::default_vertex_budget;
    std::uint64_t solver_nodes = 0; // 0 = command default (1e8 for gamma, 2e6 per table row)
    std::uint64_t timeout_ms = 0;   // 0 = no limit
    std::string out;
};

void add_global_flags(CLI::App* cmd, GlobalFlags& flags) {
    cmd->add_option("--budget-vertices", flags.budget_vertices,
                    "explicit token-graph vertex budget (default 200000)");
    cmd->add_option("--solver-nodes", flags.solver_nodes,
                    "branch-and-bound node budget (default 1e8; 2e6 per table row)");
    cmd->add_option("--timeout-ms", flags.timeout_ms, "solver time limit in milliseconds (0 = none)");
    cmd->add_option("--out", flags.out, "output file (default: stdout)");
}

tokendom::SolverLimits solver_limits(const GlobalFlags& flags) {
    tokendom::SolverLimits limits;
    if (flags.solver_nodes > 0) limits.max_nodes = flags.solver_nodes;
    if (flags.timeout_ms > 0) limits.time_limit = std::chrono::milliseconds(flags.timeout_ms);
    return limits;
}

/// Artifact to --out when given (summary on stdout), else artifact to stdout
/// (summary on stderr).
void emit(const GlobalFlags& flags, const std::string& artifact, const std::string& summary) {
    if (!flags.out.empty()) {
        std::ofstream f(flags.out);
        if (!f) throw tokendom::invalid_parameter("cannot open output file '" + flags.out + "'");
        f << artifact;
        if (!summary.empty()) std::cout << summary << "\n";
    } else {
        std::cout << artifact;
        if (!summary.empty()) std::cerr << summary << "\n";
    }
}

tokendom::BaseGraph make_base(const std::string& family, int n) {
    if (family == "star") return tokendom::BaseGraph::star(n);
    if (family == "complete") return tokendom::BaseGraph::complete(n);
    throw tokendom::invalid_parameter("unknown family '" + family + "' (expected star or complete)");
}

int run_build(const std::string& family, int n, int k, const std::string& format, const GlobalFlags& flags) {
    tokendom::TokenGraph tg(make_base(family, n), k, tokendom::Mode::Explicit, flags.budget_vertices);
    std::ostringstream summary;
    summary << family << " " << n << " " << k << ": " << tg.vertex_count() << " vertices, " << tg.edge_count()
            << " edges";
    if (format == "dot") {
        std::ostringstream dot;
        tokendom::graph_to_dot(tg, dot);
        emit(flags, dot.str(), summary.str());
    } else if (format == "json") {
        emit(flags, tokendom::graph_to_json(tg).dump(2) + "\n", summary.str());
    } else {
        throw tokendom::invalid_parameter("unknown format '" + format + "' (expected json or dot)");
    }
    return exit_ok;
}

int run_gamma(const std::string& family, int n, int k, const std::string& method, int di, int dj,
              const GlobalFlags& flags) {
    tokendom::DominationCertificate cert;
    if (method == "construction") {
        if (family == "star" && k == 2 && (di != 1 || dj != 2)) {
            tokendom::TokenGraph tg(make_base(family, n), 2, tokendom::Mode::Explicit, flags.budget_vertices);
            auto d = tokendom::star_f2_construction(n, di, dj);
            std::vector<std::uint32_t> ranks;
            for (const auto& member : d) ranks.push_back(tg.rank_of_labels(member));
            cert = tokendom::certify(tg, ranks, "star-f2-Dij", static_cast<std::uint64_t>(n - 1), false);
        } else {
            cert = tokendom::construction_certificate(family, n, k, flags.budget_vertices);
        }
    } else if (method == "exact" || method == "greedy") {
        tokendom::TokenGraph tg(make_base(family, n), k, tokendom::Mode::Explicit, flags.budget_vertices);
        if (method == "exact") {
            auto res = tokendom::exact_min_dominating(tg, solver_limits(flags));
            cert = tokendom::certify(tg, res.set, "exact", res.lower_bound, res.optimal);
        } else {
            auto greedy = tokendom::greedy_dominating(tg);
            auto bounds = tokendom::degree_bounds(tg);
            cert = tokendom::certify(tg, greedy, "greedy", bounds.max_degree_lower, false);
        }
    } else {
        throw tokendom::invalid_parameter("unknown method '" + method +
                                          "' (expected exact, greedy or construction)");
    }

    std::ostringstream summary;
    summary << family << " " << n << " " << k << " " << method << " " << cert.size << " "
            << (cert.optimal ? "optimal" : (cert.verified ? "verified" : "unverified"));
    emit(flags, tokendom::certificate_to_json(cert).dump(2) + "\n", summary.str());
    return exit_ok;
}

int run_table(const std::string& experiment, const std::string& n_range, const std::string& k_range,
              std::uint64_t exact_max_vertices, const GlobalFlags& flags) {
    tokendom::TableOptions opt;
    opt.vertex_budget = flags.budget_vertices;
    if (flags.solver_nodes > 0) opt.solver.max_nodes = flags.solver_nodes;
    if (flags.timeout_ms > 0) opt.solver.time_limit = std::chrono::milliseconds(flags.timeout_ms);
    opt.exact_max_vertices = exact_max_vertices;
    std::vector<int> ns = tokendom::parse_range(n_range);
    std::vector<int> ks = k_range.empty() ? std::vector<int>{} : tokendom::parse_range(k_range);
    auto rows = tokendom::run_experiment(experiment, ns, ks, opt);
    std::ostringstream summary;
    summary << experiment << ": " << rows.size() << " rows";
    emit(flags, tokendom::to_csv(rows), summary.str());
    return exit_ok;
}

int run_verify(const std::string& graph_file, const std::string& set_file) {
    std::ifstream gf(graph_file);
    if (!gf) throw tokendom::invalid_parameter("cannot open graph file '" + graph_file + "'");
    std::ifstream sf(set_file);
    if (!sf) throw tokendom::invalid_parameter("cannot open set file '" + set_file + "'");

    tokendom::ordered_json gj, sj;
    try {
        gf >> gj;
        sf >> sj;
    } catch (const nlohmann::json::exception& e) {
        throw tokendom::invalid_parameter(std::string("JSON parse failure: ") + e.what());
    }
    tokendom::ParsedGraph g = tokendom::graph_from_json(gj);
    std::vector<std::uint32_t> ranks;
    for (const auto& member : tokendom::vertex_set_from_json(sj)) ranks.push_back(g.rank_of_labels(member));

    auto check = tokendom::is_dominating(g, ranks);
    if (check.dominating) {
        std::cout << "dominating: " << ranks.size() << " vertices cover " << g.vertex_count() << "\n";
        return exit_ok;
    }
    const auto& witness = g.vertices[*check.witness];
    std::ostringstream w;
    w << "{";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i) w << ",";
        w << witness[i];
    }
    w << "}";
    std::cout << "not dominating: witness " << w.str() << "\n";
    return exit_not_dominating;
}

int run_cover(int n, int k, int l, const std::string& method, const std::string& format,
              const GlobalFlags& flags) {
    tokendom::CoveringDesign d;
    if (method == "bose") {
        if (k != 3 || l != 2) throw tokendom::invalid_parameter("bose requires k=3, l=2");
        d = tokendom::bose_sts(n);
    } else if (method == "skolem") {
        if (k != 3 || l != 2) throw tokendom::invalid_parameter("skolem requires k=3, l=2");
        d = tokendom::skolem_sts(n);
    } else if (method == "auto") {
        if (k == 3 && l == 2 && n % 6 == 3)
            d = tokendom::bose_sts(n);
        else if (k == 3 && l == 2 && n % 6 == 1 && n >= 7)
            d = tokendom::skolem_sts(n);
        else
            d = tokendom::greedy_cover(n, k, l);
    } else if (method == "greedy") {
        d = tokendom::greedy_cover(n, k, l);
    } else {
        throw tokendom::invalid_parameter("unknown method '" + method +
                                          "' (expected greedy, bose, skolem or auto)");
    }

    std::ostringstream summary;
    summary << "(" << n << "," << k << "," << l << ") " << method << ": " << d.blocks.size()
            << " blocks, trivial lower bound " << tokendom::trivial_cover_lower_bound(n, k, l)
            << (d.exact ? ", exact" : "");
    if (format == "text") {
        std::ostringstream text;
        tokendom::design_to_text(d, text);
        emit(flags, text.str(), summary.str());
    } else if (format == "json") {
        emit(flags, tokendom::design_to_json(d).dump(2) + "\n", summary.str());
    } else {
        throw tokendom::invalid_parameter("unknown format '" + format + "' (expected json or text)");
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"token graphs of stars and complete graphs: domination numbers, bounds and coverings"};
    app.require_subcommand(1);

    GlobalFlags flags;

    std::string family, method = "exact", format = "json", experiment, n_range, k_range;
    std::string graph_file, set_file;
    int n = 0, k = 0, l = 0, di = 1, dj = 2;
    std::uint64_t exact_max_vertices = 120;

    CLI::App* build = app.add_subcommand("build", "build a token graph and export it");
    build->add_option("family", family, "star or complete")->required();
    build->add_option("n", n, "family parameter")->required();
    build->add_option("k", k, "token count")->required();
    build->add_option("--format", format, "json or dot (default json)");
    add_global_flags(build, flags);

    CLI::App* gamma = app.add_subcommand("gamma", "compute or construct a dominating set");
    gamma->add_option("family", family)->required();
    gamma->add_option("n", n)->required();
    gamma->add_option("k", k)->required();
    gamma->add_option("--method", method, "exact, greedy or construction (default exact)");
    gamma->add_option("--i", di, "star F_2 construction index i (default 1)");
    gamma->add_option("--j", dj, "star F_2 construction index j (default 2)");
    add_global_flags(gamma, flags);

    CLI::App* table = app.add_subcommand("table", "reproduce a result table as CSV");
    table->add_option("experiment", experiment, "star-f2 | star-fk | complete-f2 | complete-f3 | complete-fk")
        ->required();
    table->add_option("--n", n_range, "n range: a..b or comma list")->required();
    table->add_option("--k", k_range, "k range for the fk experiments");
    table->add_option("--exact-max-vertices", exact_max_vertices,
                      "run the exact solver only on token graphs at most this large (default 120)");
    add_global_flags(table, flags);

    CLI::App* verify = app.add_subcommand("verify", "check a vertex set against a graph file");
    verify->add_option("graph", graph_file, "graph JSON file")->required();
    verify->add_option("set", set_file, "vertex-set or certificate JSON file")->required();

    CLI::App* cover = app.add_subcommand("cover", "build an (n,k,l) covering design");
    cover->add_option("n", n)->required();
    cover->add_option("k", k)->required();
    cover->add_option("l", l)->required();
    cover->add_option("--method", method, "greedy, bose, skolem or auto (default: auto)")
        ->default_val("auto");
    cover->add_option("--format", format, "json or text (default json)");
    add_global_flags(cover, flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return run_build(family, n, k, format, flags);
        if (gamma->parsed()) return run_gamma(family, n, k, method, di, dj, flags);
        if (table->parsed()) return run_table(experiment, n_range, k_range, exact_max_vertices, flags);
        if (verify->parsed()) return run_verify(graph_file, set_file);
        if (cover->parsed()) return run_cover(n, k, l, method, format, flags);
    } catch (const tokendom::resource_limit& e) {
        std::cerr << "resource limit: " << e.what()
                  << " (adjust --budget-vertices / --solver-nodes / --timeout-ms)\n";
        return exit_resource_limit;
    } catch (const tokendom::invalid_parameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_ok;
}
