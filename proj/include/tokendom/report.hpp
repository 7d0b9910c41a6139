#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tokendom/constructions.hpp"
#include "tokendom/domination.hpp"
#include "tokendom/errors.hpp"
#include "tokendom/exact_solver.hpp"
#include "tokendom/token_graph.hpp"

namespace tokendom {

struct ExperimentRow {
    std::string family;
    int n = 0;
    int k = 0;
    std::string method;
    std::uint64_t size = 0;
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    std::optional<std::uint64_t> exact_gamma;
    bool verified = false;
    std::uint64_t runtime_ms = 0;
};

struct TableOptions {
    std::uint64_t vertex_budget = default_vertex_budget;
    SolverLimits solver;
    std::uint64_t exact_max_vertices = 120; // run the exact solver only below this

    // Node-capped rather than time-capped so that which rows carry an
    // exact_gamma value is machine-independent. Rows whose search would go
    // deeper leave the column empty.
    TableOptions() { solver.max_nodes = 2'000'000; }
};

/// "a..b" (inclusive) or a comma list "a,b,c".
inline std::vector<int> parse_range(const std::string& text) {
    std::vector<int> out;
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        int a = std::stoi(text.substr(0, dots));
        int b = std::stoi(text.substr(dots + 2));
        if (b < a) throw invalid_parameter("range '" + text + "': end before start");
        for (int v = a; v <= b; ++v) out.push_back(v);
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw invalid_parameter("range '" + text + "': no values");
    return out;
}

namespace detail {

inline std::string instance_name(const std::string& family, int n, int k) {
    return family + " n=" + std::to_string(n) + " k=" + std::to_string(k);
}

} // namespace detail

/// One table row: run the construction, verify it, bracket it with the
/// closed-form bounds, and add the solver's gamma where the graph is small
/// enough. A failed verification aborts naming the instance.
/// force_fk_route keeps complete-fk sweeps on the MIS construction and the
/// general k-squared/alpha sandwich even at k = 3.
inline ExperimentRow experiment_row(const std::string& family, int n, int k, const TableOptions& opt,
                                    bool force_fk_route = false) {
    auto start = std::chrono::steady_clock::now();
    DominationCertificate cert;
    std::uint64_t lower = 0, upper = 0;
    if (force_fk_route && family == "complete") {
        cert = complete_fk_construction(n, k, opt.vertex_budget);
        lower = complete_fk_strict_lower(n, k);
        upper = complete_fk_alpha_upper(n, k);
    } else {
        cert = construction_certificate(family, n, k, opt.vertex_budget);
        GammaBounds bounds = theoretical_gamma(family, n, k);
        lower = bounds.exact ? *bounds.exact : bounds.lower;
        upper = bounds.exact ? *bounds.exact : bounds.upper;
    }

    ExperimentRow row;
    row.family = family;
    row.n = n;
    row.k = k;
    row.method = cert.method;
    row.size = cert.size;
    row.lower = lower;
    row.upper = upper;
    row.verified = cert.verified;

    int ground = family == "star" ? n + 1 : n;
    std::uint64_t vertices = binomial(static_cast<unsigned>(ground), static_cast<unsigned>(k));
    if (vertices <= opt.vertex_budget && !cert.verified)
        throw std::runtime_error("construction failed verification on " + detail::instance_name(family, n, k));

    if (vertices <= opt.exact_max_vertices && vertices <= opt.solver.max_vertices) {
        BaseGraph base = family == "star" ? BaseGraph::star(n) : BaseGraph::complete(n);
        TokenGraph tg(std::move(base), k, Mode::Explicit, opt.vertex_budget);
        SolveResult sol = exact_min_dominating(tg, opt.solver);
        if (sol.optimal) row.exact_gamma = sol.set.size();
    }

    auto elapsed = std::chrono::steady_clock::now() - start;
    row.runtime_ms =
        static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
    return row;
}

/// Rows for one named experiment over a range of n (and k where it applies).
inline std::vector<ExperimentRow> run_experiment(const std::string& experiment, const std::vector<int>& ns,
                                                 const std::vector<int>& ks, const TableOptions& opt = {}) {
    std::vector<ExperimentRow> rows;
    for (int n : ns) {
        if (experiment == "star-f2") {
            rows.push_back(experiment_row("star", n, 2, opt));
        } else if (experiment == "complete-f2") {
            rows.push_back(experiment_row("complete", n, 2, opt));
        } else if (experiment == "complete-f3") {
            rows.push_back(experiment_row("complete", n, 3, opt));
        } else if (experiment == "star-fk" || experiment == "complete-fk") {
            if (ks.empty()) throw invalid_parameter(experiment + " needs --k");
            for (int k : ks) {
                if (2 * k > n) continue; // sweeps stay inside the k <= n/2 regime
                rows.push_back(experiment_row(experiment == "star-fk" ? "star" : "complete", n, k, opt,
                                              experiment == "complete-fk"));
            }
        } else {
            throw invalid_parameter("unknown experiment '" + experiment + "'");
        }
    }
    return rows;
}

inline constexpr const char* csv_header = "family,n,k,method,size,lower,upper,exact_gamma,verified,runtime_ms";

inline std::string to_csv_row(const ExperimentRow& r) {
    std::ostringstream ss;
    ss << r.family << "," << r.n << "," << r.k << "," << r.method << "," << r.size << "," << r.lower << ","
       << r.upper << ",";
    if (r.exact_gamma) ss << *r.exact_gamma;
    ss << "," << (r.verified ? "true" : "false") << "," << r.runtime_ms;
    return ss.str();
}

inline std::string to_csv(const std::vector<ExperimentRow>& rows) {
    std::string out = std::string(csv_header) + "\n";
    for (const auto& r : rows) out += to_csv_row(r) + "\n";
    return out;
}

} // namespace tokendom
