#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "ctxkit/acceptance.hpp"
#include "ctxkit/avn.hpp"
#include "ctxkit/inequalities.hpp"
#include "ctxkit/magic.hpp"
#include "ctxkit/rays.hpp"
#include "ctxkit/report.hpp"
#include "ctxkit/states.hpp"
#include "ctxkit/theta.hpp"

namespace {

using ctxkit::json;

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void apply_tol_override(std::optional<double> tol) {
    if (!tol) return;
    if (*tol < 0.0) throw ctxkit::DomainError("tolerance must be nonnegative");
    ctxkit::tolerances().float_edge = *tol;
    ctxkit::tolerances().violation_margin = *tol;
}

// A ray file starts with "dim <d>", a graph file with "n <count>".
bool sniff_ray_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ctxkit::ParseError("cannot open input file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t b = line.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        return line.compare(b, 3, "dim") == 0;
    }
    throw ctxkit::ParseError("input file '" + path + "' is empty");
}

int cmd_graph(const std::string& path, std::optional<double> tol, const std::string& format) {
    apply_tol_override(tol);
    Stopwatch watch;
    json doc = ctxkit::make_document("graph");
    doc["input"] = path;

    ctxkit::Graph g;
    std::vector<ctxkit::Basis> bases;
    bool have_bases = false;
    if (sniff_ray_file(path)) {
        ctxkit::RaySet rs = ctxkit::parse_rayset_file(path);
        g = ctxkit::exclusivity_graph(rs);
        bases = ctxkit::enumerate_bases(rs);
        have_bases = true;
    } else {
        g = ctxkit::parse_graph_file(path);
    }

    int alpha = ctxkit::independence_number(g);
    ctxkit::ThetaCertificate cert = ctxkit::lovasz_theta(g);
    ctxkit::validate_theta_certificate(g, cert, 1e-9);

    doc["vertices"] = g.n;
    doc["edges"] = g.edge_count();
    doc["alpha"] = alpha;
    doc["theta"] = ctxkit::format_number(cert.theta);
    doc["theta_over_alpha"] = ctxkit::format_number(cert.theta / alpha);
    std::string verdict = "no bases registered";
    if (have_bases) {
        doc["basis_count"] = static_cast<int>(bases.size());
        if (!bases.empty()) {
            bool colorable = ctxkit::ks_assignment_search(g, bases).has_value();
            verdict = colorable ? "KS-colorable" : "KS-uncolorable";
        }
        doc["ks_verdict"] = verdict;
    }

    if (format == "json") {
        std::cout << ctxkit::dump_document(doc);
    } else {
        std::printf("input: %s\n", path.c_str());
        std::printf("vertices: %d  edges: %d\n", g.n, g.edge_count());
        std::printf("independence number alpha: %d\n", alpha);
        std::printf("lovasz theta: %s\n", ctxkit::format_number(cert.theta).c_str());
        std::printf("theta / alpha: %s\n", ctxkit::format_number(cert.theta / alpha).c_str());
        if (have_bases) {
            std::printf("orthonormal bases: %zu\n", bases.size());
            std::printf("coloring verdict: %s\n", verdict.c_str());
        }
        std::printf("elapsed: %.3f s\n", watch.seconds());
    }
    return 0;
}

const double kSqrt5 = std::sqrt(5.0);

int native_dimension(const std::string& name) {
    if (name == "yo" || name == "csw" || name == "magic") return 3;
    if (name == "icosahedron") return 4;
    if (name == "clfc") return 9;
    if (name == "omega" || name == "avn") return 16;
    throw ctxkit::DomainError("unknown inequality '" + name + "'");
}

ctxkit::DensityMatrix load_state(const std::string& spec, int native_dim) {
    const char* tags[] = {"mixed", "xi", "phi+", "maxent3x3", "magicopt"};
    for (const char* tag : tags)
        if (spec == tag) return ctxkit::builtin_state(spec, native_dim);
    return ctxkit::parse_state_file(spec);
}

int cmd_ineq(const std::string& name, const std::string& state_spec, std::optional<double> tol,
             const std::string& format) {
    apply_tol_override(tol);
    Stopwatch watch;
    int dim = native_dimension(name);
    // Both the parity system and the activation quantity designate a
    // two-singlet state called xi, but they pair the qubits differently:
    // the parity clauses stabilize singlets on (0,1),(2,3) while the
    // activation correlations need them across the party split, (0,2),(1,3).
    // The tag follows the inequality it feeds.
    ctxkit::DensityMatrix rho =
        (name == "avn" && state_spec == "xi")
            ? ctxkit::avn_designated_state("avn_cabello01")
            : load_state(state_spec, dim);
    if (rho.dim != dim)
        throw ctxkit::DimensionError("state has dimension " + std::to_string(rho.dim) +
                                     " but '" + name + "' needs " + std::to_string(dim));

    ctxkit::WitnessReport report;
    json extra;
    if (name == "yo") {
        report = ctxkit::make_witness_report("yo", ctxkit::yu_oh_value(rho),
                                             ctxkit::yu_oh_nchv_bound(), 29.0 / 3.0);
    } else if (name == "csw") {
        ctxkit::RaySet rs = ctxkit::builtin_rayset("kcbs5");
        ctxkit::Graph g = ctxkit::exclusivity_graph(rs);
        report = ctxkit::make_witness_report(
            "csw", ctxkit::csw_value(rs, g, rho),
            ctxkit::independence_number(g), kSqrt5);
    } else if (name == "icosahedron") {
        report = ctxkit::make_witness_report("icosahedron", ctxkit::icosahedron_value(rho, true),
                                             3.0, 3.0 * (kSqrt5 - 1.0));
        extra["purity_bound"] = ctxkit::format_number(ctxkit::icosahedron_purity_bound(rho));
    } else if (name == "clfc") {
        report = ctxkit::make_witness_report("clfc", ctxkit::clfc_value(rho), 0.0, 1.0 / 9.0);
    } else if (name == "omega") {
        report = ctxkit::make_witness_report("omega", ctxkit::activation_omega(rho),
                                             ctxkit::activation_lhv_bound(), 18.0);
    } else if (name == "magic") {
        report = ctxkit::make_witness_report("magic", ctxkit::magic_value(rho), 0.0,
                                             (kSqrt5 - 1.0) / 2.0);
        auto [ax, az] = ctxkit::magic_argmax(rho);
        extra["argmax"] = {{"x", ax}, {"z", az}};
    } else if (name == "avn") {
        ctxkit::AVNSystem sys = ctxkit::builtin_avn("avn_cabello01");
        report = ctxkit::make_witness_report("avn", ctxkit::avn_sum_value(sys, rho),
                                             ctxkit::avn_classical_bound(sys), 9.0);
        ctxkit::AVNVerdict verdict = ctxkit::avn_parity_check(sys);
        extra["contradiction"] = verdict.contradiction;
    } else {
        throw ctxkit::DomainError("unknown inequality '" + name + "'");
    }

    if (format == "json") {
        json doc = ctxkit::make_document("ineq");
        doc["state"] = state_spec;
        doc["report"] = ctxkit::witness_json(report);
        for (auto& [key, val] : extra.items()) doc[key] = val;
        std::cout << ctxkit::dump_document(doc);
    } else {
        std::printf("inequality: %s  (state: %s)\n", report.name.c_str(), state_spec.c_str());
        std::printf("value: %s\n", ctxkit::format_number(report.evaluated_value).c_str());
        std::printf("classical bound: %s\n", ctxkit::format_number(report.classical_bound).c_str());
        std::printf("quantum reference: %s\n",
                    ctxkit::format_number(report.quantum_reference).c_str());
        std::printf("violated: %s (margin %s)\n", report.violated ? "yes" : "no",
                    ctxkit::format_number(report.margin).c_str());
        for (auto& [key, val] : extra.items()) {
            std::string shown = val.is_string() ? val.get<std::string>() : val.dump();
            std::printf("%s: %s\n", key.c_str(), shown.c_str());
        }
        std::printf("elapsed: %.3f s\n", watch.seconds());
    }
    return 0;
}

int cmd_avn(const std::string& path, const std::string& format) {
    Stopwatch watch;
    ctxkit::AVNSystem sys = ctxkit::parse_avn_file(path);
    ctxkit::AVNVerdict v = ctxkit::avn_parity_check(sys);

    if (format == "json") {
        json doc = ctxkit::make_document("avn");
        doc["input"] = path;
        doc["qubits"] = sys.n_qubits;
        doc["atoms"] = static_cast<int>(sys.atoms.size());
        doc["clauses"] = static_cast<int>(sys.clauses.size());
        doc["all_atoms_even"] = v.all_atoms_even;
        doc["asserted_product"] = v.asserted_product;
        doc["contradiction"] = v.contradiction;
        if (!v.contradiction) {
            json model;
            for (const auto& [atom, val] : v.model) model[atom] = val;
            doc["model"] = model;
        }
        std::cout << ctxkit::dump_document(doc);
    } else {
        std::printf("input: %s\n", path.c_str());
        std::printf("qubits: %d  atoms: %zu  clauses: %zu\n", sys.n_qubits, sys.atoms.size(),
                    sys.clauses.size());
        std::printf("every atom appears an even number of times: %s\n",
                    v.all_atoms_even ? "yes" : "no");
        std::printf("product of asserted values: %+d\n", v.asserted_product);
        if (v.contradiction) {
            std::printf("verdict: contradiction (no deterministic assignment exists)\n");
        } else {
            std::printf("verdict: consistent; one satisfying assignment:\n");
            for (const auto& [atom, val] : v.model)
                std::printf("  %s = %+d\n", atom.c_str(), val);
        }
        std::printf("elapsed: %.3f s\n", watch.seconds());
    }
    return 0;
}

int cmd_selftest(std::uint64_t seed, const std::string& format) {
    std::vector<ctxkit::CriterionResult> results = ctxkit::run_acceptance(seed);
    bool all_passed = true;
    for (const auto& r : results) all_passed = all_passed && r.passed;

    if (format == "text") {
        for (const auto& r : results)
            std::printf("criterion %2d [%s] %s: %s (%.3f s)\n", r.index,
                        r.passed ? "pass" : "FAIL", r.name.c_str(), r.detail.c_str(), r.seconds);
        std::printf("selftest: %s\n", all_passed ? "all criteria passed" : "FAILURES PRESENT");
    } else {
        json doc = ctxkit::make_document("selftest");
        doc["seed"] = seed;
        json arr = json::array();
        for (const auto& r : results) {
            json j;
            j["criterion"] = r.index;
            j["name"] = r.name;
            j["passed"] = r.passed;
            j["detail"] = r.detail;
            arr.push_back(j);
        }
        doc["criteria"] = arr;
        doc["passed"] = all_passed;
        std::cout << ctxkit::dump_document(doc);
    }
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        ctxkit::apply_tolerance_env();
    } catch (const ctxkit::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    CLI::App app{"ctxkit: quantum contextuality analysis toolkit"};
    app.require_subcommand(1);

    std::string graph_input, graph_format = "text";
    std::optional<double> graph_tol;
    CLI::App* graph = app.add_subcommand("graph", "analyze a ray set or exclusivity graph");
    graph->add_option("file", graph_input, "ray file (dim header) or graph file (n header)")
        ->required();
    graph->add_option("--tol", graph_tol, "override edge/violation tolerance");
    graph->add_option("--format", graph_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string ineq_name, ineq_state, ineq_format = "text";
    std::optional<double> ineq_tol;
    CLI::App* ineq = app.add_subcommand("ineq", "evaluate a noncontextuality inequality");
    ineq->add_option("name", ineq_name, "yo | csw | icosahedron | clfc | omega | magic | avn")
        ->required();
    ineq->add_option("--state", ineq_state, "builtin tag or state file")->required();
    ineq->add_option("--tol", ineq_tol, "override edge/violation tolerance");
    ineq->add_option("--format", ineq_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string avn_input, avn_format = "text";
    CLI::App* avn = app.add_subcommand("avn", "parity-check an operator constraint system");
    avn->add_option("file", avn_input, "constraint system file")->required();
    avn->add_option("--format", avn_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::uint64_t seed = 7;
    std::string selftest_format = "json";
    CLI::App* selftest = app.add_subcommand("selftest", "run the full acceptance suite");
    selftest->add_option("--seed", seed, "seed for randomized property checks");
    selftest->add_option("--format", selftest_format, "json (default) or text")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;   // normalize CLI11's parse-error codes
    }

    try {
        if (graph->parsed()) return cmd_graph(graph_input, graph_tol, graph_format);
        if (ineq->parsed()) return cmd_ineq(ineq_name, ineq_state, ineq_tol, ineq_format);
        if (avn->parsed()) return cmd_avn(avn_input, avn_format);
        if (selftest->parsed()) return cmd_selftest(seed, selftest_format);
    } catch (const ctxkit::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
