#include "ctxkit/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "ctxkit/avn.hpp"
#include "ctxkit/inequalities.hpp"
#include "ctxkit/magic.hpp"
#include "ctxkit/random.hpp"
#include "ctxkit/rays.hpp"
#include "ctxkit/report.hpp"
#include "ctxkit/states.hpp"
#include "ctxkit/theta.hpp"

namespace ctxkit {

namespace {

const double kSqrt5 = std::sqrt(5.0);

// Collects requirement outcomes and a deterministic detail string.
class Checks {
public:
    void value(const std::string& key, double v) {
        sep();
        detail_ << key << "=" << format_number(v);
    }
    void note(const std::string& text) {
        sep();
        detail_ << text;
    }
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok_ = false;
            sep();
            detail_ << "FAIL(" << what << ")";
        }
    }
    void require_close(const std::string& key, double got, double want, double tol) {
        value(key, got);
        require(std::abs(got - want) <= tol, key + " within " + format_number(tol) + " of " +
                                                 format_number(want));
    }
    bool ok() const { return ok_; }
    std::string detail() const { return detail_.str(); }

private:
    void sep() {
        if (!first_) detail_ << " ";
        first_ = false;
    }
    bool ok_ = true;
    bool first_ = true;
    std::ostringstream detail_;
};

CriterionResult finish(int index, const std::string& name, const Checks& c, double seconds) {
    return CriterionResult{index, name, c.ok(), c.detail(), seconds};
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

int brute_force_alpha(const Graph& g) {
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n); ++mask) {
        bool independent = true;
        for (int v = 0; v < g.n && independent; ++v)
            if ((mask >> v) & 1 && (g.adj[static_cast<size_t>(v)] & mask)) independent = false;
        if (independent) best = std::max(best, std::popcount(mask));
    }
    return best;
}

CriterionResult criterion1() {
    Timer t;
    Checks c;
    RaySet rs = builtin_rayset("cabello18");
    std::vector<Basis> bases = enumerate_bases(rs);
    c.value("bases", static_cast<double>(bases.size()));
    c.require(bases.size() == 9, "exactly 9 orthonormal bases");
    std::vector<int> membership(rs.rays.size(), 0);
    for (const Basis& b : bases)
        for (int m : b.member_indices) ++membership[static_cast<size_t>(m)];
    bool all_two = true;
    for (int m : membership) all_two = all_two && m == 2;
    c.require(all_two, "every ray sits in exactly 2 bases");
    Graph g = exclusivity_graph(rs);
    c.require(!ks_assignment_search(g, bases).has_value(), "no noncontextual assignment exists");
    return finish(1, "eighteen-ray parity structure", c, t.seconds());
}

CriterionResult criterion2(Rng& rng) {
    Timer t;
    Checks c;
    RaySet rs = builtin_rayset("yu_oh13");
    Graph g = exclusivity_graph(rs);
    std::vector<Basis> bases = enumerate_bases(rs);
    auto assignment = ks_assignment_search(g, bases);
    c.require(assignment.has_value(), "coloring search finds an assignment");
    if (assignment)
        c.require(ks_assignment_valid(g, bases, *assignment), "assignment re-validates");
    CMatrix target = CMatrix::identity(3) * cplx(29.0 / 3.0, 0.0);
    double op_err = max_abs_diff(yu_oh_operator(), target);
    c.value("operator_deviation", op_err);
    c.require(op_err <= 1e-9, "witness operator equals 29/3 times identity");
    c.require_close("value_mixed", yu_oh_value(DensityMatrix::maximally_mixed(3)), 29.0 / 3.0,
                    1e-8);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k)
        worst = std::max(worst, std::abs(yu_oh_value(rng.pure_state(3)) - 29.0 / 3.0));
    c.value("pure_state_deviation", worst);
    c.require(worst <= 1e-8, "state independence on 20 random pure states");
    double nchv = yu_oh_nchv_bound();
    c.value("assignment_max", nchv);
    c.require(nchv == 9.0, "assignment maximum is exactly 9");
    return finish(2, "thirteen-ray coloring and bound", c, t.seconds());
}

CriterionResult criterion3() {
    Timer t;
    Checks c;
    RaySet rs = builtin_rayset("yu_oh13");
    CMatrix hsum = CMatrix::zero(3, 3);
    for (int k = 0; k < 4; ++k) hsum = hsum + projector_of(rs.rays[static_cast<size_t>(k)]).matrix;
    double herr = max_abs_diff(hsum, CMatrix::identity(3) * cplx(4.0 / 3.0, 0.0));
    c.value("h_sum_deviation", herr);
    c.require(herr <= 1e-12, "four h-projectors sum to 4/3 identity");

    const OrthogonalRepresentation& rep = icosahedron_representation();
    CMatrix psum = CMatrix::zero(4, 4);
    for (const Ray& r : rep.rays.rays) psum = psum + projector_of(r).matrix;
    std::vector<double> spec = hermitian_spectrum(psum);
    const double expected[4] = {3.0 * (kSqrt5 - 1.0), 5.0 - kSqrt5, 5.0 - kSqrt5, 5.0 - kSqrt5};
    double worst = 0.0;
    for (int k = 0; k < 4; ++k)
        worst = std::max(worst, std::abs(spec[static_cast<size_t>(k)] - expected[k]));
    c.value("spectrum_deviation", worst);
    c.require(worst <= 1e-4, "projector-sum spectrum {3(sqrt5-1), 5-sqrt5 x3}");
    return finish(3, "projector-sum identities", c, t.seconds());
}

CriterionResult criterion4(Rng& rng) {
    Timer t;
    Checks c;
    Graph c5 = builtin_graph("c5");
    int a5 = independence_number(c5);
    c.value("alpha_c5", a5);
    c.require(a5 == 2 && brute_force_alpha(c5) == 2, "alpha(C5) = 2, brute force agrees");
    c.require_close("theta_c5", lovasz_theta(c5).theta, kSqrt5, 1e-5);

    Graph ico = builtin_graph("icosahedron");
    int a12 = independence_number(ico);
    c.value("alpha_icosahedron", a12);
    c.require(a12 == 3 && brute_force_alpha(ico) == 3, "alpha(icosahedron) = 3");
    c.require_close("theta_icosahedron", icosahedron_certificate().theta, 3.0 * (kSqrt5 - 1.0),
                    1e-4);

    double worst_slack = -1e300;
    bool sandwich = true;
    for (int trial = 0; trial < 200; ++trial) {
        int n = rng.uniform_int(1, 16);
        Graph g = rng.graph(n);
        int alpha = brute_force_alpha(g);
        if (independence_number(g) != alpha) {
            sandwich = false;
            c.note("search_disagrees_at_trial=" + std::to_string(trial));
            break;
        }
        double theta = lovasz_theta(g).theta;
        worst_slack = std::max(worst_slack, alpha - theta);
        if (alpha > theta + 1e-6) {
            sandwich = false;
            break;
        }
    }
    c.value("worst_alpha_minus_theta", worst_slack);
    c.require(sandwich, "alpha <= theta on 200 random graphs");
    return finish(4, "graph constants and sandwich", c, t.seconds());
}

CriterionResult criterion5(Rng& rng) {
    Timer t;
    Checks c;
    c.require_close("value_mixed", icosahedron_value(DensityMatrix::maximally_mixed(4), true), 3.0,
                    1e-6);
    c.require_close("value_aligned_pure", icosahedron_value(rng.pure_state(4), true),
                    3.0 * (kSqrt5 - 1.0), 1e-4);
    double worst_excess = -1e300;
    for (int k = 0; k < 100; ++k) {
        DensityMatrix rho = rng.density(4, rng.uniform_int(1, 4));
        double v = icosahedron_value(rho, true);
        double bound = icosahedron_purity_bound(rho);
        worst_excess = std::max(worst_excess, v - bound);
    }
    c.value("worst_value_minus_bound", worst_excess);
    c.require(worst_excess <= 1e-6, "purity bound respected on 100 random states");
    return finish(5, "twelve-ray witness vs purity", c, t.seconds());
}

CriterionResult criterion6() {
    Timer t;
    Checks c;
    AVNSystem sys = builtin_avn("avn_cabello01");
    DensityMatrix xi = avn_designated_state("avn_cabello01");
    double worst = 0.0;
    for (const AVNClause& clause : sys.clauses) {
        double e = stabilizer_expectation(xi, sys.clause_product(clause));
        worst = std::max(worst, std::abs(e - clause.asserted_value));
    }
    c.value("expectation_deviation", worst);
    c.require(worst <= 1e-9, "all 9 clause expectations match the asserted signs");
    c.require(avn_parity_check(sys).contradiction, "four-qubit system is contradictory");
    c.require(avn_parity_check(builtin_avn("phip_huang03")).contradiction,
              "two-qubit system is contradictory");

    AVNSystem bell = builtin_avn("bell_stabilizer");
    AVNVerdict v = avn_parity_check(bell);
    c.require(!v.contradiction, "stabilizer control is consistent");
    bool model_ok = !v.model.empty();
    for (const AVNClause& clause : bell.clauses) {
        int prod = 1;
        for (const std::string& f : clause.factors) prod *= v.model.at(f);
        model_ok = model_ok && prod == clause.asserted_value;
    }
    c.require(model_ok, "returned model satisfies every clause");
    DensityMatrix phi = avn_designated_state("bell_stabilizer");
    double bell_worst = 0.0;
    for (const AVNClause& clause : bell.clauses)
        bell_worst = std::max(bell_worst, std::abs(stabilizer_expectation(phi, bell.clause_product(
                                                       clause)) -
                                                   clause.asserted_value));
    c.require(bell_worst <= 1e-9, "control expectations match on the designated state");
    return finish(6, "parity systems", c, t.seconds());
}

CriterionResult criterion7() {
    Timer t;
    Checks c;
    c.require_close("value_maxent", clfc_value(builtin_state("maxent3x3", 9)), 1.0 / 9.0, 1e-9);
    double mixed = clfc_value(DensityMatrix::maximally_mixed(9));
    c.value("value_mixed", mixed);
    c.require(mixed <= 0.0, "maximally mixed state stays classical");
    return finish(7, "conditional-probability witness", c, t.seconds());
}

CriterionResult criterion8() {
    Timer t;
    Checks c;
    DensityMatrix xi = bell_psi_minus_crossed();
    c.require_close("omega", activation_omega(xi), 18.0, 1e-8);
    int lhv = activation_lhv_bound();
    c.value("lhv_max", lhv);
    c.require(lhv == 16, "exhaustive LHV maximum is exactly 16");
    double residual = activation_no_signaling_residual(xi);
    c.value("no_signaling_residual", residual);
    c.require(residual <= 1e-9, "dephasing leaves all 12 cross terms unchanged");
    return finish(8, "activation of nonlocality", c, t.seconds());
}

CriterionResult criterion9(Rng& rng) {
    Timer t;
    Checks c;
    double mub_dev = mub_overlap_deviation();
    c.value("mub_overlap_deviation", mub_dev);
    c.require(mub_dev <= 1e-10, "cross-basis overlaps all 1/3");
    double nchv = nchv_bound_magic();
    c.value("nchv_bound", nchv);
    c.require(nchv == 0.0, "81-assignment enumeration gives exactly 0");
    auto [qmax, optimal] = quantum_max_magic();
    c.require_close("quantum_max", qmax, (kSqrt5 - 1.0) / 2.0, 1e-8);
    double opt = quantum_max_magic_optimizer(rng);
    c.value("optimizer_max", opt);
    c.require(std::abs(opt - qmax) <= 1e-6, "random-restart optimizer agrees");
    c.require_close("value_mixed", magic_value(DensityMatrix::maximally_mixed(3)), -1.0 / 3.0,
                    1e-9);
    c.require(std::abs(magic_value(optimal) - qmax) <= 1e-9, "returned optimum reproduces value");

    CMatrix phase = CMatrix::zero(3, 3);
    phase(0, 0) = 1.0;
    phase(1, 1) = 1.0;
    phase(2, 2) = cplx(std::cos(2.0 * 3.14159265358979323846 / 3.0),
                       std::sin(2.0 * 3.14159265358979323846 / 3.0));
    std::vector<DensityMatrix> samples;
    for (int k = 0; k < 5; ++k) samples.push_back(rng.pure_state(3));
    for (int k = 0; k < 4; ++k) samples.push_back(rng.density(3, rng.uniform_int(1, 3)));
    ConjugationReport rep = unitary_conjugation_check(phase, samples);
    c.require(rep.permutes, "phase gate permutes the witness set");
    bool nontrivial = false;
    for (size_t i = 0; i < rep.permutation.size(); ++i)
        if (rep.permutation[i] != static_cast<int>(i)) nontrivial = true;
    c.require(nontrivial, "permutation is not the identity");
    c.value("max_value_shift", rep.max_value_shift);
    c.require(rep.values_invariant, "witness maximum invariant on 9 sample states");
    return finish(9, "magic witness", c, t.seconds());
}

CriterionResult criterion10(Rng& rng) {
    Timer t;
    Checks c;
    double worst_gap = 0.0;
    for (int k = 0; k < 50; ++k) {
        int d = rng.uniform_int(2, 6);
        DensityMatrix rho = rng.density(d, rng.uniform_int(1, d));
        Ray ri = Ray::from_floats("i", rng.unit_vector(d));
        Ray rj = Ray::from_floats("j", rng.unit_vector(d));
        worst_gap = std::max(worst_gap,
                             std::abs(reprep_joint(rho, ri, rj) - sequential_joint(rho, ri, rj)));
    }
    c.value("reprep_deviation", worst_gap);
    c.require(worst_gap <= 1e-10, "repreparation identity on 50 random instances");

    double worst_signal = 0.0;
    for (const char* name : {"cabello18", "yu_oh13", "kcbs5"}) {
        RaySet rs = builtin_rayset(name);
        Graph g = exclusivity_graph(rs);
        DensityMatrix mixed = DensityMatrix::maximally_mixed(rs.dim);
        DensityMatrix random_state = rng.density(rs.dim, rng.uniform_int(1, rs.dim));
        for (auto [i, j] : g.edges()) {
            const Ray& a = rs.rays[static_cast<size_t>(i)];
            const Ray& b = rs.rays[static_cast<size_t>(j)];
            for (const DensityMatrix* rho : {&mixed, &random_state}) {
                worst_signal = std::max(worst_signal, std::abs(signaling_factor(*rho, a, b)));
                worst_signal = std::max(worst_signal, std::abs(signaling_factor(*rho, b, a)));
            }
        }
    }
    c.value("worst_signaling_factor", worst_signal);
    c.require(worst_signal <= 1e-12, "no signaling across any builtin edge");
    return finish(10, "repreparation and signaling", c, t.seconds());
}

std::vector<CriterionResult> run_first_ten(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<CriterionResult> out;
    out.push_back(criterion1());
    out.push_back(criterion2(rng));
    out.push_back(criterion3());
    out.push_back(criterion4(rng));
    out.push_back(criterion5(rng));
    out.push_back(criterion6());
    out.push_back(criterion7());
    out.push_back(criterion8());
    out.push_back(criterion9(rng));
    out.push_back(criterion10(rng));
    return out;
}

} // namespace

std::string serialize_results(const std::vector<CriterionResult>& results) {
    json arr = json::array();
    for (const CriterionResult& r : results) {
        json j;
        j["criterion"] = r.index;
        j["name"] = r.name;
        j["passed"] = r.passed;
        j["detail"] = r.detail;
        arr.push_back(j);
    }
    return dump_document(arr);
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    std::vector<CriterionResult> results = run_first_ten(seed);

    Timer t;
    Checks c;
    std::vector<CriterionResult> rerun = run_first_ten(seed);
    bool identical = serialize_results(results) == serialize_results(rerun);
    c.note(identical ? "rerun_identical=yes" : "rerun_identical=no");
    c.require(identical, "same seed reproduces byte-identical results");
    results.push_back(finish(11, "determinism", c, t.seconds()));
    return results;
}

} // namespace ctxkit
