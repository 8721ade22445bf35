#include "ctxkit/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ctxkit {

WitnessReport make_witness_report(std::string name, double value, double classical_bound,
                                  double quantum_reference) {
    WitnessReport r;
    r.name = std::move(name);
    r.evaluated_value = value;
    r.classical_bound = classical_bound;
    r.quantum_reference = quantum_reference;
    r.margin = value - classical_bound;
    r.violated = value > classical_bound + tolerances().violation_margin;
    return r;
}

namespace {

// Split a +-1 observable into its eigenprojectors. Every eigenvalue must sit
// within 1e-8 of +1 or -1.
std::pair<CMatrix, CMatrix> plus_minus_split(const CMatrix& obs, int dim) {
    if (obs.rows != dim || obs.cols != dim)
        throw DimensionError("observable dimension does not match the state");
    EigenSystem es = hermitian_eigensystem(obs);
    CMatrix plus = CMatrix::zero(dim, dim);
    CMatrix minus = CMatrix::zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        double lam = es.values[static_cast<size_t>(k)];
        CMatrix* target = nullptr;
        if (std::abs(lam - 1.0) <= 1e-8) target = &plus;
        else if (std::abs(lam + 1.0) <= 1e-8) target = &minus;
        else throw DomainError("observable spectrum is not +-1");
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                (*target)(i, j) += es.vectors(i, k) * std::conj(es.vectors(j, k));
    }
    return {plus, minus};
}

double real_trace_product(const CMatrix& a, const CMatrix& b) {
    // tr(a b) without forming the product matrix.
    double s = 0.0;
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) s += (a(i, k) * b(k, i)).real();
    return s;
}

} // namespace

double sequential_correlation(const DensityMatrix& rho, const CMatrix& A, const CMatrix& B) {
    const int d = rho.dim;
    auto [pa, ma] = plus_minus_split(A, d);
    auto [pb, mb] = plus_minus_split(B, d);
    // sum_{a,b} a*b tr(Q_b P_a rho P_a) = tr((Q+ - Q-)(P+ rho P+ - P- rho P-))
    CMatrix branch = pa * rho.matrix * pa - ma * rho.matrix * ma;
    CMatrix bsign = pb - mb;
    return real_trace_product(bsign, branch);
}

double sequential_joint(const DensityMatrix& rho, const Projector& pi, const Projector& pj) {
    CMatrix post = pi.matrix * rho.matrix * pi.matrix;
    return real_trace_product(pj.matrix, post);
}

double sequential_joint(const DensityMatrix& rho, const Ray& i, const Ray& j) {
    if (i.dim != rho.dim || j.dim != rho.dim)
        throw DimensionError("ray dimension does not match the state");
    return sequential_joint(rho, projector_of(i), projector_of(j));
}

double csw_value(const RaySet& rs, const Graph& exclusivity, const DensityMatrix& rho) {
    if (rho.dim != rs.dim) throw DimensionError("state dimension does not match ray dimension");
    if (exclusivity.n != static_cast<int>(rs.rays.size()))
        throw DimensionError("exclusivity graph order does not match ray count");
    std::vector<Projector> projs;
    projs.reserve(rs.rays.size());
    for (const Ray& r : rs.rays) projs.push_back(projector_of(r));
    double total = 0.0;
    for (const Projector& p : projs) total += born_probability(rho, p);
    for (auto [i, j] : exclusivity.edges())
        total -= sequential_joint(rho, projs[static_cast<size_t>(i)], projs[static_cast<size_t>(j)]);
    return total;
}

namespace {

struct YuOhContext {
    std::vector<CMatrix> obs;       // thirteen +-1 observables
    Graph gamma;                    // exclusivity adjacency
};

const YuOhContext& yu_oh_context() {
    static const YuOhContext ctx = [] {
        YuOhContext c;
        RaySet rs = builtin_rayset("yu_oh13");
        c.gamma = exclusivity_graph(rs);
        for (const Ray& r : rs.rays) {
            Projector p = projector_of(r);
            CMatrix a = CMatrix::identity(3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) a(i, j) -= 2.0 * p.matrix(i, j);
            c.obs.push_back(a);
        }
        return c;
    }();
    return ctx;
}

} // namespace

std::vector<CMatrix> yu_oh_observables() { return yu_oh_context().obs; }

double yu_oh_value(const DensityMatrix& rho) {
    if (rho.dim != 3) throw DimensionError("thirteen-ray witness needs a qutrit state");
    const YuOhContext& c = yu_oh_context();
    auto corr = [&](int i, int j) { return sequential_correlation(rho, c.obs[static_cast<size_t>(i)], c.obs[static_cast<size_t>(j)]); };
    double head = 0.0;
    for (int i = 0; i < 4; ++i) {
        head += expectation(rho, c.obs[static_cast<size_t>(i)]);
        for (int j = 4; j < 10; ++j)
            if (c.gamma.has_edge(i, j)) head -= corr(i, j);
    }
    double tail = 0.0;
    for (int k = 4; k < 13; ++k) tail += expectation(rho, c.obs[static_cast<size_t>(k)]);
    for (int m = 4; m < 13; ++m)
        for (int n = m + 1; n < 13; ++n)
            if (c.gamma.has_edge(m, n)) tail -= corr(m, n);
    return 0.5 * head + tail;
}

CMatrix yu_oh_operator() {
    const YuOhContext& c = yu_oh_context();
    auto sym = [&](int i, int j) {
        CMatrix p = c.obs[static_cast<size_t>(i)] * c.obs[static_cast<size_t>(j)] +
                    c.obs[static_cast<size_t>(j)] * c.obs[static_cast<size_t>(i)];
        return 0.5 * p;
    };
    CMatrix head = CMatrix::zero(3, 3);
    for (int i = 0; i < 4; ++i) {
        head = head + c.obs[static_cast<size_t>(i)];
        for (int j = 4; j < 10; ++j)
            if (c.gamma.has_edge(i, j)) head = head - sym(i, j);
    }
    CMatrix tail = CMatrix::zero(3, 3);
    for (int k = 4; k < 13; ++k) tail = tail + c.obs[static_cast<size_t>(k)];
    for (int m = 4; m < 13; ++m)
        for (int n = m + 1; n < 13; ++n)
            if (c.gamma.has_edge(m, n)) tail = tail - sym(m, n);
    return 0.5 * head + tail;
}

double yu_oh_nchv_bound() {
    const Graph& gamma = yu_oh_context().gamma;
    // Quadruple the expression so every assignment value is an integer.
    long best = std::numeric_limits<long>::min();
    for (int mask = 0; mask < (1 << 13); ++mask) {
        int a[13];
        for (int k = 0; k < 13; ++k) a[k] = (mask >> k) & 1 ? 1 : -1;
        long v = 0;
        for (int i = 0; i < 4; ++i) {
            v += 2 * a[i];
            for (int j = 4; j < 10; ++j)
                if (gamma.has_edge(i, j)) v -= 2 * a[i] * a[j];
        }
        for (int k = 4; k < 13; ++k) v += 4 * a[k];
        for (int m = 4; m < 13; ++m)
            for (int n = m + 1; n < 13; ++n)
                if (gamma.has_edge(m, n)) v -= 4 * a[m] * a[n];
        best = std::max(best, v);
    }
    return static_cast<double>(best) / 4.0;
}

double linear_entropy(const DensityMatrix& rho) {
    if (rho.dim != 4) throw DimensionError("linear entropy here is defined for ququart states");
    double purity = real_trace_product(rho.matrix, rho.matrix);
    double ell = 4.0 * (1.0 - purity) / 3.0;
    return std::clamp(ell, 0.0, 1.0);
}

double icosahedron_purity_bound(const DensityMatrix& rho) {
    double ell = linear_entropy(rho);
    return 3.0 + (3.0 * std::sqrt(5.0) - 6.0) * std::sqrt(std::max(0.0, 1.0 - ell));
}

namespace {

// Unitary completion: maps unit vector `from` onto unit vector `to`,
// deterministic (Gram-Schmidt against the standard basis, in index order).
CMatrix alignment_unitary(const std::vector<cplx>& from, const std::vector<cplx>& to) {
    const int d = static_cast<int>(from.size());
    auto complete = [&](const std::vector<cplx>& v0) {
        std::vector<std::vector<cplx>> basis{v0};
        for (int k = 0; k < d && static_cast<int>(basis.size()) < d; ++k) {
            std::vector<cplx> cand(static_cast<size_t>(d), cplx(0.0));
            cand[static_cast<size_t>(k)] = 1.0;
            for (const auto& b : basis) {
                cplx ov = 0.0;
                for (int i = 0; i < d; ++i) ov += std::conj(b[static_cast<size_t>(i)]) * cand[static_cast<size_t>(i)];
                for (int i = 0; i < d; ++i) cand[static_cast<size_t>(i)] -= ov * b[static_cast<size_t>(i)];
            }
            double norm = 0.0;
            for (const cplx& x : cand) norm += std::norm(x);
            norm = std::sqrt(norm);
            if (norm < 1e-8) continue;
            for (cplx& x : cand) x /= norm;
            basis.push_back(std::move(cand));
        }
        if (static_cast<int>(basis.size()) != d)
            throw NumericsError("failed to complete an orthonormal basis for alignment");
        return basis;
    };
    auto bf = complete(from);
    auto bt = complete(to);
    CMatrix u = CMatrix::zero(d, d);
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                u(i, j) += bt[static_cast<size_t>(k)][static_cast<size_t>(i)] *
                           std::conj(bf[static_cast<size_t>(k)][static_cast<size_t>(j)]);
    return u;
}

} // namespace

double icosahedron_value(const DensityMatrix& rho, bool align) {
    if (rho.dim != 4) throw DimensionError("icosahedron witness needs a ququart state");
    const OrthogonalRepresentation& rep = icosahedron_representation();
    Graph g = builtin_graph("icosahedron");
    if (!align) return csw_value(rep.rays, g, rho);

    EigenSystem es = hermitian_eigensystem(rho.matrix);
    std::vector<cplx> dominant(4);
    for (int i = 0; i < 4; ++i) dominant[static_cast<size_t>(i)] = es.vectors(i, 0);
    std::vector<cplx> handle(4);
    for (int i = 0; i < 4; ++i) handle[static_cast<size_t>(i)] = rep.handle.entry(i);
    CMatrix u = alignment_unitary(handle, dominant);

    std::vector<Ray> rotated;
    for (const Ray& r : rep.rays.rays) {
        std::vector<cplx> v(4, cplx(0.0));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) v[static_cast<size_t>(i)] += u(i, j) * r.entry(j);
        rotated.push_back(Ray::from_floats(r.label, v));
    }
    RaySet rotated_set = RaySet::create("icosahedron_aligned", std::move(rotated));
    return csw_value(rotated_set, g, rho);
}

double reprep_joint(const DensityMatrix& rho, const Ray& i, const Ray& j) {
    if (i.dim != rho.dim || j.dim != rho.dim)
        throw DimensionError("ray dimension does not match the state");
    Projector pi = projector_of(i);
    Projector pj = projector_of(j);
    std::vector<cplx> iv(static_cast<size_t>(i.dim));
    for (int k = 0; k < i.dim; ++k) iv[static_cast<size_t>(k)] = i.entry(k);
    DensityMatrix istate = make_pure_state(iv);
    return born_probability(rho, pi) * born_probability(istate, pj);
}

double signaling_factor(const DensityMatrix& rho, const Ray& i, const Ray& j) {
    if (i.dim != rho.dim || j.dim != rho.dim)
        throw DimensionError("ray dimension does not match the state");
    Projector pi = projector_of(i);
    Projector pj = projector_of(j);
    Projector pic = pi.complement();
    CMatrix dephased = pi.matrix * rho.matrix * pi.matrix + pic.matrix * rho.matrix * pic.matrix;
    double before = born_probability(rho, pj);
    double after = real_trace_product(pj.matrix, dephased);
    return before - after;
}

namespace {

std::vector<cplx> unit(std::initializer_list<double> entries) {
    std::vector<cplx> v;
    double norm = 0.0;
    for (double e : entries) norm += e * e;
    norm = std::sqrt(norm);
    for (double e : entries) v.emplace_back(e / norm, 0.0);
    return v;
}

} // namespace

double clfc_value(const DensityMatrix& rho) {
    if (rho.dim != 9) throw DimensionError("conditional witness needs a two-qutrit state");
    const std::vector<cplx> a0 = unit({0, 1, -1});
    const std::vector<cplx> a1 = unit({1, -1, 0});
    const std::vector<cplx> f = unit({1, -1, 1});
    auto proj3 = [](const std::vector<cplx>& v) { return Projector::onto_unit_vector(v).matrix; };
    CMatrix pf = proj3(f);
    CMatrix pa0 = proj3(a0);
    CMatrix pa1 = proj3(a1);
    CMatrix id3 = CMatrix::identity(3);

    auto prob = [&](const CMatrix& alice, const CMatrix& bob) {
        return real_trace_product(kron(alice, bob), rho.matrix);
    };
    double cond = prob(id3, pf);
    if (cond < 1e-12) throw DomainError("conditioning on null event");
    double num = prob(pf, pf) - prob(pa0, pf) - prob(pa1, pf);
    return num / cond;
}

} // namespace ctxkit
