#include "ctxkit/magic.hpp"

#include <cmath>

namespace ctxkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

cplx omega_pow(int k) {
    int m = ((k % 3) + 3) % 3;
    if (m == 0) return {1.0, 0.0};
    double angle = 2.0 * kPi * m / 3.0;
    return {std::cos(angle), std::sin(angle)};
}

CMatrix shift_matrix() {
    CMatrix tau = CMatrix::zero(3, 3);
    for (int j = 0; j < 3; ++j) tau((j + 1) % 3, j) = 1.0;
    return tau;
}

CMatrix clock_matrix() {
    CMatrix sigma = CMatrix::zero(3, 3);
    for (int j = 0; j < 3; ++j) sigma(j, j) = omega_pow(j);
    return sigma;
}

// The four measurement bases are the eigenbases of sigma, tau, tau*sigma,
// tau*sigma^2 (displacements D_{0,1}, D_{1,0}, D_{1,1}, D_{1,2}).
const std::array<std::pair<int, int>, 4>& basis_params() {
    static const std::array<std::pair<int, int>, 4> p = {
        {{0, 1}, {1, 0}, {1, 1}, {1, 2}}};
    return p;
}

std::array<int, 4> r_of(int x, int z) {
    // r = x*(1,0,1,2) - z*(0,1,1,1), taken mod 3.
    auto m3 = [](int v) { return ((v % 3) + 3) % 3; };
    return {m3(x), m3(-z), m3(x - z), m3(2 * x - z)};
}

} // namespace

QutritDisplacement displacement(int x, int z) {
    int xm = ((x % 3) + 3) % 3;
    int zm = ((z % 3) + 3) % 3;
    CMatrix m = CMatrix::identity(3);
    CMatrix tau = shift_matrix();
    CMatrix sigma = clock_matrix();
    for (int k = 0; k < xm; ++k) m = m * tau;
    for (int k = 0; k < zm; ++k) m = m * sigma;
    return QutritDisplacement{xm, zm, std::move(m)};
}

Projector mub_projector(int j, int r) {
    if (j < 1 || j > 4) throw DomainError("basis index must lie in 1..4");
    int rm = ((r % 3) + 3) % 3;
    const auto& [x, z] = basis_params()[static_cast<size_t>(j - 1)];
    CMatrix d = displacement(x, z).matrix;
    CMatrix acc = CMatrix::identity(3);   // k = 0 term
    CMatrix power = CMatrix::identity(3);
    for (int k = 1; k < 3; ++k) {
        power = power * d;
        acc = acc + omega_pow(-rm * k) * power;
    }
    acc = acc * cplx(1.0 / 3.0, 0.0);
    return Projector::from_matrix(acc);   // validates Hermitian idempotent
}

DensityMatrix mub_state(int j, int r) {
    return DensityMatrix::from_matrix(mub_projector(j, r).matrix);
}

double mub_overlap_deviation() {
    double worst = 0.0;
    for (int j = 1; j <= 4; ++j)
        for (int jp = 1; jp <= 4; ++jp) {
            if (j == jp) continue;
            for (int r = 0; r < 3; ++r)
                for (int rp = 0; rp < 3; ++rp) {
                    cplx tr = (mub_projector(j, r).matrix * mub_projector(jp, rp).matrix).trace();
                    worst = std::max(worst, std::abs(tr - cplx(1.0 / 3.0, 0.0)));
                }
        }
    return worst;
}

MagicWitness witness_operator(int x, int z) {
    MagicWitness w;
    w.x = ((x % 3) + 3) % 3;
    w.z = ((z % 3) + 3) % 3;
    w.r_vector = r_of(w.x, w.z);
    CMatrix acc = CMatrix::identity(3);
    for (int j = 1; j <= 4; ++j)
        acc = acc - mub_projector(j, w.r_vector[static_cast<size_t>(j - 1)]).matrix;
    w.op = std::move(acc);
    return w;
}

const std::vector<MagicWitness>& magic_witnesses() {
    static const std::vector<MagicWitness> all = [] {
        std::vector<MagicWitness> v;
        for (int x = 0; x < 3; ++x)
            for (int z = 0; z < 3; ++z) v.push_back(witness_operator(x, z));
        return v;
    }();
    return all;
}

namespace {

std::pair<double, size_t> best_witness(const DensityMatrix& rho) {
    if (rho.dim != 3) throw DimensionError("magic witness needs a qutrit state");
    const auto& ws = magic_witnesses();
    double best = -1e300;
    size_t arg = 0;
    for (size_t i = 0; i < ws.size(); ++i) {
        double v = expectation(rho, ws[i].op);
        // The margin absorbs roundoff on exact ties (all nine values agree on
        // the maximally mixed state, for instance) so the reported argmax is
        // the lexicographically first (x, z), not an accident of summation
        // order.
        if (v > best + 1e-12) {
            best = v;
            arg = i;
        }
    }
    return {best, arg};
}

} // namespace

double magic_value(const DensityMatrix& rho) { return best_witness(rho).first; }

std::pair<int, int> magic_argmax(const DensityMatrix& rho) {
    const MagicWitness& w = magic_witnesses()[best_witness(rho).second];
    return {w.x, w.z};
}

namespace {

bool algebra_consistent(const std::array<int, 4>& o) {
    // The third and fourth bases are generated by the first two:
    // tau*sigma = tau . sigma and tau*sigma^2 = (tau*sigma) . sigma, so a
    // deterministic outcome table must assign them the corresponding
    // eigenvalue sums mod 3.
    return o[2] == (o[0] + o[1]) % 3 && o[3] == (o[0] + o[2]) % 3;
}

double nchv_enumerate(bool restrict_consistent, int dropped_basis) {
    const auto& ws = magic_witnesses();
    double best = -1e300;
    for (int code = 0; code < 81; ++code) {
        std::array<int, 4> o = {code % 3, (code / 3) % 3, (code / 9) % 3, (code / 27) % 3};
        if (restrict_consistent && !algebra_consistent(o)) continue;
        double table_best = -1e300;
        for (const MagicWitness& w : ws) {
            int agreements = 0;
            for (int j = 0; j < 4; ++j) {
                if (j + 1 == dropped_basis) continue;
                if (o[static_cast<size_t>(j)] == w.r_vector[static_cast<size_t>(j)]) ++agreements;
            }
            table_best = std::max(table_best, 1.0 - agreements);
        }
        best = std::max(best, table_best);
    }
    return best;
}

} // namespace

double nchv_bound_magic() { return nchv_enumerate(true, 0); }

double nchv_bound_magic_unrestricted() { return nchv_enumerate(false, 0); }

double nchv_bound_magic_without(int j) {
    if (j < 1 || j > 4) throw DomainError("basis index must lie in 1..4");
    return nchv_enumerate(true, j);
}

std::pair<double, DensityMatrix> quantum_max_magic() {
    const auto& ws = magic_witnesses();
    double best = -1e300;
    std::vector<cplx> best_vec;
    for (const MagicWitness& w : ws) {
        EigenSystem es = hermitian_eigensystem(w.op);
        if (es.values[0] > best) {
            best = es.values[0];
            best_vec.resize(3);
            for (int i = 0; i < 3; ++i) best_vec[static_cast<size_t>(i)] = es.vectors(i, 0);
        }
    }
    return {best, make_pure_state(best_vec)};
}

double quantum_max_magic_optimizer(Rng& rng, int restarts, int iterations) {
    const auto& ws = magic_witnesses();
    double best = -1e300;
    for (int restart = 0; restart < restarts; ++restart) {
        std::vector<cplx> psi = rng.unit_vector(3);
        for (int it = 0; it < iterations; ++it) {
            // Pick the witness this state currently scores highest on ...
            double cur_best = -1e300;
            size_t arg = 0;
            for (size_t wi = 0; wi < ws.size(); ++wi) {
                cplx acc = 0.0;
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b)
                        acc += std::conj(psi[static_cast<size_t>(a)]) * ws[wi].op(a, b) *
                               psi[static_cast<size_t>(b)];
                if (acc.real() > cur_best) {
                    cur_best = acc.real();
                    arg = wi;
                }
            }
            // ... then power-iterate toward its top eigenvector. Shifting by
            // +2 makes the spectrum positive with the top eigenvalue dominant.
            std::vector<cplx> next(3, cplx(0.0));
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b)
                    next[static_cast<size_t>(a)] += ws[arg].op(a, b) * psi[static_cast<size_t>(b)];
                next[static_cast<size_t>(a)] += 2.0 * psi[static_cast<size_t>(a)];
            }
            double norm2 = 0.0;
            for (const cplx& c : next) norm2 += std::norm(c);
            double inv = 1.0 / std::sqrt(norm2);
            for (cplx& c : next) c *= inv;
            psi = std::move(next);
        }
        best = std::max(best, magic_value(make_pure_state(psi)));
    }
    return best;
}

ConjugationReport unitary_conjugation_check(const CMatrix& u,
                                            const std::vector<DensityMatrix>& samples) {
    if (u.rows != 3 || u.cols != 3) throw DimensionError("conjugation check needs a 3x3 unitary");
    CMatrix gram = u.adjoint() * u;
    if (max_abs_diff(gram, CMatrix::identity(3)) > 1e-10)
        throw DomainError("matrix is not unitary");

    const auto& ws = magic_witnesses();
    ConjugationReport report;
    report.permutation.assign(ws.size(), -1);
    std::vector<bool> hit(ws.size(), false);
    bool bijective = true;
    for (size_t i = 0; i < ws.size(); ++i) {
        CMatrix conj = u * ws[i].op * u.adjoint();
        double best_dist = 1e300;
        size_t best_j = 0;
        for (size_t j = 0; j < ws.size(); ++j) {
            double d = max_abs_diff(conj, ws[j].op);
            if (d < best_dist) {
                best_dist = d;
                best_j = j;
            }
        }
        report.permutation[i] = static_cast<int>(best_j);
        report.max_matching_distance = std::max(report.max_matching_distance, best_dist);
        if (hit[best_j]) bijective = false;
        hit[best_j] = true;
    }
    report.permutes = bijective && report.max_matching_distance <= 1e-8;
    if (!report.permutes) {
        report.permutation.clear();
        return report;
    }
    report.values_invariant = true;
    for (const DensityMatrix& rho : samples) {
        DensityMatrix rotated = DensityMatrix::from_matrix(u * rho.matrix * u.adjoint());
        double shift = std::abs(magic_value(rotated) - magic_value(rho));
        report.max_value_shift = std::max(report.max_value_shift, shift);
        if (shift > 1e-9) report.values_invariant = false;
    }
    return report;
}

} // namespace ctxkit
