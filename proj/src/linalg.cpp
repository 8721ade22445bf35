#include "ctxkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace ctxkit {

Tolerances& tolerances() {
    static Tolerances t;
    return t;
}

void apply_tolerance_env() {
    const char* raw = std::getenv("CTXKIT_TOL");
    if (!raw || !*raw) return;
    char* end = nullptr;
    double v = std::strtod(raw, &end);
    if (end == raw || !(v > 0.0) || !std::isfinite(v)) {
        throw ParseError("CTXKIT_TOL must be a positive number, got '" + std::string(raw) + "'");
    }
    tolerances().violation_margin = v;
    tolerances().float_edge = v;
}

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::zero(int r, int c) { return CMatrix(r, c); }

CMatrix CMatrix::adjoint() const {
    CMatrix m(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

CMatrix CMatrix::transpose() const {
    CMatrix m(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(j, i) = (*this)(i, j);
    return m;
}

cplx CMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < std::min(rows, cols); ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : a) m = std::max(m, std::abs(v));
    return m;
}

bool CMatrix::finite() const {
    for (const cplx& v : a)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw DimensionError("matrix addition shape mismatch");
    CMatrix m(rows, cols);
    for (size_t k = 0; k < a.size(); ++k) m.a[k] = a[k] + o.a[k];
    return m;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw DimensionError("matrix subtraction shape mismatch");
    CMatrix m(rows, cols);
    for (size_t k = 0; k < a.size(); ++k) m.a[k] = a[k] - o.a[k];
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    if (cols != o.rows) throw DimensionError("matrix product shape mismatch");
    CMatrix m(rows, o.cols);
    for (int i = 0; i < rows; ++i) {
        for (int k = 0; k < cols; ++k) {
            const cplx v = (*this)(i, k);
            if (v == cplx{}) continue;
            for (int j = 0; j < o.cols; ++j) m(i, j) += v * o(k, j);
        }
    }
    return m;
}

CMatrix CMatrix::operator*(cplx s) const {
    CMatrix m(rows, cols);
    for (size_t k = 0; k < a.size(); ++k) m.a[k] = a[k] * s;
    return m;
}

CMatrix kron(const CMatrix& x, const CMatrix& y) {
    CMatrix m(x.rows * y.rows, x.cols * y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) {
            const cplx v = x(i, j);
            if (v == cplx{}) continue;
            for (int p = 0; p < y.rows; ++p)
                for (int q = 0; q < y.cols; ++q)
                    m(i * y.rows + p, j * y.cols + q) = v * y(p, q);
        }
    return m;
}

double max_abs_diff(const CMatrix& x, const CMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw DimensionError("comparison shape mismatch");
    double m = 0.0;
    for (size_t k = 0; k < x.a.size(); ++k) m = std::max(m, std::abs(x.a[k] - y.a[k]));
    return m;
}

bool is_hermitian(const CMatrix& m, double tol) {
    if (m.rows != m.cols) return false;
    for (int i = 0; i < m.rows; ++i)
        for (int j = i; j < m.cols; ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    return true;
}

namespace {

// One cyclic Jacobi pass happens over all strict upper-triangle positions.
// Each (p,q) rotation first removes the phase of a_pq, then applies the real
// rotation that zeroes it; accumulating the same transforms into V gives
// eigenvectors.
EigenSystem jacobi_eigensystem(const CMatrix& input, bool want_vectors) {
    const int n = input.rows;
    if (n != input.cols) throw DimensionError("eigensolver needs a square matrix");
    if (n > 64) throw DomainError("eigensolver limited to dimension 64");
    if (!is_hermitian(input, tolerances().hermitian))
        throw DomainError("eigensolver input is not Hermitian");

    CMatrix A = input;
    // Force exact Hermitian symmetry so rotations stay stable.
    for (int i = 0; i < n; ++i) {
        A(i, i) = cplx(A(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            cplx avg = 0.5 * (A(i, j) + std::conj(A(j, i)));
            A(i, j) = avg;
            A(j, i) = std::conj(avg);
        }
    }
    CMatrix V = want_vectors ? CMatrix::identity(n) : CMatrix();

    const double scale = std::max(A.max_abs(), 1e-300);
    const int max_sweeps = 64;
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(A(p, q)));
        if (off <= 1e-14 * scale) { converged = true; break; }

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = A(p, q);
                const double m = std::abs(apq);
                if (m <= 1e-300) continue;
                const cplx u = apq / m; // e^{i arg(a_pq)}
                const double app = A(p, p).real();
                const double aqq = A(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * m, app - aqq);
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                // Combined transform G = diag(1, conj(u)) * R(theta); the update
                // is A <- G^dag A G, applied as columns then rows.
                const cplx cu = std::conj(u);
                for (int i = 0; i < n; ++i) {
                    const cplx vip = A(i, p);
                    const cplx viq = A(i, q);
                    A(i, p) = c * vip + s * cu * viq;
                    A(i, q) = -s * vip + c * cu * viq;
                }
                for (int j = 0; j < n; ++j) {
                    const cplx vpj = A(p, j);
                    const cplx vqj = A(q, j);
                    A(p, j) = c * vpj + s * u * vqj;
                    A(q, j) = -s * vpj + c * u * vqj;
                }
                if (want_vectors) {
                    for (int i = 0; i < n; ++i) {
                        const cplx vip = V(i, p);
                        const cplx viq = V(i, q);
                        V(i, p) = c * vip + s * cu * viq;
                        V(i, q) = -s * vip + c * cu * viq;
                    }
                }
            }
        }
    }
    if (!converged) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(A(p, q)));
        if (off > tolerances().eigen_residual)
            throw NumericsError("Jacobi eigensolver did not converge; residual " + std::to_string(off));
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return A(i, i).real() > A(j, j).real(); });

    EigenSystem out;
    out.values.resize(n);
    for (int k = 0; k < n; ++k) out.values[k] = A(order[k], order[k]).real();
    if (want_vectors) {
        out.vectors = CMatrix(n, n);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) out.vectors(i, k) = V(i, order[k]);
    }
    return out;
}

} // namespace

std::vector<double> hermitian_spectrum(const CMatrix& m) {
    return jacobi_eigensystem(m, false).values;
}

EigenSystem hermitian_eigensystem(const CMatrix& m) {
    return jacobi_eigensystem(m, true);
}

DensityMatrix DensityMatrix::from_matrix(const CMatrix& m) {
    if (m.rows != m.cols || m.rows < 1) throw DimensionError("density matrix must be square");
    if (!m.finite()) throw DomainError("density matrix has non-finite entries");
    const Tolerances& tol = tolerances();
    if (!is_hermitian(m, tol.density_hermitian))
        throw DomainError("density matrix is not Hermitian");
    if (std::abs(m.trace() - cplx(1.0, 0.0)) > tol.unit_trace)
        throw DomainError("density matrix trace differs from 1");
    std::vector<double> ev = hermitian_spectrum(m);
    if (ev.back() < tol.psd_floor)
        throw DomainError("density matrix has negative eigenvalue " + std::to_string(ev.back()));
    DensityMatrix rho;
    rho.dim = m.rows;
    rho.matrix = m;
    return rho;
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    if (dim < 1) throw DimensionError("dimension must be positive");
    DensityMatrix rho;
    rho.dim = dim;
    rho.matrix = CMatrix::identity(dim) * cplx(1.0 / dim, 0.0);
    return rho;
}

Projector Projector::from_matrix(const CMatrix& m) {
    if (m.rows != m.cols || m.rows < 1) throw DimensionError("projector must be square");
    const Tolerances& tol = tolerances();
    if (!is_hermitian(m, tol.projector)) throw DomainError("projector is not Hermitian");
    if (max_abs_diff(m * m, m) > tol.projector) throw DomainError("projector is not idempotent");
    const double tr = m.trace().real();
    const int rank = static_cast<int>(std::lround(tr));
    if (std::abs(tr - rank) > tol.projector || rank < 0)
        throw DomainError("projector trace is not a nonnegative integer");
    Projector p;
    p.dim = m.rows;
    p.matrix = m;
    p.rank = rank;
    return p;
}

Projector Projector::onto_unit_vector(const std::vector<cplx>& v) {
    double norm2 = 0.0;
    for (const cplx& c : v) norm2 += std::norm(c);
    if (norm2 <= 0.0 || !std::isfinite(norm2)) throw DomainError("degenerate state vector");
    const int d = static_cast<int>(v.size());
    CMatrix m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = v[i] * std::conj(v[j]) / norm2;
    Projector p;
    p.dim = d;
    p.matrix = m;
    p.rank = 1;
    return p;
}

Projector Projector::complement() const {
    Projector q;
    q.dim = dim;
    q.matrix = CMatrix::identity(dim) - matrix;
    q.rank = dim - rank;
    return q;
}

DensityMatrix make_pure_state(const std::vector<cplx>& amplitudes) {
    double norm2 = 0.0;
    for (const cplx& c : amplitudes) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw DomainError("state vector has non-finite entries");
        norm2 += std::norm(c);
    }
    if (norm2 <= 0.0) throw DomainError("degenerate state vector");
    const int d = static_cast<int>(amplitudes.size());
    CMatrix m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = amplitudes[i] * std::conj(amplitudes[j]) / norm2;
    DensityMatrix rho;
    rho.dim = d;
    rho.matrix = m;
    return rho;
}

double born_probability(const DensityMatrix& rho, const Projector& p) {
    if (rho.dim != p.dim) throw DimensionError("state and projector dimensions differ");
    double v = (rho.matrix * p.matrix).trace().real();
    if (v < -1e-10 || v > 1.0 + 1e-10)
        throw NumericsError("Born probability escaped [0,1]: " + std::to_string(v));
    return std::clamp(v, 0.0, 1.0);
}

DensityMatrix luders_update(const DensityMatrix& rho, const std::vector<Projector>& outcomes) {
    if (outcomes.empty()) throw DomainError("empty measurement");
    CMatrix sum = CMatrix::zero(rho.dim, rho.dim);
    for (size_t i = 0; i < outcomes.size(); ++i) {
        if (outcomes[i].dim != rho.dim) throw DimensionError("projector dimension mismatch");
        sum = sum + outcomes[i].matrix;
        for (size_t j = i + 1; j < outcomes.size(); ++j) {
            if (max_abs_diff(outcomes[i].matrix * outcomes[j].matrix,
                             CMatrix::zero(rho.dim, rho.dim)) > tolerances().projector)
                throw DomainError("measurement projectors are not mutually orthogonal");
        }
    }
    if (max_abs_diff(sum, CMatrix::identity(rho.dim)) > tolerances().projector)
        throw DomainError("measurement projectors do not sum to identity");
    CMatrix out = CMatrix::zero(rho.dim, rho.dim);
    for (const Projector& p : outcomes) out = out + p.matrix * rho.matrix * p.matrix;
    return DensityMatrix::from_matrix(out);
}

std::pair<DensityMatrix, double> conditional_state(const DensityMatrix& rho, const Projector& p) {
    if (rho.dim != p.dim) throw DimensionError("state and projector dimensions differ");
    const double prob = (rho.matrix * p.matrix).trace().real();
    if (prob <= 1e-12) throw DomainError("conditioning on null event");
    CMatrix post = p.matrix * rho.matrix * p.matrix * cplx(1.0 / prob, 0.0);
    return {DensityMatrix::from_matrix(post), std::clamp(prob, 0.0, 1.0)};
}

double expectation(const DensityMatrix& rho, const CMatrix& observable) {
    if (observable.rows != rho.dim || observable.cols != rho.dim)
        throw DimensionError("observable dimension mismatch");
    if (!is_hermitian(observable, tolerances().hermitian))
        throw DomainError("expectation of a non-Hermitian operator");
    const cplx t = (rho.matrix * observable).trace();
    if (std::abs(t.imag()) > tolerances().hermitian)
        throw NumericsError("expectation has imaginary residue " + std::to_string(t.imag()));
    return t.real();
}

} // namespace ctxkit
