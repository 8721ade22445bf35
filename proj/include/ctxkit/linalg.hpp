// Dense complex matrices, a Hermitian eigensolver, and the Born / Lueders
// measurement calculus used by every analysis module.
#pragma once

#include <complex>
#include <vector>

#include "ctxkit/common.hpp"

namespace ctxkit {

using cplx = std::complex<double>;

// Row-major dense complex matrix. Values are immutable by convention once a
// quantum object has been built around them; the raw type stays freely
// mutable for solver workspaces.
struct CMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<cplx> a;

    CMatrix() = default;
    CMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    cplx& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const cplx& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static CMatrix identity(int n);
    static CMatrix zero(int r, int c);

    CMatrix adjoint() const;
    CMatrix transpose() const;
    cplx trace() const;
    double max_abs() const;           // entrywise max modulus
    bool finite() const;

    CMatrix operator+(const CMatrix& o) const;
    CMatrix operator-(const CMatrix& o) const;
    CMatrix operator*(const CMatrix& o) const;
    CMatrix operator*(cplx s) const;
};

inline CMatrix operator*(cplx s, const CMatrix& m) { return m * s; }

CMatrix kron(const CMatrix& x, const CMatrix& y);
double max_abs_diff(const CMatrix& x, const CMatrix& y);
bool is_hermitian(const CMatrix& m, double tol);

// Eigenvalues in descending order; columns of `vectors` follow the same
// order when requested.
struct EigenSystem {
    std::vector<double> values;
    CMatrix vectors; // column k is the eigenvector of values[k]
};

// Cyclic Jacobi for Hermitian matrices, dims <= 64. Throws DomainError for
// non-Hermitian input and NumericsError if the sweep cap is hit before the
// off-diagonal mass drops below the residual target.
std::vector<double> hermitian_spectrum(const CMatrix& m);
EigenSystem hermitian_eigensystem(const CMatrix& m);

struct Projector; // below

struct DensityMatrix {
    int dim = 0;
    CMatrix matrix;

    // Validates Hermiticity, unit trace and positive semidefiniteness.
    static DensityMatrix from_matrix(const CMatrix& m);
    static DensityMatrix maximally_mixed(int dim);
};

struct Projector {
    int dim = 0;
    CMatrix matrix;
    int rank = 0;

    // Validates idempotence and Hermiticity; rank is read off the trace.
    static Projector from_matrix(const CMatrix& m);
    static Projector onto_unit_vector(const std::vector<cplx>& v); // normalizes
    Projector complement() const; // I - P
};

DensityMatrix make_pure_state(const std::vector<cplx>& amplitudes);

double born_probability(const DensityMatrix& rho, const Projector& p);
DensityMatrix luders_update(const DensityMatrix& rho, const std::vector<Projector>& outcomes);
std::pair<DensityMatrix, double> conditional_state(const DensityMatrix& rho, const Projector& p);
double expectation(const DensityMatrix& rho, const CMatrix& observable);

} // namespace ctxkit
