#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "ctxkit/linalg.hpp"

using namespace ctxkit;

namespace {

const cplx kI(0.0, 1.0);

CMatrix pauli_x2() {
    CMatrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

} // namespace

TEST_CASE("eigensystem of a dense Hermitian matrix") {
    // Entries chosen so no eigenvalue is obvious; correctness is judged by
    // the defining relations, not by frozen numbers.
    CMatrix m(3, 3);
    m(0, 0) = 2.0;
    m(1, 1) = -1.0;
    m(2, 2) = 0.5;
    m(0, 1) = cplx(1.0, 0.75);
    m(1, 0) = std::conj(m(0, 1));
    m(0, 2) = cplx(0.0, -2.0);
    m(2, 0) = std::conj(m(0, 2));
    m(1, 2) = cplx(0.25, 0.25);
    m(2, 1) = std::conj(m(1, 2));

    EigenSystem es = hermitian_eigensystem(m);
    REQUIRE(es.values.size() == 3);
    CHECK(es.values[0] >= es.values[1]);
    CHECK(es.values[1] >= es.values[2]);

    // Trace and Frobenius norm are spectral invariants.
    double tr = 0.0, frob = 0.0;
    for (double v : es.values) {
        tr += v;
        frob += v * v;
    }
    CHECK(tr == doctest::Approx(m.trace().real()).epsilon(1e-12));
    double frob_direct = 0.0;
    for (const cplx& e : m.a) frob_direct += std::norm(e);
    CHECK(frob == doctest::Approx(frob_direct).epsilon(1e-10));

    // Columns are orthonormal eigenvectors.
    for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) {
            cplx dot(0.0);
            for (int i = 0; i < 3; ++i)
                dot += std::conj(es.vectors(i, k)) * es.vectors(i, l);
            CHECK(std::abs(dot - (k == l ? 1.0 : 0.0)) < 1e-9);
        }
        for (int i = 0; i < 3; ++i) {
            cplx mv(0.0);
            for (int j = 0; j < 3; ++j) mv += m(i, j) * es.vectors(j, k);
            CHECK(std::abs(mv - es.values[k] * es.vectors(i, k)) < 1e-8);
        }
    }
}

TEST_CASE("spectrum of a diagonal matrix is the sorted diagonal") {
    CMatrix m(4, 4);
    m(0, 0) = -3.0;
    m(1, 1) = 7.0;
    m(2, 2) = 0.0;
    m(3, 3) = 7.0; // degenerate pair
    std::vector<double> s = hermitian_spectrum(m);
    CHECK(s[0] == doctest::Approx(7.0));
    CHECK(s[1] == doctest::Approx(7.0));
    CHECK(s[2] == doctest::Approx(0.0));
    CHECK(s[3] == doctest::Approx(-3.0));
}

TEST_CASE("eigensolver rejects bad input") {
    CMatrix rect(2, 3);
    CHECK_THROWS_AS(hermitian_spectrum(rect), DimensionError);

    CMatrix nh(2, 2);
    nh(0, 1) = 1.0; // missing conjugate partner
    CHECK_THROWS_AS(hermitian_spectrum(nh), DomainError);
}

TEST_CASE("density matrix validation") {
    CHECK_THROWS_AS(DensityMatrix::from_matrix(CMatrix::identity(2)), DomainError); // trace 2

    CMatrix neg(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5; // unit trace but indefinite
    CHECK_THROWS_AS(DensityMatrix::from_matrix(neg), DomainError);

    CMatrix ok = CMatrix::identity(3) * cplx(1.0 / 3.0);
    DensityMatrix rho = DensityMatrix::from_matrix(ok);
    CHECK(rho.dim == 3);

    DensityMatrix mm = DensityMatrix::maximally_mixed(5);
    CHECK(mm.matrix.trace().real() == doctest::Approx(1.0));
    CHECK(mm.matrix(0, 0).real() == doctest::Approx(0.2));
}

TEST_CASE("projector validation and complement") {
    CMatrix half(2, 2);
    half(0, 0) = 0.5;
    half(1, 1) = 0.5; // Hermitian, psd, but not idempotent
    CHECK_THROWS_AS(Projector::from_matrix(half), DomainError);

    // Rank-2 projector in dimension 3.
    CMatrix p(3, 3);
    p(0, 0) = 1.0;
    p(1, 1) = 0.5;
    p(2, 2) = 0.5;
    p(1, 2) = 0.5;
    p(2, 1) = 0.5;
    Projector proj = Projector::from_matrix(p);
    CHECK(proj.rank == 2);
    Projector comp = proj.complement();
    CHECK(comp.rank == 1);
    CHECK(max_abs_diff(proj.matrix + comp.matrix, CMatrix::identity(3)) < 1e-12);
}

TEST_CASE("onto_unit_vector normalizes and rejects the zero vector") {
    std::vector<cplx> v = {cplx(3.0), cplx(0.0, 4.0)};
    Projector a = Projector::onto_unit_vector(v);
    for (cplx& e : v) e *= 7.0;
    Projector b = Projector::onto_unit_vector(v);
    CHECK(max_abs_diff(a.matrix, b.matrix) < 1e-14);
    CHECK(a.rank == 1);
    CHECK(a.matrix(0, 0).real() == doctest::Approx(9.0 / 25.0));

    CHECK_THROWS_AS(Projector::onto_unit_vector({cplx(0.0), cplx(0.0)}), DomainError);
    CHECK_THROWS_AS(make_pure_state({cplx(0.0)}), DomainError);
}

TEST_CASE("Born rule on a plus state") {
    const double s = 1.0 / std::sqrt(2.0);
    DensityMatrix plus = make_pure_state({cplx(s), cplx(s)});
    Projector p0 = Projector::onto_unit_vector({cplx(1.0), cplx(0.0)});
    CHECK(born_probability(plus, p0) == doctest::Approx(0.5));
    CHECK(born_probability(plus, p0.complement()) == doctest::Approx(0.5));

    DensityMatrix zero = make_pure_state({cplx(1.0), cplx(0.0)});
    CHECK(born_probability(zero, p0) == doctest::Approx(1.0));
}

TEST_CASE("complete dephasing by a Lueders measurement") {
    const double s = 1.0 / std::sqrt(2.0);
    DensityMatrix plus = make_pure_state({cplx(s), cplx(s)});
    Projector p0 = Projector::onto_unit_vector({cplx(1.0), cplx(0.0)});
    DensityMatrix after = luders_update(plus, {p0, p0.complement()});
    CHECK(max_abs_diff(after.matrix, DensityMatrix::maximally_mixed(2).matrix) < 1e-12);

    // Incomplete and overlapping outcome sets are rejected.
    CHECK_THROWS_AS(luders_update(plus, {p0}), DomainError);
    CHECK_THROWS_AS(luders_update(plus, {p0, p0, p0.complement()}), DomainError);
    CHECK_THROWS_AS(luders_update(plus, std::vector<Projector>{}), DomainError);
}

TEST_CASE("conditioning updates the state and reports the probability") {
    DensityMatrix mixed = DensityMatrix::maximally_mixed(3);
    Projector p = Projector::onto_unit_vector({cplx(0.0), cplx(1.0), cplx(0.0)});
    auto [post, prob] = conditional_state(mixed, p);
    CHECK(prob == doctest::Approx(1.0 / 3.0));
    CHECK(max_abs_diff(post.matrix, p.matrix) < 1e-12);

    // Conditioning on an orthogonal event is undefined.
    DensityMatrix zero = make_pure_state({cplx(1.0), cplx(0.0), cplx(0.0)});
    CHECK_THROWS_AS(conditional_state(zero, p), DomainError);
}

TEST_CASE("expectation values") {
    const double s = 1.0 / std::sqrt(2.0);
    DensityMatrix plus = make_pure_state({cplx(s), cplx(s)});
    CHECK(expectation(plus, pauli_x2()) == doctest::Approx(1.0));
    CHECK(expectation(DensityMatrix::maximally_mixed(2), pauli_x2()) == doctest::Approx(0.0));

    CMatrix nh(2, 2);
    nh(0, 1) = kI; // not Hermitian
    CHECK_THROWS_AS(expectation(plus, nh), DomainError);
}

TEST_CASE("kron dimensions and content") {
    CMatrix x = pauli_x2();
    CMatrix z(2, 2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    CMatrix xz = kron(x, z);
    REQUIRE(xz.rows == 4);
    // (X kron Z)(0,2) = X(0,1) * Z(0,0) = 1
    CHECK(xz(0, 2) == cplx(1.0));
    CHECK(xz(1, 3) == cplx(-1.0));
    CHECK(xz(0, 0) == cplx(0.0));
}
