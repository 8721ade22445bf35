#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ctxkit/magic.hpp"

using namespace ctxkit;

namespace {

const double kPi = 3.14159265358979323846;

cplx omega_phase(int k) {
    return std::polar(1.0, 2.0 * kPi * k / 3.0);
}

} // namespace

TEST_CASE("displacement operators") {
    CHECK(max_abs_diff(displacement(0, 0).matrix, CMatrix::identity(3)) < 1e-15);

    // D(0,1) is the clock diag(1, w, w^2), D(1,0) the cyclic shift.
    CMatrix clock = displacement(0, 1).matrix;
    CHECK(std::abs(clock(0, 0) - cplx(1.0)) < 1e-15);
    CHECK(std::abs(clock(1, 1) - omega_phase(1)) < 1e-14);
    CHECK(std::abs(clock(2, 2) - omega_phase(2)) < 1e-14);
    CMatrix shift = displacement(1, 0).matrix;
    CHECK(shift(1, 0) == cplx(1.0));
    CHECK(shift(2, 1) == cplx(1.0));
    CHECK(shift(0, 2) == cplx(1.0));

    // Weyl commutation: clock * shift = w * shift * clock.
    CHECK(max_abs_diff(clock * shift, (shift * clock) * omega_phase(1)) < 1e-14);

    // Exponents reduce mod 3, negative ones included.
    CHECK(max_abs_diff(displacement(3, 4).matrix, displacement(0, 1).matrix) < 1e-14);
    CHECK(max_abs_diff(displacement(-1, 0).matrix, displacement(2, 0).matrix) < 1e-14);

    // Every displacement is unitary.
    for (int x = 0; x < 3; ++x)
        for (int z = 0; z < 3; ++z) {
            CMatrix d = displacement(x, z).matrix;
            CHECK(max_abs_diff(d.adjoint() * d, CMatrix::identity(3)) < 1e-13);
        }
}

TEST_CASE("basis projectors resolve each displacement") {
    for (int j = 1; j <= 4; ++j) {
        CMatrix sum = CMatrix::zero(3, 3);
        for (int r = 0; r < 3; ++r) {
            Projector p = mub_projector(j, r);
            CHECK(p.rank == 1);
            sum = sum + p.matrix;
        }
        CHECK(max_abs_diff(sum, CMatrix::identity(3)) < 1e-12);
    }

    // The clock basis is the computational basis.
    CHECK(std::abs(mub_projector(1, 0).matrix(0, 0) - cplx(1.0)) < 1e-13);
    CHECK(std::abs(mub_projector(1, 1).matrix(1, 1) - cplx(1.0)) < 1e-13);

    // Eigenrelation D_j P_j^r = w^r P_j^r, with the basis operators in order
    // D(0,1), D(1,0), D(1,1), D(1,2).
    const int bx[4] = {0, 1, 1, 1};
    const int bz[4] = {1, 0, 1, 2};
    for (int j = 1; j <= 4; ++j)
        for (int r = 0; r < 3; ++r) {
            CMatrix d = displacement(bx[j - 1], bz[j - 1]).matrix;
            CMatrix lhs = d * mub_projector(j, r).matrix;
            CMatrix rhs = mub_projector(j, r).matrix * omega_phase(r);
            CHECK(max_abs_diff(lhs, rhs) < 1e-12);
        }

    CHECK_THROWS_AS(mub_projector(0, 0), DomainError);
    CHECK_THROWS_AS(mub_projector(5, 0), DomainError);

    // r is an eigenvalue exponent, so it reduces mod 3 too.
    CHECK(max_abs_diff(mub_projector(2, 3).matrix, mub_projector(2, 0).matrix) < 1e-14);
}

TEST_CASE("the four bases are mutually unbiased") {
    CHECK(mub_overlap_deviation() < 1e-10);
    // Spot check one cross pair directly.
    double overlap = (mub_projector(1, 0).matrix * mub_projector(3, 2).matrix).trace().real();
    CHECK(overlap == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("witness family structure") {
    const std::vector<MagicWitness>& ws = magic_witnesses();
    REQUIRE(ws.size() == 9);
    CHECK(ws[0].x == 0);
    CHECK(ws[0].z == 0);
    CHECK(ws[8].x == 2);
    CHECK(ws[8].z == 2);

    const double qmax = (std::sqrt(5.0) - 1.0) / 2.0;
    for (const MagicWitness& w : ws) {
        CHECK(w.op.trace().real() == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(is_hermitian(w.op, 1e-12));
        // Identical spectrum across the family, topped by the quantum value.
        std::vector<double> spec = hermitian_spectrum(w.op);
        CHECK(spec[0] == doctest::Approx(qmax).epsilon(1e-9));
    }
}

TEST_CASE("witness values on reference states") {
    CHECK(magic_value(DensityMatrix::maximally_mixed(3)) == doctest::Approx(-1.0 / 3.0));
    CHECK(magic_argmax(DensityMatrix::maximally_mixed(3)) == std::pair<int, int>{0, 0});

    // Any basis state of the four measurements stays nonpositive: the
    // witness only fires on states outside all four eigenbases.
    for (int j = 1; j <= 4; ++j)
        for (int r = 0; r < 3; ++r)
            CHECK(magic_value(mub_state(j, r)) <= 1e-9);

    CHECK_THROWS_AS(magic_value(DensityMatrix::maximally_mixed(2)), DimensionError);
}

TEST_CASE("deterministic outcome tables cannot score positive") {
    CHECK(nchv_bound_magic() == doctest::Approx(0.0));
    // Without the displacement-algebra filter the bound jumps to 1,
    // and dropping any one basis lets assignments reach 1 as well.
    CHECK(nchv_bound_magic_unrestricted() == doctest::Approx(1.0));
    for (int j = 1; j <= 4; ++j) CHECK(nchv_bound_magic_without(j) == doctest::Approx(1.0));
    CHECK_THROWS_AS(nchv_bound_magic_without(0), DomainError);
    CHECK_THROWS_AS(nchv_bound_magic_without(5), DomainError);
}

TEST_CASE("quantum maximum and the independent optimizer agree") {
    auto [value, state] = quantum_max_magic();
    const double qmax = (std::sqrt(5.0) - 1.0) / 2.0;
    CHECK(value == doctest::Approx(qmax).epsilon(1e-9));
    CHECK(magic_value(state) == doctest::Approx(value).epsilon(1e-10));

    // Purity of the maximizing state.
    double purity = (state.matrix * state.matrix).trace().real();
    CHECK(purity == doctest::Approx(1.0).epsilon(1e-10));

    Rng rng(123);
    CHECK(quantum_max_magic_optimizer(rng) == doctest::Approx(value).epsilon(1e-7));
}

TEST_CASE("displacement conjugation permutes the witness family") {
    Rng rng(55);
    std::vector<DensityMatrix> samples;
    for (int k = 0; k < 6; ++k) samples.push_back(rng.pure_state(3));

    ConjugationReport clock = unitary_conjugation_check(displacement(0, 1).matrix, samples);
    CHECK(clock.permutes);
    CHECK(clock.values_invariant);
    CHECK(clock.max_value_shift < 1e-9);
    REQUIRE(clock.permutation.size() == 9);

    ConjugationReport ident = unitary_conjugation_check(CMatrix::identity(3), samples);
    CHECK(ident.permutes);
    for (int i = 0; i < 9; ++i) CHECK(ident.permutation[static_cast<size_t>(i)] == i);

    // A phase rotation outside the displacement group scrambles the family.
    CMatrix odd = CMatrix::identity(3);
    odd(2, 2) = std::polar(1.0, 0.77);
    ConjugationReport r = unitary_conjugation_check(odd, samples);
    CHECK_FALSE(r.permutes);
    CHECK(r.permutation.empty());

    // Non-unitary input is rejected up front.
    CMatrix bad = CMatrix::identity(3) * cplx(2.0);
    CHECK_THROWS_AS(unitary_conjugation_check(bad, samples), DomainError);
}
