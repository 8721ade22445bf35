#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ctxkit/inequalities.hpp"
#include "ctxkit/random.hpp"

using namespace ctxkit;

namespace {

const double kSqrt5 = std::sqrt(5.0);

CMatrix sigma_z2() {
    CMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

CMatrix sigma_x2() {
    CMatrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

} // namespace

TEST_CASE("witness report margins") {
    WitnessReport r = make_witness_report("w", 2.5, 2.0, 3.0);
    CHECK(r.violated);
    CHECK(r.margin == doctest::Approx(0.5));

    WitnessReport tie = make_witness_report("w", 2.0, 2.0, 3.0);
    CHECK_FALSE(tie.violated); // reaching the bound is not a violation

    WitnessReport below = make_witness_report("w", 1.0, 2.0, 3.0);
    CHECK_FALSE(below.violated);
    CHECK(below.margin == doctest::Approx(-1.0));
}

TEST_CASE("sequenced correlation of sharp observables") {
    DensityMatrix zero = make_pure_state({cplx(1.0), cplx(0.0)});
    // Z then Z is perfectly repeatable.
    CHECK(sequential_correlation(zero, sigma_z2(), sigma_z2()) == doctest::Approx(1.0));
    // X first erases the Z record completely.
    CHECK(sequential_correlation(zero, sigma_x2(), sigma_z2()) == doctest::Approx(0.0));
    // Z first leaves |0><0| untouched, so a following X is unbiased.
    CHECK(sequential_correlation(zero, sigma_z2(), sigma_x2()) == doctest::Approx(0.0));

    // Spectrum must be exactly +-1.
    CMatrix not_dichotomic = sigma_z2() * cplx(2.0);
    CHECK_THROWS_AS(sequential_correlation(zero, not_dichotomic, sigma_z2()), DomainError);
}

TEST_CASE("pentagon witness value sits between the classical and graph bounds") {
    RaySet rs = builtin_rayset("kcbs5");
    Graph g = exclusivity_graph(rs);

    DensityMatrix mixed = DensityMatrix::maximally_mixed(3);
    CHECK(csw_value(rs, g, mixed) == doctest::Approx(5.0 / 3.0));

    // For any state the value stays below the Lovasz number of the pentagon.
    double theta = lovasz_theta(g).theta;
    Rng rng(4242);
    double best = 0.0;
    for (int k = 0; k < 60; ++k) {
        DensityMatrix rho = rng.pure_state(3);
        double v = csw_value(rs, g, rho);
        CHECK(v <= theta + 1e-7);
        best = std::max(best, v);
    }
    CHECK(best > 2.0); // some sampled state already beats the classical bound
}

TEST_CASE("thirteen-ray value is state independent") {
    CHECK(yu_oh_value(DensityMatrix::maximally_mixed(3)) == doctest::Approx(29.0 / 3.0));
    Rng rng(99);
    for (int k = 0; k < 10; ++k)
        CHECK(yu_oh_value(rng.pure_state(3)) == doctest::Approx(29.0 / 3.0).epsilon(1e-10));

    // Because the witness operator is a multiple of the identity.
    CMatrix op = yu_oh_operator();
    CHECK(max_abs_diff(op, CMatrix::identity(3) * cplx(29.0 / 3.0)) < 1e-9);

    CHECK(yu_oh_nchv_bound() == doctest::Approx(9.0));

    // Each of the thirteen observables is a +-1 observable.
    for (const CMatrix& a : yu_oh_observables()) {
        CHECK(is_hermitian(a, 1e-12));
        CHECK(max_abs_diff(a * a, CMatrix::identity(3)) < 1e-12);
    }
}

TEST_CASE("ququart witness against the purity ceiling") {
    DensityMatrix mixed = DensityMatrix::maximally_mixed(4);
    CHECK(icosahedron_value(mixed, false) == doctest::Approx(3.0));
    CHECK(icosahedron_value(mixed, true) == doctest::Approx(3.0));
    CHECK(linear_entropy(mixed) == doctest::Approx(1.0));
    CHECK(icosahedron_purity_bound(mixed) == doctest::Approx(3.0));

    // A pure state aligned with the handle saturates 3(sqrt5 - 1).
    const OrthogonalRepresentation& rep = icosahedron_representation();
    std::vector<cplx> h(4);
    for (int i = 0; i < 4; ++i) h[static_cast<size_t>(i)] = rep.handle.entry(i);
    DensityMatrix aligned = make_pure_state(h);
    CHECK(linear_entropy(aligned) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(icosahedron_value(aligned, true) == doctest::Approx(3.0 * (kSqrt5 - 1.0)).epsilon(1e-6));
    CHECK(icosahedron_purity_bound(aligned) == doctest::Approx(3.0 * (kSqrt5 - 1.0)).epsilon(1e-9));

    // Alignment never hurts relative to the ceiling.
    Rng rng(2024);
    for (int k = 0; k < 20; ++k) {
        DensityMatrix rho = rng.density(4, rng.uniform_int(1, 4));
        CHECK(icosahedron_value(rho, true) <= icosahedron_purity_bound(rho) + 1e-6);
    }

    CHECK_THROWS_AS(linear_entropy(DensityMatrix::maximally_mixed(3)), DimensionError);
}

TEST_CASE("conditional witness values") {
    // Maximally entangled two-qutrit state: the witness reaches 1/9.
    const double s = 1.0 / std::sqrt(3.0);
    std::vector<cplx> amp(9, cplx(0.0));
    amp[0] = s;
    amp[4] = -s;
    amp[8] = s;
    CHECK(clfc_value(make_pure_state(amp)) == doctest::Approx(1.0 / 9.0).epsilon(1e-10));

    CHECK(clfc_value(DensityMatrix::maximally_mixed(9)) == doctest::Approx(-1.0 / 3.0));

    CHECK_THROWS_AS(clfc_value(DensityMatrix::maximally_mixed(3)), DimensionError);

    // Bob orthogonal to the conditioning direction (1,-1,1): undefined.
    std::vector<cplx> prod(9, cplx(0.0));
    const double t = 1.0 / std::sqrt(2.0);
    prod[0] = t; // |0> tensor (|0> + |1>)/sqrt2
    prod[1] = t;
    CHECK_THROWS_AS(clfc_value(make_pure_state(prod)), DomainError);
}

TEST_CASE("repreparation equals the sequential joint for rank-1 first measurements") {
    Rng rng(314159);
    RaySet rs = builtin_rayset("kcbs5");
    double worst = 0.0;
    for (int k = 0; k < 25; ++k) {
        DensityMatrix rho = rng.density(3, rng.uniform_int(1, 3));
        for (auto [i, j] : exclusivity_graph(rs).edges()) {
            double seq = sequential_joint(rho, rs.rays[static_cast<size_t>(i)],
                                          rs.rays[static_cast<size_t>(j)]);
            double rep = reprep_joint(rho, rs.rays[static_cast<size_t>(i)],
                                      rs.rays[static_cast<size_t>(j)]);
            worst = std::max(worst, std::abs(seq - rep));
        }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("completed-but-ignored measurements do not shift later marginals") {
    Rng rng(6021023);
    for (const char* name : {"kcbs5", "yu_oh13", "cabello18"}) {
        RaySet rs = builtin_rayset(name);
        DensityMatrix rho = rng.density(rs.dim, rs.dim);
        for (auto [i, j] : exclusivity_graph(rs).edges())
            CHECK(signaling_factor(rho, rs.rays[static_cast<size_t>(i)],
                                   rs.rays[static_cast<size_t>(j)]) < 1e-12);
    }

    DensityMatrix rho = DensityMatrix::maximally_mixed(2);
    Ray bad = Ray::from_ints("bad", {1, 0, 0});
    CHECK_THROWS_AS(sequential_joint(rho, bad, bad), DimensionError);
}
