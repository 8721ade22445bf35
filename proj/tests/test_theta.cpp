#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "ctxkit/theta.hpp"

using namespace ctxkit;

TEST_CASE("known theta values") {
    const double sqrt5 = std::sqrt(5.0);

    ThetaCertificate c5 = lovasz_theta(builtin_graph("c5"));
    CHECK(c5.theta == doctest::Approx(sqrt5).epsilon(1e-8));
    CHECK(c5.gap <= 1e-8);

    ThetaCertificate k4 = lovasz_theta(builtin_graph("k4"));
    CHECK(k4.theta == doctest::Approx(1.0).epsilon(1e-8));

    // No edges: theta collapses to the vertex count.
    ThetaCertificate empty = lovasz_theta(Graph::empty(4));
    CHECK(empty.theta == doctest::Approx(4.0).epsilon(1e-8));

    ThetaCertificate ico = lovasz_theta(builtin_graph("icosahedron"));
    CHECK(ico.theta == doctest::Approx(3.0 * (sqrt5 - 1.0)).epsilon(1e-7));

    ThetaCertificate aux = lovasz_theta(builtin_graph("icosahedron_aux"));
    CHECK(aux.theta == doctest::Approx(4.0).epsilon(1e-7));

    CHECK_THROWS_AS(lovasz_theta(builtin_graph("c5"), 1e-12), DomainError);
}

TEST_CASE("certificate validation catches tampering") {
    Graph g = builtin_graph("c5");
    ThetaCertificate cert = lovasz_theta(g);
    validate_theta_certificate(g, cert, 1e-8); // the genuine one passes

    ThetaCertificate wrong_gap = cert;
    wrong_gap.dual_value += 1e-3;
    CHECK_THROWS_AS(validate_theta_certificate(g, wrong_gap, 1e-8), NumericsError);

    ThetaCertificate edge_support = cert;
    auto [i, j] = edge_support.edge_order.front();
    edge_support.X(i, j) = 0.05;
    edge_support.X(j, i) = 0.05;
    CHECK_THROWS_AS(validate_theta_certificate(g, edge_support, 1e-8), NumericsError);

    ThetaCertificate wrong_trace = cert;
    wrong_trace.X(0, 0) += 0.1;
    CHECK_THROWS_AS(validate_theta_certificate(g, wrong_trace, 1e-8), NumericsError);

    ThetaCertificate wrong_graph = cert;
    CHECK_THROWS_AS(validate_theta_certificate(builtin_graph("k4"), wrong_graph, 1e-8),
                    DimensionError);
}

TEST_CASE("alpha <= theta on random graphs") {
    std::mt19937_64 gen(777);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 5 + static_cast<int>(gen() % 8); // 5..12
        Graph g = Graph::empty(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (gen() % 2) g.add_edge(i, j);
        ThetaCertificate cert = lovasz_theta(g, 1e-8);
        int alpha = independence_number(g);
        CHECK(static_cast<double>(alpha) <= cert.theta + 1e-6);
    }
}

TEST_CASE("orthogonal representation extracted from the pentagon certificate") {
    Graph g = builtin_graph("c5");
    ThetaCertificate cert = lovasz_theta(g);
    OrthogonalRepresentation rep = orthogonal_representation(g, cert);
    REQUIRE(static_cast<int>(rep.rays.rays.size()) == 5);

    // Unit vectors, orthogonal across every edge.
    for (const Ray& r : rep.rays.rays)
        CHECK(std::abs(inner_product(r, r).real() - 1.0) < 1e-8);
    for (auto [i, j] : g.edges())
        CHECK(std::abs(inner_product(rep.rays.rays[static_cast<size_t>(i)],
                                     rep.rays.rays[static_cast<size_t>(j)])) < 1e-5);

    // The handle reproduces theta as a sum of squared overlaps.
    double hsum = 0.0;
    for (const Ray& r : rep.rays.rays) hsum += std::norm(inner_product(r, rep.handle));
    CHECK(hsum >= cert.theta - 1e-4);
}

TEST_CASE("cached icosahedron representation") {
    const OrthogonalRepresentation& rep = icosahedron_representation();
    CHECK(rep.dimension == 4);
    REQUIRE(rep.rays.rays.size() == 12);

    const double sqrt5 = std::sqrt(5.0);
    double hsum = 0.0;
    for (const Ray& r : rep.rays.rays) hsum += std::norm(inner_product(r, rep.handle));
    CHECK(hsum == doctest::Approx(3.0 * (sqrt5 - 1.0)).epsilon(1e-6));

    // Sum of the twelve ray projectors: largest eigenvalue 3(sqrt5 - 1),
    // the rest 5 - sqrt5 each (threefold).
    CMatrix sum = CMatrix::zero(4, 4);
    for (const Ray& r : rep.rays.rays) sum = sum + projector_of(r).matrix;
    std::vector<double> spec = hermitian_spectrum(sum);
    CHECK(spec[0] == doctest::Approx(3.0 * (sqrt5 - 1.0)).epsilon(1e-6));
    for (int k = 1; k < 4; ++k) CHECK(spec[k] == doctest::Approx(5.0 - sqrt5).epsilon(1e-6));

    // Same object every call.
    CHECK(&rep == &icosahedron_representation());
    CHECK(icosahedron_certificate().theta == doctest::Approx(3.0 * (sqrt5 - 1.0)).epsilon(1e-7));
}

TEST_CASE("explicit four-dimensional vectors for the augmented graph") {
    RaySet aux = icosahedron_aux_rays();
    REQUIRE(aux.rays.size() == 16);
    CHECK(aux.dim == 4);

    Graph g = builtin_graph("icosahedron_aux");
    // Every edge of the augmented graph is realized as orthogonality.
    for (auto [i, j] : g.edges())
        CHECK(std::abs(inner_product(aux.rays[static_cast<size_t>(i)],
                                     aux.rays[static_cast<size_t>(j)])) < 1e-8);
    // The first twelve vectors are the icosahedron representation itself.
    const OrthogonalRepresentation& rep = icosahedron_representation();
    for (size_t k = 0; k < 12; ++k)
        CHECK(std::abs(std::abs(inner_product(aux.rays[k], rep.rays.rays[k])) - 1.0) < 1e-8);
}
