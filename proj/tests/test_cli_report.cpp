#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "ctxkit/magic.hpp"
#include "ctxkit/report.hpp"
#include "ctxkit/states.hpp"

using namespace ctxkit;

TEST_CASE("number formatting is stable and sign-clean") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0"); // negative zero never leaks into output
    CHECK(format_number(18.0) == "18");
    CHECK(format_number(29.0 / 3.0) == "9.66666666667");
    CHECK(format_number(-1.0 / 3.0) == "-0.333333333333");
    CHECK(format_number(1e-15) == "1e-15");
    CHECK(format_number(0.1 + 0.2) == "0.3"); // 12 digits hide the binary residue
    CHECK(format_number(std::sqrt(5.0)) == "2.2360679775");
    // A value that rounds to negative zero at 12 digits folds too.
    CHECK(format_number(-1e-30) == "-1e-30");
}

TEST_CASE("document envelope") {
    json doc = make_document("graph");
    CHECK(doc["schema"] == 1);
    CHECK(doc["version"] == kVersion);
    CHECK(doc["command"] == "graph");

    // Envelope keys come first and in declaration order.
    auto it = doc.begin();
    CHECK(it.key() == "schema");
    ++it;
    CHECK(it.key() == "version");
    ++it;
    CHECK(it.key() == "command");

    std::string text = dump_document(doc);
    CHECK(text.back() == '\n');
    CHECK(text.find("  \"schema\": 1") != std::string::npos);
}

TEST_CASE("witness reports serialize every number as a formatted string") {
    WitnessReport r = make_witness_report("omega", 18.0, 16.0, 18.0);
    json j = witness_json(r);
    CHECK(j["name"] == "omega");
    CHECK(j["value"] == "18");
    CHECK(j["classical_bound"] == "16");
    CHECK(j["quantum_reference"] == "18");
    CHECK(j["violated"] == true);
    CHECK(j["margin"] == "2");
}

TEST_CASE("builtin state tags") {
    CHECK(builtin_state("mixed", 7).dim == 7);
    CHECK(builtin_state("xi", 16).dim == 16);
    CHECK(builtin_state("phi+", 4).dim == 4);
    CHECK(builtin_state("maxent3x3", 9).dim == 9);

    DensityMatrix opt = builtin_state("magicopt", 3);
    CHECK(opt.dim == 3);
    CHECK(magic_value(opt) == doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0).epsilon(1e-9));

    CHECK_THROWS_AS(builtin_state("bell", 4), DomainError);
}

TEST_CASE("pure state files") {
    std::istringstream in(
        "# a qubit on the equator\n"
        "dim 2\n"
        "pure (1, i)\n");
    DensityMatrix rho = parse_state(in);
    CHECK(rho.dim == 2);
    CHECK(rho.matrix(0, 0).real() == doctest::Approx(0.5)); // normalized
    CHECK(rho.matrix(0, 1) == cplx(0.0, -0.5));

    std::istringstream full(
        "dim 3\n"
        "pure (0.5, -0.5-0.5i, 1e-1i)\n");
    DensityMatrix r2 = parse_state(full);
    CHECK(r2.dim == 3);
    CHECK(r2.matrix.trace().real() == doctest::Approx(1.0));
}

TEST_CASE("mixed state files") {
    std::istringstream in(
        "dim 2\n"
        "mixed\n"
        "0.75 0\n"
        "0 0.25\n");
    DensityMatrix rho = parse_state(in);
    CHECK(rho.matrix(0, 0).real() == doctest::Approx(0.75));

    // Complex off-diagonal entries are read entry by entry.
    std::istringstream herm(
        "dim 2\n"
        "mixed\n"
        "0.5 0.5i\n"
        "-0.5i 0.5\n");
    DensityMatrix r2 = parse_state(herm);
    CHECK(r2.matrix(0, 1) == cplx(0.0, 0.5));
}

TEST_CASE("environment tolerance override") {
    Tolerances saved = tolerances();

    setenv("CTXKIT_TOL", "1e-3", 1);
    apply_tolerance_env();
    CHECK(tolerances().violation_margin == doctest::Approx(1e-3));
    CHECK(tolerances().float_edge == doctest::Approx(1e-3));
    // Solver-internal thresholds are not user-tunable.
    CHECK(tolerances().sdp_gap == doctest::Approx(saved.sdp_gap));

    for (const char* bad : {"bogus", "-2", "0", "nan"}) {
        setenv("CTXKIT_TOL", bad, 1);
        CHECK_THROWS_AS(apply_tolerance_env(), ParseError);
    }

    unsetenv("CTXKIT_TOL");
    tolerances() = saved;
    apply_tolerance_env(); // absent variable is a no-op
    CHECK(tolerances().violation_margin == doctest::Approx(saved.violation_margin));
}

TEST_CASE("state files that violate the format or the physics are rejected") {
    auto fails = [](const char* text) {
        std::istringstream in(text);
        return parse_state(in);
    };
    CHECK_THROWS_AS(fails(""), ParseError);
    CHECK_THROWS_AS(fails("dim 0\npure (1)\n"), ParseError);
    CHECK_THROWS_AS(fails("dim 65\nmixed\n"), ParseError);
    CHECK_THROWS_AS(fails("dim 2\npure (1)\n"), ParseError);          // arity
    CHECK_THROWS_AS(fails("dim 2\npure (1, x)\n"), ParseError);       // literal
    CHECK_THROWS_AS(fails("dim 2\npure 1, 0\n"), ParseError);         // parens
    CHECK_THROWS_AS(fails("dim 2\nmixed\n1 0\n"), ParseError);        // missing row
    CHECK_THROWS_AS(fails("dim 2\nmixed\n1 0\n0 1\n"), ParseError);   // trace 2
    CHECK_THROWS_AS(fails("dim 2\nneither\n"), ParseError);
    // Physically invalid but well-formed: negative eigenvalue.
    CHECK_THROWS_AS(fails("dim 2\nmixed\n1.5 0\n0 -0.5\n"), ParseError);
}
