#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "ctxkit/rays.hpp"

using namespace ctxkit;

namespace {

std::string data_file(const char* name) {
    return std::string(CTXKIT_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("entry grammar covers integers, rationals, complex and decimal forms") {
    std::istringstream in(
        "dim 3\n"
        "a: (1, -2, 3)\n"
        "b: (1/2, 0, -3/4)\n"
        "c: (1+2i, -i, 0)\n"
        "d: (0.5, 0.25, 0)   # decimal entries demote the set to floating\n");
    RaySet rs = parse_rayset(in, "mixed-forms");
    REQUIRE(rs.rays.size() == 4);
    // One floating ray makes the whole set floating so orthogonality is
    // decided by a single rule.
    for (const Ray& r : rs.rays) CHECK_FALSE(r.exact);
    CHECK(rs.rays[2].entry(0) == cplx(1.0, 2.0));
    CHECK(rs.rays[2].entry(1) == cplx(0.0, -1.0));
    CHECK(rs.rays[1].entry(2).real() == doctest::Approx(-0.75));
}

TEST_CASE("all-exact files keep exact arithmetic") {
    std::istringstream in(
        "dim 2\n"
        "p: (1, 1)\n"
        "q: (1, -1)\n"
        "r: (1+i, 1-i)\n");
    RaySet rs = parse_rayset(in, "exact");
    for (const Ray& r : rs.rays) CHECK(r.exact);
    CHECK(exactly_orthogonal(rs.rays[0], rs.rays[1]));
    CHECK_FALSE(exactly_orthogonal(rs.rays[0], rs.rays[2]));
    // <p|r> = (1+i) + (1-i) = 2, exactly.
    CHECK(inner_product(rs.rays[0], rs.rays[2]) == cplx(2.0, 0.0));
}

TEST_CASE("parser rejects malformed input") {
    auto parse = [](const char* text) {
        std::istringstream in(text);
        return parse_rayset(in, "bad");
    };
    CHECK_THROWS_AS(parse("a: (1, 0)\n"), ParseError);            // missing header
    CHECK_THROWS_AS(parse("dim 2\na: (1, 0, 0)\n"), ParseError);  // wrong arity
    CHECK_THROWS_AS(parse("dim 2\na: 1, 0\n"), ParseError);       // no parens
    CHECK_THROWS_AS(parse("dim 2\n: (1, 0)\n"), ParseError);      // empty label
    CHECK_THROWS_AS(parse("dim 2\na: (1, x)\n"), ParseError);     // bad entry
    CHECK_THROWS_AS(parse("dim 2\n"), ParseError);                // no rays
    CHECK_THROWS_AS(parse("dim 0\na: ()\n"), ParseError);         // bad dimension
}

TEST_CASE("ray set validation") {
    // Zero rays are rejected.
    CHECK_THROWS_AS(RaySet::create("z", {Ray::from_ints("a", {0, 0})}), DomainError);
    // Scalar multiples describe the same ray.
    CHECK_THROWS_AS(RaySet::create("dup", {Ray::from_ints("a", {1, 2}),
                                           Ray::from_ints("b", {2, 4})}),
                    DomainError);
    // Mixed dimensions are rejected.
    CHECK_THROWS_AS(RaySet::create("dims", {Ray::from_ints("a", {1, 0}),
                                            Ray::from_ints("b", {1, 0, 0})}),
                    Error);
}

TEST_CASE("builtin eighteen-ray set structure") {
    RaySet rs = builtin_rayset("cabello18");
    REQUIRE(rs.dim == 4);
    REQUIRE(rs.rays.size() == 18);
    CHECK(rs.rays.front().label == "u1");
    CHECK(rs.rays.back().label == "u18");
    for (const Ray& r : rs.rays) CHECK(r.exact);

    std::vector<Basis> bases = enumerate_bases(rs);
    REQUIRE(bases.size() == 9);
    std::vector<int> uses(18, 0);
    for (const Basis& b : bases) {
        REQUIRE(b.member_indices.size() == 4);
        for (int i : b.member_indices) ++uses[static_cast<size_t>(i)];
    }
    for (int u : uses) CHECK(u == 2);
}

TEST_CASE("builtin thirteen-ray set structure") {
    RaySet rs = builtin_rayset("yu_oh13");
    REQUIRE(rs.dim == 3);
    REQUIRE(rs.rays.size() == 13);
    CHECK(rs.rays[0].label == "h0");
    CHECK(rs.rays[12].label == "z3");
    Graph g = exclusivity_graph(rs);
    CHECK(g.edge_count() == 24);
    // The four z-triangles: each z-pair is orthogonal.
    int z1 = 10, z2 = 11, z3 = 12;
    CHECK(g.has_edge(z1, z2));
    CHECK(g.has_edge(z1, z3));
    CHECK(g.has_edge(z2, z3));
}

TEST_CASE("builtin pentagon rays give the five-cycle") {
    RaySet rs = builtin_rayset("kcbs5");
    REQUIRE(rs.rays.size() == 5);
    Graph g = exclusivity_graph(rs);
    CHECK(g.edge_count() == 5);
    for (int i = 0; i < 5; ++i) CHECK(g.degree(i) == 2);
    // v0 = (1,0,0) is orthogonal to v1 = (0,1,0) and v4 = (0,1,1).
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(0, 4));
    CHECK_FALSE(g.has_edge(0, 2));

    CHECK_THROWS_AS(builtin_rayset("nope"), DomainError);
}

TEST_CASE("projector of an unnormalized ray is idempotent with unit trace") {
    Ray r = Ray::from_ints("r", {1, 1, -1});
    Projector p = projector_of(r);
    CHECK(p.rank == 1);
    CHECK(p.matrix.trace().real() == doctest::Approx(1.0));
    CHECK(p.matrix(0, 0).real() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("serialize and reparse preserves every builtin ray set") {
    for (const char* name : {"cabello18", "yu_oh13", "kcbs5"}) {
        RaySet rs = builtin_rayset(name);
        std::string text = serialize_rayset(rs);
        std::istringstream in(text);
        RaySet back = parse_rayset(in, name);
        CHECK(serialize_rayset(back) == text);
        REQUIRE(back.rays.size() == rs.rays.size());
        for (size_t i = 0; i < rs.rays.size(); ++i) {
            CHECK(back.rays[i].label == rs.rays[i].label);
            for (int k = 0; k < rs.dim; ++k)
                CHECK(std::abs(back.rays[i].entry(k) - rs.rays[i].entry(k)) < 1e-15);
        }
    }
}

TEST_CASE("shipped data files match the builtins byte for byte") {
    struct Pair {
        const char* file;
        const char* name;
    };
    for (Pair p : {Pair{"cabello18.rays", "cabello18"}, Pair{"yu_oh13.rays", "yu_oh13"},
                   Pair{"kcbs5.rays", "kcbs5"}}) {
        std::ifstream in(data_file(p.file));
        REQUIRE_MESSAGE(in.good(), p.file);
        std::stringstream buf;
        buf << in.rdbuf();
        CHECK(buf.str() == serialize_rayset(builtin_rayset(p.name)));
    }
}

TEST_CASE("floating exclusivity obeys the edge tolerance") {
    // Two nearly orthogonal floating rays: edge appears only when the
    // threshold admits the residual overlap.
    Ray a = Ray::from_floats("a", {cplx(1.0), cplx(0.0)});
    Ray b = Ray::from_floats("b", {cplx(1e-8), cplx(1.0)});
    RaySet rs = RaySet::create("near", {a, b});
    CHECK(exclusivity_graph(rs, 1e-7).edge_count() == 1);
    CHECK(exclusivity_graph(rs, 1e-9).edge_count() == 0);
}
