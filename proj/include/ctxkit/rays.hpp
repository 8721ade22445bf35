// Ray sets, orthogonality, exclusivity graphs, orthonormal-basis enumeration,
// the ray-file format, and the builtin sets the analyses are anchored on.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ctxkit/graph.hpp"
#include "ctxkit/linalg.hpp"
#include "ctxkit/rational.hpp"

namespace ctxkit {

// A projective ray. Exact rays keep their unnormalized Gaussian-rational
// entries (normalization happens only when a projector is built), so
// orthogonality is decided exactly; floating rays cover numerically derived
// representations.
struct Ray {
    std::string label;
    int dim = 0;
    bool exact = true;
    std::vector<GaussianRational> exact_entries; // when exact
    std::vector<cplx> float_entries;             // when !exact

    cplx entry(int i) const { return exact ? exact_entries[i].to_complex() : float_entries[i]; }
    bool is_zero() const;

    static Ray from_ints(std::string label, const std::vector<std::int64_t>& v);
    static Ray from_floats(std::string label, const std::vector<cplx>& v);
};

struct RaySet {
    std::string name;
    int dim = 0;
    std::vector<Ray> rays;

    // Validates shared dimension, nonzero rays and pairwise projective
    // distinctness (exact cross-product test for exact pairs, normalized
    // overlap within 1e-9 of +-1 for floating pairs).
    static RaySet create(std::string name, std::vector<Ray> rays);
};

// <a|b>, exact when both sides are exact (a zero then means exactly zero).
cplx inner_product(const Ray& a, const Ray& b);
bool exactly_orthogonal(const Ray& a, const Ray& b); // requires both exact

// Vertices are rays; an edge marks exact orthogonality (exact pairs) or
// normalized overlap <= tol (floating pairs).
Graph exclusivity_graph(const RaySet& rs, double tol);
Graph exclusivity_graph(const RaySet& rs); // default floating tolerance

// All size-d cliques of the exclusivity graph, lexicographic by member
// indices. Each one is a complete orthonormal measurement context.
std::vector<Basis> enumerate_bases(const RaySet& rs);

Projector projector_of(const Ray& r);

// name in {cabello18, yu_oh13, kcbs5}
RaySet builtin_rayset(const std::string& name);

RaySet parse_rayset(std::istream& in, const std::string& display_name);
RaySet parse_rayset_file(const std::string& path);
std::string serialize_rayset(const RaySet& rs);

} // namespace ctxkit
