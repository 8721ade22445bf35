#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "ctxkit/graph.hpp"
#include "ctxkit/linalg.hpp"

namespace ctxkit {

// Deterministic random source. All distributions are derived from the raw
// mt19937_64 stream with fixed arithmetic (no std::*_distribution, whose
// output is implementation-defined), so a seed produces the same sequence
// on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    int uniform_int(int lo, int hi) {   // inclusive range
        if (hi < lo) throw DomainError("empty integer range");
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double u2 = uniform();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * 3.14159265358979323846 * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    cplx complex_gaussian() {
        double re = gaussian();
        double im = gaussian();
        return {re, im};
    }

    std::vector<cplx> unit_vector(int dim) {
        if (dim < 1) throw DimensionError("unit vector needs positive dimension");
        std::vector<cplx> v(static_cast<size_t>(dim));
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (auto& c : v) {
                c = complex_gaussian();
                norm2 += std::norm(c);
            }
        } while (norm2 < 1e-12);
        double inv = 1.0 / std::sqrt(norm2);
        for (auto& c : v) c *= inv;
        return v;
    }

    DensityMatrix pure_state(int dim) { return make_pure_state(unit_vector(dim)); }

    // Ginibre construction: G has i.i.d. complex gaussian entries and
    // G G† / tr(G G†) is a full-support random state of the given rank.
    DensityMatrix density(int dim, int rank) {
        if (dim < 1 || rank < 1 || rank > dim)
            throw DimensionError("density rank must lie in 1..dim");
        CMatrix g(dim, rank);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < rank; ++j) g(i, j) = complex_gaussian();
        CMatrix m = g * g.adjoint();
        cplx tr = m.trace();
        m = m * cplx(1.0 / tr.real(), 0.0);
        return DensityMatrix::from_matrix(m);
    }

    Graph graph(int n, double edge_prob = 0.5) {
        Graph g = Graph::empty(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (uniform() < edge_prob) g.add_edge(i, j);
        return g;
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace ctxkit
