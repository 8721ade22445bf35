#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ctxkit/linalg.hpp"
#include "ctxkit/random.hpp"

namespace ctxkit {

// Qutrit Weyl-Heisenberg displacement D_{x,z} = tau^x sigma^z, where tau is
// the cyclic shift |j> -> |j+1 mod 3> and sigma = diag(1, w, w^2) with
// w = exp(2*pi*i/3). Exponents are reduced mod 3.
struct QutritDisplacement {
    int x = 0;
    int z = 0;
    CMatrix matrix;
};

QutritDisplacement displacement(int x, int z);

// Rank-1 eigenprojector of the j-th displacement basis (j in 1..4, standing
// for D_{0,1}, D_{1,0}, D_{1,1}, D_{1,2}) onto the eigenvalue w^r. Built by
// group averaging: (1/3) sum_k w^{-rk} D_j^k, which is exact up to rounding.
Projector mub_projector(int j, int r);

// The pure state spanned by mub_projector(j, r).
DensityMatrix mub_state(int j, int r);

// Largest deviation of tr(P_j^r P_j'^r') from 1/3 over all cross-basis pairs
// j != j'. Zero (to rounding) certifies the four bases are mutually unbiased.
double mub_overlap_deviation();

struct MagicWitness {
    int x = 0;
    int z = 0;
    std::array<int, 4> r_vector{};
    CMatrix op;   // I3 - sum_j P_j^{r_j}, Hermitian with trace -1
};

MagicWitness witness_operator(int x, int z);

// All nine witnesses in lexicographic (x, z) order.
const std::vector<MagicWitness>& magic_witnesses();

// max over the nine witnesses of tr(A rho). Ties break toward the
// lexicographically smallest (x, z), reported by magic_argmax.
double magic_value(const DensityMatrix& rho);
std::pair<int, int> magic_argmax(const DensityMatrix& rho);

// Noncontextual hidden-variable bound: enumerate all 81 deterministic outcome
// tables for the four bases, keep the ones consistent with the displacement
// algebra, and maximize the best witness value. Equals 0.
double nchv_bound_magic();

// Same enumeration without the algebra-consistency filter. Larger (1), which
// is why the filter matters.
double nchv_bound_magic_unrestricted();

// Bound when basis j (1..4) is left out of every witness. Rises to 1 for each
// choice, so all four measurements are load-bearing.
double nchv_bound_magic_without(int j);

// Largest eigenvalue over the nine witnesses and the corresponding pure
// eigenstate. The value is (sqrt(5)-1)/2.
std::pair<double, DensityMatrix> quantum_max_magic();

// Independent check of quantum_max_magic: random-restart fixed-point
// iteration over pure qutrit states, maximizing magic_value directly.
double quantum_max_magic_optimizer(Rng& rng, int restarts = 10, int iterations = 120);

struct ConjugationReport {
    bool permutes = false;
    std::vector<int> permutation;       // witness i maps to witness permutation[i]
    double max_matching_distance = 0.0; // worst best-match distance across witnesses
    bool values_invariant = false;
    double max_value_shift = 0.0;       // worst |value(U rho U+) - value(rho)| over samples
};

// Tests whether conjugation by U permutes the witness set (each U A U+ within
// 1e-8 of a distinct witness). When it does, checks on the samples that the
// witness maximum is unchanged within 1e-9 under rho -> U rho U+.
ConjugationReport unitary_conjugation_check(const CMatrix& u,
                                            const std::vector<DensityMatrix>& samples);

} // namespace ctxkit
