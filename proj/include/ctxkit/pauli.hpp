// Phased Pauli words on up to six qubits with exact group arithmetic.
#pragma once

#include <cstdint>
#include <string>

#include "ctxkit/linalg.hpp"

namespace ctxkit {

// i^phase_k * prod_q X^{x_q} Z^{z_q}. Qubit 0 is the leftmost factor in the
// string form and the most significant index of the matrix form. A Y factor
// is encoded as x=z=1 with one extra factor of i.
struct PauliWord {
    int n = 0;
    std::uint32_t x_mask = 0;
    std::uint32_t z_mask = 0;
    int phase_k = 0; // power of i, 0..3

    // "X.Y.I.Z" style; one letter per qubit, '.' separators optional.
    static PauliWord from_string(const std::string& s);
    std::string str() const; // letters with '.' separators; phase prefix when nontrivial

    CMatrix matrix() const; // dense 2^n x 2^n form
    bool operator==(const PauliWord& o) const = default;
};

PauliWord pauli_multiply(const PauliWord& a, const PauliWord& b);
bool commutes(const PauliWord& a, const PauliWord& b);

double stabilizer_expectation(const DensityMatrix& state, const PauliWord& w);

} // namespace ctxkit
