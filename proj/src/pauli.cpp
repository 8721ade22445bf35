#include "ctxkit/pauli.hpp"

#include <bit>
#include <cmath>

namespace ctxkit {

PauliWord PauliWord::from_string(const std::string& s) {
    PauliWord w;
    for (char ch : s) {
        if (ch == '.' || ch == ' ' || ch == '\t') continue;
        if (w.n >= 6) throw DomainError("Pauli word longer than six qubits");
        std::uint32_t bit = 1u << w.n;
        switch (ch) {
            case 'I': case 'i': break;
            case 'X': case 'x': w.x_mask |= bit; break;
            case 'Z': case 'z': w.z_mask |= bit; break;
            case 'Y': case 'y':
                w.x_mask |= bit;
                w.z_mask |= bit;
                w.phase_k = (w.phase_k + 1) % 4;
                break;
            default:
                throw ParseError(std::string("unknown Pauli letter '") + ch + "'");
        }
        ++w.n;
    }
    if (w.n == 0) throw ParseError("empty Pauli word");
    return w;
}

std::string PauliWord::str() const {
    static const char* phase_names[4] = {"", "i*", "-", "-i*"};
    // Y factors each contributed one i at build time; undo them so the letter
    // form prints the residual scalar only.
    int k = phase_k;
    std::uint32_t ymask = x_mask & z_mask;
    k = (k + 4 - static_cast<int>(std::popcount(ymask)) % 4) % 4;
    std::string out = phase_names[k];
    for (int q = 0; q < n; ++q) {
        if (q) out += '.';
        bool x = (x_mask >> q) & 1, z = (z_mask >> q) & 1;
        out += x && z ? 'Y' : x ? 'X' : z ? 'Z' : 'I';
    }
    return out;
}

CMatrix PauliWord::matrix() const {
    const int d = 1 << n;
    // Matrix bit of qubit q is (n-1-q): qubit 0 is the most significant.
    std::uint32_t xm = 0, zm = 0;
    for (int q = 0; q < n; ++q) {
        if ((x_mask >> q) & 1) xm |= 1u << (n - 1 - q);
        if ((z_mask >> q) & 1) zm |= 1u << (n - 1 - q);
    }
    static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    CMatrix m = CMatrix::zero(d, d);
    for (int c = 0; c < d; ++c) {
        int r = c ^ static_cast<int>(xm);
        double sign = std::popcount(static_cast<std::uint32_t>(c) & zm) % 2 ? -1.0 : 1.0;
        m(r, c) = ipow[phase_k] * sign;
    }
    return m;
}

PauliWord pauli_multiply(const PauliWord& a, const PauliWord& b) {
    if (a.n != b.n) throw DimensionError("Pauli word size mismatch");
    PauliWord w;
    w.n = a.n;
    w.x_mask = a.x_mask ^ b.x_mask;
    w.z_mask = a.z_mask ^ b.z_mask;
    // Per qubit: Z^{za} X^{xb} = (-1)^{za xb} X^{xb} Z^{za}.
    int swaps = static_cast<int>(std::popcount(a.z_mask & b.x_mask));
    w.phase_k = (a.phase_k + b.phase_k + 2 * swaps) % 4;
    return w;
}

bool commutes(const PauliWord& a, const PauliWord& b) {
    if (a.n != b.n) throw DimensionError("Pauli word size mismatch");
    int sym = static_cast<int>(std::popcount(a.x_mask & b.z_mask)) +
              static_cast<int>(std::popcount(a.z_mask & b.x_mask));
    return sym % 2 == 0;
}

double stabilizer_expectation(const DensityMatrix& state, const PauliWord& w) {
    if (state.dim != (1 << w.n))
        throw DimensionError("state dimension does not match the word's qubit count");
    CMatrix m = w.matrix();
    cplx tr = 0.0;
    for (int i = 0; i < state.dim; ++i)
        for (int k = 0; k < state.dim; ++k) tr += state.matrix(i, k) * m(k, i);
    if (std::abs(tr.imag()) > 1e-10)
        throw NumericsError("stabilizer expectation came out complex");
    return tr.real();
}

} // namespace ctxkit
