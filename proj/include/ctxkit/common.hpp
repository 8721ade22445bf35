// Shared error types and the central tolerance bundle.
#pragma once

#include <stdexcept>
#include <string>

namespace ctxkit {

inline constexpr const char* kVersion = "1.0.0";

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operand shapes or dimensions do not match.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

// Input violates a documented precondition (non-Hermitian observable,
// zero ray, basis that is not a clique, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Malformed text input; carries a line number when one is known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_number(line) {}
    int line_number;
};

// An iterative routine failed to reach its target accuracy.
class NumericsError : public Error {
public:
    explicit NumericsError(const std::string& what) : Error(what) {}
};

// Every invariant check in the library reads its threshold from this record,
// so reproducibility is controlled by a single knob.
struct Tolerances {
    double hermitian = 1e-10;        // ||O - O^dag||_max for observables
    double density_hermitian = 1e-12;
    double unit_trace = 1e-12;
    double psd_floor = -1e-10;       // smallest admissible eigenvalue of a state
    double projector = 1e-10;        // ||P^2 - P||_max and trace-vs-rank
    double eigen_residual = 1e-9;
    double degeneracy = 1e-7;        // eigenvalue clustering width
    double float_edge = 1e-7;        // orthogonality threshold for floating rays
    double sdp_gap = 1e-9;           // default duality-gap target
    double chol_rank = 1e-6;         // rank-revealing pivot threshold
    double rep_orthogonality = 1e-5; // adjacent-vector overlap in a representation
    double rep_handle = 1e-4;        // handle-sum shortfall allowance
    double violation_margin = 1e-9;  // "value exceeds bound" decision width
};

// Mutable process-wide defaults. The CTXKIT_TOL environment variable, when
// set, overrides only the user-facing comparison width (violation_margin and
// the floating-ray edge threshold); solver-internal tolerances stay fixed.
Tolerances& tolerances();
void apply_tolerance_env();

} // namespace ctxkit
