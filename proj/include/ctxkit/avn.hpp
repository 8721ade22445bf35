// All-versus-nothing parity systems: clause algebra over named Pauli atoms,
// the GF(2) consistency decision, the Peres-Mermin chi value, and the
// hyperentanglement activation witness omega.
#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctxkit/pauli.hpp"

namespace ctxkit {

// One parity constraint: the product of the named atoms, taken as a single
// measured quantity each, is asserted to equal +1 or -1.
struct AVNClause {
    std::vector<std::string> factors;
    int asserted_value = 1;
};

struct AVNSystem {
    std::string name;
    int n_qubits = 0;
    std::vector<std::pair<std::string, PauliWord>> atoms; // insertion order
    std::vector<AVNClause> clauses;

    const PauliWord& atom(const std::string& id) const; // throws DomainError if missing
    PauliWord clause_product(const AVNClause& c) const;
};

// Throws DomainError unless every clause's factors are registered, mutually
// commuting, and no atom is registered twice.
void validate_avn_system(const AVNSystem& sys);

struct AVNVerdict {
    bool contradiction = false;
    bool all_atoms_even = false;  // every atom occurs an even number of times
    int asserted_product = 1;     // product of all asserted values
    std::map<std::string, int> model; // satisfying +-1 assignment when consistent
};

// Multiplies all clauses symbolically. With every atom occurring evenly the
// left side collapses to +1, so an asserted product of -1 is a parity
// contradiction; otherwise the GF(2) linear system is solved for a model.
AVNVerdict avn_parity_check(const AVNSystem& sys);

// Sum over clauses of asserted_value * <product of factors>; reaches the
// clause count only if the state satisfies every constraint.
double avn_sum_value(const AVNSystem& sys, const DensityMatrix& rho);

// Max of the same sum over all deterministic +-1 atom assignments.
int avn_classical_bound(const AVNSystem& sys);

// name in {avn_cabello01, phip_huang03, peres_mermin, bell_stabilizer}
AVNSystem builtin_avn(const std::string& name);
DensityMatrix avn_designated_state(const std::string& name);

AVNSystem parse_avn(std::istream& in, const std::string& display_name);
AVNSystem parse_avn_file(const std::string& path);
std::string serialize_avn(const AVNSystem& sys);

// Peres-Mermin square value on a two-qubit state: five positive contexts
// minus the negative one. Each context product is +-identity, so the value
// is 6 for every state.
double peres_mermin_chi(const DensityMatrix& rho);
int peres_mermin_classical_bound(); // 4, by 2^9 enumeration

// chi on the first party's marginal plus the twelve absolute cross
// correlations <O tensor O> of a four-qubit state (parties = qubit pairs
// (0,1) and (2,3)).
double activation_omega(const DensityMatrix& xi);

struct ActivationBreakdown {
    double chi = 0.0;
    std::vector<double> s_terms; // twelve absolute correlations
    double omega = 0.0;
};
ActivationBreakdown activation_breakdown(const DensityMatrix& xi);

// Exhaustive 2^18 deterministic-assignment maximum of chi + sum |cross|.
int activation_lhv_bound();

// Largest change of any cross correlation caused by first Lueders-measuring
// the term's declared context on the first party. Zero up to roundoff.
double activation_no_signaling_residual(const DensityMatrix& xi);

// Bell-pair helpers shared by tests and builtin states.
DensityMatrix bell_phi_plus();                  // (|00> + |11>)/sqrt2
DensityMatrix bell_psi_minus_adjacent();        // psi- on qubits (0,1) and on (2,3)
DensityMatrix bell_psi_minus_crossed();         // psi- on qubits (0,2) and on (1,3)

} // namespace ctxkit
