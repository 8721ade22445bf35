#pragma once

#include "ctxkit/linalg.hpp"
#include "ctxkit/rays.hpp"
#include "ctxkit/theta.hpp"

#include <string>
#include <vector>

namespace ctxkit {

struct WitnessReport {
    std::string name;
    double evaluated_value = 0.0;
    double classical_bound = 0.0;
    double quantum_reference = 0.0;
    bool violated = false;
    double margin = 0.0;
};

WitnessReport make_witness_report(std::string name, double value, double classical_bound,
                                  double quantum_reference);

// Lüders-sequenced correlation of two +-1 observables: measure A, then B on
// each branch, and form the four-term signed sum.
double sequential_correlation(const DensityMatrix& rho, const CMatrix& A, const CMatrix& B);

// Sum of ray marginals minus sum of sequential joint probabilities over the
// edges of the exclusivity graph.
double csw_value(const RaySet& rs, const Graph& exclusivity, const DensityMatrix& rho);

// The thirteen-ray qutrit expression: +-1 observables A_k = I - 2|a_k><a_k|,
// correlations over exclusivity-graph edges only. Equal to 29/3 for every
// qutrit state; the classical assignment maximum is 9.
double yu_oh_value(const DensityMatrix& rho);
double yu_oh_nchv_bound();
CMatrix yu_oh_operator();
std::vector<CMatrix> yu_oh_observables();

// Twelve-ray ququart witness built on the cached icosahedron representation.
// With align set, the representation is rotated so the handle matches the
// state's dominant eigenvector before evaluating.
double icosahedron_value(const DensityMatrix& rho, bool align);
double linear_entropy(const DensityMatrix& rho);
double icosahedron_purity_bound(const DensityMatrix& rho);

// Pr(1,1 | i then j) under the Lüders update, its product-of-marginals
// repreparation form (identical for rank-1 first measurements), and the
// signaling factor (marginal shift caused by a completed-but-ignored first
// measurement).
double sequential_joint(const DensityMatrix& rho, const Projector& pi, const Projector& pj);
double sequential_joint(const DensityMatrix& rho, const Ray& i, const Ray& j);
double reprep_joint(const DensityMatrix& rho, const Ray& i, const Ray& j);
double signaling_factor(const DensityMatrix& rho, const Ray& i, const Ray& j);

// Two-qutrit conditional-probability witness; positive only on states whose
// conditional single-party statistics admit no classical-field explanation.
double clfc_value(const DensityMatrix& rho);

} // namespace ctxkit
