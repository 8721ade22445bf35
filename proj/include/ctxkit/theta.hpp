#pragma once

#include "ctxkit/graph.hpp"
#include "ctxkit/rays.hpp"

#include <utility>
#include <vector>

namespace ctxkit {

// Optimal solution of  max <J,X>  s.t.  tr X = 1, X_ij = 0 on edges, X psd,
// together with the dual multipliers. `theta` is the primal objective,
// `dual_value` the dual one; both bracket the Lovasz number.
struct ThetaCertificate {
    double theta = 0.0;
    double dual_value = 0.0;
    double gap = 0.0;
    int iterations = 0;
    CMatrix X;
    std::vector<double> dual_y;                    // trace multiplier, then one per edge
    std::vector<std::pair<int, int>> edge_order;   // edge k <-> dual_y[1 + k]
};

// Primal-dual interior-point solve. tol must be >= 1e-9; throws
// NumericsError with the achieved gap if the solver stalls.
ThetaCertificate lovasz_theta(const Graph& g, double tol = 1e-9);

// Re-checks a certificate from scratch: X psd / unit trace / zero on edges,
// dual slack psd, duality gap within tol. Throws on failure.
void validate_theta_certificate(const Graph& g, const ThetaCertificate& cert, double tol);

// Unit vectors {phi_v} (one per vertex, orthogonal across edges) and a unit
// handle psi with sum_v |<phi_v|psi>|^2 >= theta - 1e-4, factored out of the
// certificate matrix by pivoted Cholesky.
struct OrthogonalRepresentation {
    RaySet rays;
    Ray handle;
    int dimension = 0;
};

OrthogonalRepresentation orthogonal_representation(const Graph& g, const ThetaCertificate& cert);

// Cached representation of the icosahedron skeleton (12 rays, dimension 4);
// deterministic, solved once per process.
const OrthogonalRepresentation& icosahedron_representation();
const ThetaCertificate& icosahedron_certificate();

// Explicit dimension-4 representation of the 16-vertex augmented graph:
// the 12 icosahedron rays plus one completion ray per attachment face.
// The certificate matrix of the augmented graph itself sits at the analytic
// center of the optimal face and factors at a higher rank, so the minimal
// embedding is built constructively instead.
RaySet icosahedron_aux_rays();

} // namespace ctxkit
