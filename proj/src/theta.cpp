#include "ctxkit/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ctxkit {

namespace {

// The solver works on real symmetric matrices stored row-major.
using RMat = std::vector<double>;

RMat rmat_identity(int n, double scale = 1.0) {
    RMat a(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) a[static_cast<size_t>(i) * n + i] = scale;
    return a;
}

RMat rmat_mul(int n, const RMat& a, const RMat& b) {
    RMat c(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            double aik = a[static_cast<size_t>(i) * n + k];
            if (aik == 0.0) continue;
            const double* brow = &b[static_cast<size_t>(k) * n];
            double* crow = &c[static_cast<size_t>(i) * n];
            for (int j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    return c;
}

void rmat_symmetrize(int n, RMat& a) {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v = 0.5 * (a[static_cast<size_t>(i) * n + j] + a[static_cast<size_t>(j) * n + i]);
            a[static_cast<size_t>(i) * n + j] = v;
            a[static_cast<size_t>(j) * n + i] = v;
        }
}

double rmat_dot(const RMat& a, const RMat& b) {
    double s = 0.0;
    for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

// Eigen-decomposition through the Hermitian solver; inputs are symmetric so
// everything stays real.
void sym_eig(int n, const RMat& a, std::vector<double>& vals, RMat& vecs) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = a[static_cast<size_t>(i) * n + j];
    EigenSystem es = hermitian_eigensystem(m);
    vals = es.values;
    vecs.assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) vecs[static_cast<size_t>(i) * n + j] = es.vectors(i, j).real();
}

// V f(D) V^T from an eigen-decomposition.
RMat assemble(int n, const std::vector<double>& vals, const RMat& vecs, double (*f)(double)) {
    RMat out(static_cast<size_t>(n) * n, 0.0);
    for (int k = 0; k < n; ++k) {
        double fk = f(vals[static_cast<size_t>(k)]);
        if (fk == 0.0) continue;
        for (int i = 0; i < n; ++i) {
            double vik = vecs[static_cast<size_t>(i) * n + k] * fk;
            if (vik == 0.0) continue;
            for (int j = 0; j < n; ++j)
                out[static_cast<size_t>(i) * n + j] += vik * vecs[static_cast<size_t>(j) * n + k];
        }
    }
    return out;
}

bool try_cholesky(int n, RMat a) {
    for (int k = 0; k < n; ++k) {
        double d = a[static_cast<size_t>(k) * n + k];
        for (int p = 0; p < k; ++p) {
            double l = a[static_cast<size_t>(k) * n + p];
            d -= l * l;
        }
        if (!(d > 0.0) || !std::isfinite(d)) return false;
        double dk = std::sqrt(d);
        a[static_cast<size_t>(k) * n + k] = dk;
        for (int i = k + 1; i < n; ++i) {
            double v = a[static_cast<size_t>(i) * n + k];
            for (int p = 0; p < k; ++p)
                v -= a[static_cast<size_t>(i) * n + p] * a[static_cast<size_t>(k) * n + p];
            a[static_cast<size_t>(i) * n + k] = v / dk;
        }
    }
    return true;
}

// Cholesky solve of a symmetric positive definite system, with a tiny ridge
// retry for near-singular Schur complements late in the solve.
std::vector<double> spd_solve(int m, RMat a, std::vector<double> rhs) {
    double tr = 0.0;
    for (int i = 0; i < m; ++i) tr += a[static_cast<size_t>(i) * m + i];
    double ridge = 0.0;
    for (int attempt = 0; attempt < 6; ++attempt) {
        RMat l = a;
        if (ridge > 0.0)
            for (int i = 0; i < m; ++i) l[static_cast<size_t>(i) * m + i] += ridge;
        bool ok = true;
        for (int k = 0; k < m && ok; ++k) {
            double d = l[static_cast<size_t>(k) * m + k];
            for (int p = 0; p < k; ++p) {
                double v = l[static_cast<size_t>(k) * m + p];
                d -= v * v;
            }
            if (!(d > 0.0) || !std::isfinite(d)) { ok = false; break; }
            double dk = std::sqrt(d);
            l[static_cast<size_t>(k) * m + k] = dk;
            for (int i = k + 1; i < m; ++i) {
                double v = l[static_cast<size_t>(i) * m + k];
                for (int p = 0; p < k; ++p)
                    v -= l[static_cast<size_t>(i) * m + p] * l[static_cast<size_t>(k) * m + p];
                l[static_cast<size_t>(i) * m + k] = v / dk;
            }
        }
        if (!ok) {
            ridge = ridge == 0.0 ? 1e-14 * std::max(tr / m, 1.0) : ridge * 100.0;
            continue;
        }
        // forward then backward substitution
        std::vector<double> z(rhs);
        for (int i = 0; i < m; ++i) {
            double v = z[static_cast<size_t>(i)];
            for (int p = 0; p < i; ++p) v -= l[static_cast<size_t>(i) * m + p] * z[static_cast<size_t>(p)];
            z[static_cast<size_t>(i)] = v / l[static_cast<size_t>(i) * m + i];
        }
        for (int i = m - 1; i >= 0; --i) {
            double v = z[static_cast<size_t>(i)];
            for (int p = i + 1; p < m; ++p) v -= l[static_cast<size_t>(p) * m + i] * z[static_cast<size_t>(p)];
            z[static_cast<size_t>(i)] = v / l[static_cast<size_t>(i) * m + i];
        }
        return z;
    }
    throw NumericsError("singular Schur system in theta solver");
}

struct ThetaProblem {
    int n;
    std::vector<std::pair<int, int>> edges;

    // <A_k, M> for every constraint: trace, then twice each edge entry.
    std::vector<double> apply_A(const RMat& m) const {
        std::vector<double> out(1 + edges.size());
        double tr = 0.0;
        for (int i = 0; i < n; ++i) tr += m[static_cast<size_t>(i) * n + i];
        out[0] = tr;
        for (size_t k = 0; k < edges.size(); ++k)
            out[1 + k] = 2.0 * m[static_cast<size_t>(edges[k].first) * n + edges[k].second];
        return out;
    }

    // sum_k y_k A_k
    RMat apply_At(const std::vector<double>& y) const {
        RMat s = rmat_identity(n, y[0]);
        for (size_t k = 0; k < edges.size(); ++k) {
            auto [i, j] = edges[k];
            s[static_cast<size_t>(i) * n + j] += y[1 + k];
            s[static_cast<size_t>(j) * n + i] += y[1 + k];
        }
        return s;
    }

    RMat slack(const std::vector<double>& y) const {
        RMat s = apply_At(y);
        for (double& v : s) v -= 1.0;   // subtract the all-ones matrix
        for (int i = 0; i < n; ++i) s[static_cast<size_t>(i) * n + i] += 0.0;
        return s;
    }
};

double max_psd_step(int n, const RMat& p, const RMat& dp) {
    double a = 1.0;
    for (int k = 0; k < 60; ++k) {
        RMat trial = p;
        for (size_t t = 0; t < trial.size(); ++t) trial[t] += a * dp[t];
        if (try_cholesky(n, trial)) return a;
        a *= 0.8;
    }
    return 0.0;
}

double fsqrt(double x) { return x > 0.0 ? std::sqrt(x) : 0.0; }
double finvsqrt(double x) { return x > 0.0 ? 1.0 / std::sqrt(x) : 0.0; }
double finv(double x) { return x != 0.0 ? 1.0 / x : 0.0; }
double fclamp0(double x) { return x > 0.0 ? x : 0.0; }

// Dykstra-style cleanup used only when the interior-point loop stalls:
// alternate projections onto the affine constraints and the psd cone.
RMat alternating_projection_refine(const ThetaProblem& pr, RMat x, int rounds) {
    const int n = pr.n;
    RMat p_corr(x.size(), 0.0), q_corr(x.size(), 0.0);
    auto proj_affine = [&](RMat m) {
        rmat_symmetrize(n, m);
        for (auto [i, j] : pr.edges) {
            m[static_cast<size_t>(i) * n + j] = 0.0;
            m[static_cast<size_t>(j) * n + i] = 0.0;
        }
        double tr = 0.0;
        for (int i = 0; i < n; ++i) tr += m[static_cast<size_t>(i) * n + i];
        double shift = (1.0 - tr) / n;
        for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] += shift;
        return m;
    };
    auto proj_psd = [&](RMat m) {
        rmat_symmetrize(n, m);
        std::vector<double> vals;
        RMat vecs;
        sym_eig(n, m, vals, vecs);
        return assemble(n, vals, vecs, &fclamp0);
    };
    for (int r = 0; r < rounds; ++r) {
        RMat t = x;
        for (size_t k = 0; k < t.size(); ++k) t[k] += p_corr[k];
        RMat y = proj_affine(t);
        for (size_t k = 0; k < t.size(); ++k) p_corr[k] = t[k] - y[k];
        for (size_t k = 0; k < y.size(); ++k) y[k] += q_corr[k];
        RMat z = proj_psd(y);
        for (size_t k = 0; k < y.size(); ++k) q_corr[k] = y[k] - z[k];
        x = std::move(z);
    }
    return proj_affine(x);
}

} // namespace

ThetaCertificate lovasz_theta(const Graph& g, double tol) {
    if (tol < 1e-9) throw DomainError("theta tolerance below 1e-9");
    const int n = g.n;
    ThetaProblem pr{n, g.edges()};
    const int m = 1 + static_cast<int>(pr.edges.size());

    ThetaCertificate cert;
    cert.edge_order = pr.edges;

    if (n == 1) {
        cert.theta = 1.0;
        cert.dual_value = 1.0;
        cert.gap = 0.0;
        cert.X = CMatrix::identity(1);
        cert.dual_y = {1.0};
        validate_theta_certificate(g, cert, tol);
        return cert;
    }

    RMat X = rmat_identity(n, 1.0 / n);
    std::vector<double> y(static_cast<size_t>(m), 1.0);
    y[0] = n + 1.0;

    std::vector<double> b(static_cast<size_t>(m), 0.0);
    b[0] = 1.0;

    const int maxit = 200;
    bool converged = false;
    int used_iters = 0;

    for (int it = 0; it < maxit; ++it) {
        used_iters = it;
        RMat S = pr.slack(y);          // dual feasibility is exact by construction

        double primal = std::accumulate(X.begin(), X.end(), 0.0);
        double gap = y[0] - primal;
        std::vector<double> ax = pr.apply_A(X);
        double rp_norm = 0.0;
        std::vector<double> rp(static_cast<size_t>(m));
        for (int k = 0; k < m; ++k) {
            rp[static_cast<size_t>(k)] = b[static_cast<size_t>(k)] - ax[static_cast<size_t>(k)];
            rp_norm = std::max(rp_norm, std::abs(rp[static_cast<size_t>(k)]));
        }
        if (std::abs(gap) <= tol && rp_norm <= 1e-10) {
            converged = true;
            break;
        }

        std::vector<double> ws;
        RMat vs;
        sym_eig(n, S, ws, vs);
        if (ws.back() <= 0.0) break;   // slack left the cone; fall through to cleanup

        RMat Shalf = assemble(n, ws, vs, &fsqrt);
        RMat Sminushalf = assemble(n, ws, vs, &finvsqrt);
        RMat Sinv = assemble(n, ws, vs, &finv);

        RMat M0 = rmat_mul(n, rmat_mul(n, Shalf, X), Shalf);
        rmat_symmetrize(n, M0);
        std::vector<double> wm;
        RMat vm;
        sym_eig(n, M0, wm, vm);
        RMat M0half = assemble(n, wm, vm, &fsqrt);
        RMat W = rmat_mul(n, rmat_mul(n, Sminushalf, M0half), Sminushalf);
        rmat_symmetrize(n, W);

        // W A_k W for every constraint, then the Schur matrix.
        std::vector<RMat> WAW;
        WAW.reserve(static_cast<size_t>(m));
        WAW.push_back(rmat_mul(n, W, W));
        for (auto [i, j] : pr.edges) {
            RMat t(static_cast<size_t>(n) * n, 0.0);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    t[static_cast<size_t>(r) * n + c] =
                        W[static_cast<size_t>(r) * n + i] * W[static_cast<size_t>(j) * n + c] +
                        W[static_cast<size_t>(r) * n + j] * W[static_cast<size_t>(i) * n + c];
            WAW.push_back(std::move(t));
        }
        RMat schur(static_cast<size_t>(m) * m, 0.0);
        for (int a = 0; a < m; ++a) {
            std::vector<double> col = pr.apply_A(WAW[static_cast<size_t>(a)]);
            for (int c = 0; c < m; ++c) schur[static_cast<size_t>(c) * m + a] = col[static_cast<size_t>(c)];
        }
        rmat_symmetrize(m, schur);

        double mu = rmat_dot(X, S) / n;
        double sigma_mu = 0.0;
        double ap = 0.0, ad = 0.0;
        RMat dX, dS;
        std::vector<double> dy;
        for (int pass = 0; pass < 2; ++pass) {
            double target = pass == 0 ? 0.0 : sigma_mu;
            RMat Rc = Sinv;
            for (size_t k = 0; k < Rc.size(); ++k) Rc[k] = target * Rc[k] - X[k];
            // Schur system: A(W A^T(dy) W) = A(Rc) - rp keeps the next
            // primal residual zero while S stays exactly A^T(y) - J.
            std::vector<double> arc = pr.apply_A(Rc);
            std::vector<double> rhs(static_cast<size_t>(m));
            for (int k = 0; k < m; ++k)
                rhs[static_cast<size_t>(k)] = arc[static_cast<size_t>(k)] - rp[static_cast<size_t>(k)];
            dy = spd_solve(m, schur, rhs);
            dS = pr.apply_At(dy);
            RMat WdSW = rmat_mul(n, rmat_mul(n, W, dS), W);
            dX = Rc;
            for (size_t k = 0; k < dX.size(); ++k) dX[k] -= WdSW[k];
            rmat_symmetrize(n, dX);
            ap = 0.98 * max_psd_step(n, X, dX);
            ad = 0.98 * max_psd_step(n, S, dS);
            if (pass == 0) {
                RMat Xa = X, Sa = S;
                for (size_t k = 0; k < Xa.size(); ++k) Xa[k] += ap * dX[k];
                for (size_t k = 0; k < Sa.size(); ++k) Sa[k] += ad * dS[k];
                double mu_aff = rmat_dot(Xa, Sa) / n;
                double ratio = mu > 1e-300 ? std::clamp(mu_aff / mu, 0.0, 1.0) : 0.0;
                sigma_mu = std::max(mu * ratio * ratio * ratio, 1e-18);
            }
        }
        for (size_t k = 0; k < X.size(); ++k) X[k] += ap * dX[k];
        for (int k = 0; k < m; ++k) y[static_cast<size_t>(k)] += ad * dy[static_cast<size_t>(k)];
    }

    if (!converged) {
        X = alternating_projection_refine(pr, X, 400);
        double primal = std::accumulate(X.begin(), X.end(), 0.0);
        if (std::abs(y[0] - primal) > tol) {
            std::ostringstream os;
            os << "theta solver stalled after " << maxit
               << " iterations; achieved duality gap " << std::abs(y[0] - primal);
            throw NumericsError(os.str());
        }
    }

    cert.iterations = used_iters;
    cert.theta = std::accumulate(X.begin(), X.end(), 0.0);
    cert.dual_value = y[0];
    cert.gap = cert.dual_value - cert.theta;
    cert.dual_y = y;
    cert.X = CMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cert.X(i, j) = X[static_cast<size_t>(i) * n + j];
    validate_theta_certificate(g, cert, tol);
    return cert;
}

void validate_theta_certificate(const Graph& g, const ThetaCertificate& cert, double tol) {
    const int n = g.n;
    if (cert.X.rows != n || cert.X.cols != n)
        throw DimensionError("certificate matrix order does not match graph order");
    if (static_cast<int>(cert.dual_y.size()) != 1 + static_cast<int>(cert.edge_order.size()))
        throw DimensionError("certificate multiplier count mismatch");

    double tr = 0.0;
    for (int i = 0; i < n; ++i) tr += cert.X(i, i).real();
    if (std::abs(tr - 1.0) > 1e-9) throw NumericsError("certificate trace deviates from 1");
    for (auto [i, j] : g.edges())
        if (std::abs(cert.X(i, j)) > 1e-8)
            throw NumericsError("certificate has support on an excluded edge entry");

    std::vector<double> xev = hermitian_spectrum(cert.X);
    if (xev.back() < -1e-8) throw NumericsError("certificate matrix is not psd");

    ThetaProblem pr{n, cert.edge_order};
    RMat S = pr.slack(cert.dual_y);
    std::vector<double> sv;
    RMat dummy;
    sym_eig(n, S, sv, dummy);
    if (sv.back() < -1e-8) throw NumericsError("certificate dual slack is not psd");

    double primal = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) primal += cert.X(i, j).real();
    if (std::abs(cert.dual_value - primal) > std::max(tol, 1e-9) * 10.0)
        throw NumericsError("certificate duality gap exceeds tolerance");
}

OrthogonalRepresentation orthogonal_representation(const Graph& g, const ThetaCertificate& cert) {
    const int n = g.n;
    if (cert.X.rows != n) throw DimensionError("certificate does not match graph");
    RMat A(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[static_cast<size_t>(i) * n + j] = cert.X(i, j).real();
    rmat_symmetrize(n, A);

    double maxd = 0.0;
    for (int i = 0; i < n; ++i) maxd = std::max(maxd, A[static_cast<size_t>(i) * n + i]);
    const double thr = tolerances().chol_rank * maxd;
    for (int i = 0; i < n; ++i)
        if (A[static_cast<size_t>(i) * n + i] <= thr)
            throw NumericsError("vertex " + std::to_string(i) +
                                " carries no weight in the certificate matrix");

    // Pivoted Cholesky: A ~ L L^T with rows permuted back to vertex order.
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    RMat L(static_cast<size_t>(n) * n, 0.0);
    RMat R = A;                     // working copy, logically indexed by perm
    int rank = n;
    double last_pivot = 0.0, first_skipped = 0.0;
    for (int k = 0; k < n; ++k) {
        int best = k;
        for (int i = k + 1; i < n; ++i)
            if (R[static_cast<size_t>(perm[static_cast<size_t>(i)]) * n + perm[static_cast<size_t>(i)]] >
                R[static_cast<size_t>(perm[static_cast<size_t>(best)]) * n + perm[static_cast<size_t>(best)]])
                best = i;
        std::swap(perm[static_cast<size_t>(k)], perm[static_cast<size_t>(best)]);
        int pk = perm[static_cast<size_t>(k)];
        double piv = R[static_cast<size_t>(pk) * n + pk];
        if (piv <= thr) {
            rank = k;
            first_skipped = std::max(piv, 0.0);
            break;
        }
        last_pivot = piv;
        double root = std::sqrt(piv);
        L[static_cast<size_t>(pk) * n + k] = root;
        for (int i = k + 1; i < n; ++i) {
            int pi = perm[static_cast<size_t>(i)];
            L[static_cast<size_t>(pi) * n + k] = R[static_cast<size_t>(pi) * n + pk] / root;
        }
        for (int i = k + 1; i < n; ++i) {
            int pi = perm[static_cast<size_t>(i)];
            for (int j = k + 1; j < n; ++j) {
                int pj = perm[static_cast<size_t>(j)];
                R[static_cast<size_t>(pi) * n + pj] -=
                    L[static_cast<size_t>(pi) * n + k] * L[static_cast<size_t>(pj) * n + k];
            }
        }
    }
    if (rank == 0) throw NumericsError("certificate matrix factored to rank zero");
    if (rank < n && last_pivot < 10.0 * first_skipped)
        throw NumericsError("rank extraction failed: no clear pivot gap at the threshold");

    // Row i of L = coordinates of vertex i's vector in R^rank.
    std::vector<std::vector<double>> w(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(rank)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < rank; ++k) w[static_cast<size_t>(i)][static_cast<size_t>(k)] = L[static_cast<size_t>(i) * n + k];

    std::vector<double> handle(static_cast<size_t>(rank), 0.0);
    std::vector<Ray> rays;
    for (int i = 0; i < n; ++i) {
        double norm = 0.0;
        for (double v : w[static_cast<size_t>(i)]) norm += v * v;
        norm = std::sqrt(norm);
        if (norm <= 0.0) throw NumericsError("zero vector extracted for vertex " + std::to_string(i));
        std::vector<cplx> entries;
        for (int k = 0; k < rank; ++k) {
            handle[static_cast<size_t>(k)] += w[static_cast<size_t>(i)][static_cast<size_t>(k)];
            entries.emplace_back(w[static_cast<size_t>(i)][static_cast<size_t>(k)] / norm, 0.0);
        }
        std::string label = g.labels.size() == static_cast<size_t>(n) ? g.labels[static_cast<size_t>(i)]
                                                                      : "phi" + std::to_string(i);
        rays.push_back(Ray::from_floats(label, entries));
    }
    double hnorm = 0.0;
    for (double v : handle) hnorm += v * v;
    hnorm = std::sqrt(hnorm);
    if (hnorm <= 0.0) throw NumericsError("handle vector vanished");
    std::vector<cplx> hent;
    for (double v : handle) hent.emplace_back(v / hnorm, 0.0);
    Ray psi = Ray::from_floats("psi", hent);

    OrthogonalRepresentation rep{RaySet::create("representation", std::move(rays)), psi, rank};

    for (auto [i, j] : g.edges()) {
        double ov = std::abs(inner_product(rep.rays.rays[static_cast<size_t>(i)],
                                           rep.rays.rays[static_cast<size_t>(j)]));
        if (ov > tolerances().rep_orthogonality)
            throw NumericsError("extracted vectors fail orthogonality across an edge");
    }
    double hsum = 0.0;
    for (int i = 0; i < n; ++i)
        hsum += std::norm(inner_product(rep.rays.rays[static_cast<size_t>(i)], rep.handle));
    if (hsum < cert.theta - tolerances().rep_handle)
        throw NumericsError("handle overlap sum falls short of the certificate value");
    return rep;
}

const ThetaCertificate& icosahedron_certificate() {
    static const ThetaCertificate cert = lovasz_theta(builtin_graph("icosahedron"), 1e-9);
    return cert;
}

const OrthogonalRepresentation& icosahedron_representation() {
    static const OrthogonalRepresentation rep = [] {
        Graph g = builtin_graph("icosahedron");
        return orthogonal_representation(g, icosahedron_certificate());
    }();
    return rep;
}

RaySet icosahedron_aux_rays() {
    const OrthogonalRepresentation& rep = icosahedron_representation();
    if (rep.dimension != 4)
        throw NumericsError("icosahedron representation did not come out 4-dimensional");
    static const int faces[4][3] = {{0, 6, 9}, {1, 4, 10}, {2, 5, 8}, {3, 7, 11}};
    std::vector<Ray> rays = rep.rays.rays;
    for (int f = 0; f < 4; ++f) {
        // The face triple is orthonormal, so I - sum of its projectors is a
        // rank-1 projector; its top eigenvector completes the basis.
        CMatrix comp = CMatrix::identity(4);
        for (int v : faces[f]) {
            const Ray& r = rep.rays.rays[static_cast<size_t>(v)];
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    comp(i, j) -= r.entry(i) * std::conj(r.entry(j));
        }
        EigenSystem es = hermitian_eigensystem(comp);
        std::vector<cplx> v(4);
        for (int i = 0; i < 4; ++i) v[static_cast<size_t>(i)] = es.vectors(i, 0);
        rays.push_back(Ray::from_floats("aux" + std::to_string(f), v));
    }
    return RaySet::create("icosahedron_aux", std::move(rays));
}

} // namespace ctxkit
