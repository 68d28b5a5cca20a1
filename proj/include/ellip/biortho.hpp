#pragma once

#include <array>
#include <functional>

#include "ellip/interpolation.hpp"

namespace ellip {

// Parameter set for the biorthogonal family, subject to
// t^{2(n-1)} t0 t1 t2 t3 u0 u1 = pq.
struct BioParams {
  std::array<cplx, 4> t;  // t0, t1, t2, t3
  cplx u0 = 1.0, u1 = 1.0;
  int n = 1;
};

// Fill u1 from the balancing condition.
BioParams solve_balanced(const std::array<cplx, 4>& t, cplx u0, int n,
                         const EllParams& P);
// Choose t1 with t^{n-1} t0 t1 = q^{-m} (discrete measure) and solve u1.
BioParams solve_discrete(cplx t0, cplx t2, cplx t3, cplx u0, int m, int n,
                         const EllParams& P);
cplx balance_residual(const BioParams& B, const EllParams& P);
void require_balanced(const BioParams& B, const EllParams& P,
                      double tol = 1e-8);

// R~_la(z; t0 : t1, t2, t3; u0, u1) as the binomial-coefficient expansion over
// mu subset la in the interpolation functions with base (t0, u0).
cplx biortho_R(const Partition& la, const std::vector<cplx>& z,
               const BioParams& B, const EllParams& P);

// Same function expanded in the basis with free base point (v, u0), via the
// connection coefficients.
cplx biortho_R_omega(const Partition& la, const std::vector<cplx>& z, cplx v,
                     const BioParams& B, const EllParams& P);

// z_i = t0 q^{mu_i} t^{n-i}.
std::vector<cplx> principal_point(const Partition& mu, cplx t0, int n,
                                  const EllParams& P);

using ZFunc = std::function<cplx(const std::vector<cplx>&)>;

// Discrete inner product: sum over mu inside m^n of f g against the residue
// weights.  Requires the parameters from solve_discrete.
cplx discrete_inner(const ZFunc& f, const ZFunc& g, int m, const BioParams& B,
                    const EllParams& P);

// 1 / Delta_la(1/(u0u1) | t^n, t^{n-1}t0t1, ..., 1/(t^{n-1}t0u1)), the squared
// norm in the biorthogonality relation.
cplx biortho_norm(const Partition& la, const BioParams& B, const EllParams& P);

// Hatted parameter set of the evaluation duality: hat t0 = sqrt(t0t1t2t3/pq),
// hat t0 hat t_r = t0 t_r, hat t0 / hat u_r = t0 / u_r.
BioParams dual_params(const BioParams& B, const EllParams& P);

// Signed-shift difference operators; n = z.size() throughout and the function
// argument receives q^{sigma_i/2} z_i.
cplx dq4_apply(const std::array<cplx, 4>& v, const ZFunc& f,
               const std::vector<cplx>& z, const EllParams& P);
// Rescaled version: fourth parameter p/(t^{n-1} v0 v1 v2), divided by the
// pairwise theta products.
cplx dq3_apply(const std::array<cplx, 3>& v, const ZFunc& f,
               const std::vector<cplx>& z, const EllParams& P);
// Lowering operator D^-(u0) = D_q(u0, q u0, p/u0, 1/(t^{n-1} u0 q)).
cplx dminus_apply(cplx u0, const ZFunc& f, const std::vector<cplx>& z,
                  const EllParams& P);
// Raising operator D^+(v0 : v1 : v2, v3, v4) with v5 fixed by
// t^{n-1} v0 v1 v2 v3 v4 v5 = p^2 q.
cplx dplus_apply(cplx v0, cplx v1, const std::array<cplx, 3>& v234,
                 const ZFunc& f, const std::vector<cplx>& z,
                 const EllParams& P);

// D^-(u0) annihilates R*_mu(.; q^{-1/2} t0, q^{3/2} u0) when mu lacks a full
// first column and otherwise lowers it diagonally,
//   D^-(u0) R*_{mu+1^n}(.; q^{-1/2} t0, q^{3/2} u0) =
//       dminus_eigen(mu) R*_mu(.; t0, u0).
// Closed form: only the all-plus shift survives at the principal point of mu,
// so the eigenvalue is that term's weight times the ratio of principal values.
cplx dminus_eigen(const Partition& mu, int n, cplx t0, cplx u0,
                  const EllParams& P);

// Constant relating D^-(u0) applied to the column-augmented biorthogonal
// function at contiguously shifted parameters (t_r / q^{1/2}, q^{3/2} u0,
// q^{1/2} u1) back to R_la at the base parameters.  Obtained by comparing top
// coefficients of the interpolation expansions on both sides.
cplx dminus_prefactor(const Partition& la, const BioParams& B,
                      const EllParams& P);

}  // namespace ellip
