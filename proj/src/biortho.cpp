#include "ellip/biortho.hpp"

#include <cmath>

#include "ellip/errors.hpp"
#include "ellip/kernels.hpp"

namespace ellip {

namespace {

cplx div_checked(cplx num, cplx den, const char* where) {
  if (std::abs(den) < 1e-280) throw PoleError("vanishing denominator", den, where);
  return num / den;
}

}  // namespace

BioParams solve_balanced(const std::array<cplx, 4>& t, cplx u0, int n,
                         const EllParams& P) {
  BioParams B;
  B.t = t;
  B.u0 = u0;
  B.n = n;
  B.u1 = P.p * P.q /
         (ipow(P.t, 2 * (n - 1)) * t[0] * t[1] * t[2] * t[3] * u0);
  return B;
}

BioParams solve_discrete(cplx t0, cplx t2, cplx t3, cplx u0, int m, int n,
                         const EllParams& P) {
  cplx t1 = ipow(P.q, -m) * ipow(P.t, 1 - n) / t0;
  return solve_balanced({t0, t1, t2, t3}, u0, n, P);
}

cplx balance_residual(const BioParams& B, const EllParams& P) {
  cplx prod = ipow(P.t, 2 * (B.n - 1)) * B.t[0] * B.t[1] * B.t[2] * B.t[3] *
              B.u0 * B.u1;
  return prod / (P.p * P.q) - 1.0;
}

void require_balanced(const BioParams& B, const EllParams& P, double tol) {
  if (std::abs(balance_residual(B, P)) > tol)
    throw BalancingError("parameters violate t^{2(n-1)} t0..t3 u0 u1 = pq");
}

cplx biortho_R(const Partition& la, const std::vector<cplx>& z,
               const BioParams& B, const EllParams& P) {
  require_balanced(B, P);
  const cplx tn1 = ipow(P.t, B.n - 1);
  const cplx t0 = B.t[0];
  const std::vector<cplx> bs = {tn1 * t0 * B.t[1], tn1 * t0 * B.t[2],
                                tn1 * t0 * B.t[3], tn1 * t0 * B.u1};
  cplx sum = 0.0;
  for (const Partition& mu : partitions_between({}, la)) {
    cplx term = gen_binom(la, mu, 1.0 / (B.u0 * B.u1), 1.0 / (tn1 * t0 * B.u1),
                          P, B.n);
    if (term == 0.0) continue;
    term *= interp_R(mu, z, t0, B.u0, P);
    if (term == 0.0) continue;
    sum += div_checked(term, delta0(mu, tn1 * t0 / B.u0, bs, P),
                       "biorthogonal expansion");
  }
  return sum;
}

cplx biortho_R_omega(const Partition& la, const std::vector<cplx>& z, cplx v,
                     const BioParams& B, const EllParams& P) {
  require_balanced(B, P);
  const cplx p = P.p, q = P.q;
  const cplx tn1 = ipow(P.t, B.n - 1);
  const cplx t0 = B.t[0];
  const cplx s = 1.0 / std::sqrt(p * q * B.u0 * B.u1);
  const std::array<cplx, 4> w = {p * q * s / (t0 * B.t[1] * tn1),
                                 p * q * s / (t0 * B.t[2] * tn1),
                                 p * q * s / (t0 * B.t[3] * tn1),
                                 B.u0 * v * s};
  cplx sum = 0.0;
  for (const Partition& nu : partitions_between({}, la)) {
    cplx term = omega(la, nu, s, B.u0 * s / (tn1 * t0), w, P);
    if (term == 0.0) continue;
    term *= c_sym(CKind::C0, nu,
                  {p * q / (B.u0 * B.t[0]), p * q / (B.u0 * B.t[1]),
                   p * q / (B.u0 * B.t[2]), p * q / (B.u0 * B.t[3])},
                  P);
    term *= interp_R(nu, z, v, B.u0, P);
    sum += term;
  }
  cplx pref = c_sym(CKind::C0, la, p * q * tn1 * t0 / B.u0, P);
  pref = div_checked(
      pref,
      c_sym(CKind::C0, la,
            {p * q / (v * B.u0), tn1 * t0 * B.t[1], tn1 * t0 * B.t[2],
             tn1 * t0 * B.t[3], 1.0 / (tn1 * t0 * B.u1)},
            P),
      "omega expansion prefactor");
  return pref * sum;
}

std::vector<cplx> principal_point(const Partition& mu, cplx t0, int n,
                                  const EllParams& P) {
  std::vector<cplx> z(n);
  for (int i = 1; i <= n; ++i)
    z[i - 1] = t0 * ipow(P.q, part(mu, i)) * ipow(P.t, n - i);
  return z;
}

cplx discrete_inner(const ZFunc& f, const ZFunc& g, int m, const BioParams& B,
                    const EllParams& P) {
  require_balanced(B, P);
  const int n = B.n;
  const cplx p = P.p, q = P.q;
  const cplx tn1 = ipow(P.t, n - 1);
  const cplx t0 = B.t[0];
  const Partition box(n, m);
  const cplx den = delta0(
      box, tn1 * B.t[1] / B.u0,
      {B.t[1] / t0, p * q / (B.u0 * B.t[2]), p * q / (B.u0 * B.t[3]),
       p * q / (B.u0 * B.u1)},
      P);
  const cplx a2 = tn1 * tn1 * t0 * t0;
  const std::vector<cplx> bs = {ipow(P.t, n),     tn1 * t0 * B.t[1],
                                tn1 * t0 * B.t[2], tn1 * t0 * B.t[3],
                                tn1 * t0 * B.u0,   tn1 * t0 * B.u1};
  cplx sum = 0.0;
  for (const Partition& mu : partitions_in_box(m, n)) {
    const std::vector<cplx> zp = principal_point(mu, t0, n, P);
    sum += f(zp) * g(zp) * delta(mu, a2, bs, P);
  }
  return div_checked(sum, den, "discrete inner product");
}

cplx biortho_norm(const Partition& la, const BioParams& B, const EllParams& P) {
  const cplx tn1 = ipow(P.t, B.n - 1);
  const cplx t0 = B.t[0];
  cplx d = delta(la, 1.0 / (B.u0 * B.u1),
                 {ipow(P.t, B.n), tn1 * t0 * B.t[1], tn1 * t0 * B.t[2],
                  tn1 * t0 * B.t[3], 1.0 / (tn1 * t0 * B.u0),
                  1.0 / (tn1 * t0 * B.u1)},
                 P);
  return div_checked(1.0, d, "biorthogonality norm");
}

BioParams dual_params(const BioParams& B, const EllParams& P) {
  const cplx t0 = B.t[0];
  const cplx h0 = std::sqrt(B.t[0] * B.t[1] * B.t[2] * B.t[3] / (P.p * P.q));
  BioParams D;
  D.n = B.n;
  D.t[0] = h0;
  for (int r = 1; r < 4; ++r) D.t[r] = t0 * B.t[r] / h0;
  D.u0 = B.u0 * h0 / t0;
  D.u1 = B.u1 * h0 / t0;
  return D;
}

namespace {

// Common skeleton: sum over sign vectors sigma of per-variable weights,
// cross terms theta(t zi zj)/theta(zi zj), and f at q^{sigma_i/2} z_i.
cplx signed_shift_sum(const std::vector<cplx>& z, const EllParams& P,
                      const std::function<cplx(cplx)>& weight, const ZFunc& f) {
  const int n = static_cast<int>(z.size());
  const cplx sq = std::sqrt(P.q);
  cplx total = 0.0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<cplx> y(n), zs(n);
    for (int i = 0; i < n; ++i) {
      const bool minus = (mask >> i) & 1;
      y[i] = minus ? 1.0 / z[i] : z[i];
      zs[i] = minus ? z[i] / sq : z[i] * sq;
    }
    cplx term = 1.0;
    for (int i = 0; i < n; ++i) term *= weight(y[i]);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        term *= div_checked(theta(P.t * y[i] * y[j], P.p),
                            theta(y[i] * y[j], P.p), "shift sum cross term");
    total += term * f(zs);
  }
  return total;
}

}  // namespace

cplx dq4_apply(const std::array<cplx, 4>& v, const ZFunc& f,
               const std::vector<cplx>& z, const EllParams& P) {
  auto weight = [&](cplx y) {
    cplx num = 1.0;
    for (cplx vr : v) num *= theta(vr * y, P.p);
    return div_checked(num, theta(y * y, P.p), "shift sum weight");
  };
  return signed_shift_sum(z, P, weight, f);
}

cplx dq3_apply(const std::array<cplx, 3>& v, const ZFunc& f,
               const std::vector<cplx>& z, const EllParams& P) {
  const int n = static_cast<int>(z.size());
  const cplx v3 = P.p / (ipow(P.t, n - 1) * v[0] * v[1] * v[2]);
  cplx den = 1.0;
  for (int i = 1; i <= n; ++i) {
    const cplx tni = ipow(P.t, n - i);
    den *= theta(tni * v[0] * v[1], P.p) * theta(tni * v[0] * v[2], P.p) *
           theta(tni * v[1] * v[2], P.p);
  }
  return div_checked(dq4_apply({v[0], v[1], v[2], v3}, f, z, P), den,
                     "difference operator normalization");
}

cplx dminus_apply(cplx u0, const ZFunc& f, const std::vector<cplx>& z,
                  const EllParams& P) {
  const int n = static_cast<int>(z.size());
  return dq4_apply(
      {u0, P.q * u0, P.p / u0, 1.0 / (ipow(P.t, n - 1) * u0 * P.q)}, f, z, P);
}

cplx dplus_apply(cplx v0, cplx v1, const std::array<cplx, 3>& v234,
                 const ZFunc& f, const std::vector<cplx>& z,
                 const EllParams& P) {
  const int n = static_cast<int>(z.size());
  const cplx p = P.p, q = P.q;
  const cplx v5 = p * p * q /
                  (ipow(P.t, n - 1) * v0 * v1 * v234[0] * v234[1] * v234[2]);
  const std::array<cplx, 5> vs = {v1, v234[0], v234[1], v234[2], v5};
  cplx pref = 1.0;
  for (int i = 1; i <= n; ++i) {
    const cplx tni = ipow(P.t, n - i);
    cplx den = 1.0;
    for (int r = 1; r < 5; ++r) den *= theta(vs[r] * tni * v1, P.p);
    pref *= div_checked(theta(p * q * tni * v1 / v0, P.p), den,
                        "raising operator prefactor");
  }
  auto weight = [&](cplx y) {
    cplx num = 1.0;
    for (cplx vr : vs) num *= theta(vr * y, P.p);
    return div_checked(num, theta(p * q * y / v0, P.p) * theta(y * y, P.p),
                       "raising operator weight");
  };
  return pref * signed_shift_sum(z, P, weight, f);
}

cplx dminus_eigen(const Partition& mu, int n, cplx t0, cplx u0,
                  const EllParams& P) {
  const cplx q = P.q, t = P.t, p = P.p;
  const cplx sq = std::sqrt(q);
  const std::array<cplx, 4> v = {u0, q * u0, p / u0,
                                 1.0 / (ipow(t, n - 1) * u0 * q)};
  std::vector<cplx> z(n);
  for (int i = 1; i <= n; ++i)
    z[i - 1] = t0 * ipow(q, part(mu, i)) * ipow(t, n - i);
  cplx w = 1.0;
  for (int i = 0; i < n; ++i) {
    for (cplx vr : v) w *= theta(vr * z[i], p);
    w = div_checked(w, theta(z[i] * z[i], p), "lowering eigenvalue weight");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      w *= div_checked(theta(t * z[i] * z[j], p), theta(z[i] * z[j], p),
                       "lowering eigenvalue cross term");
  return w * interp_norm(mu, t0, u0, n, P) /
         interp_norm(add_rows(1, n, mu), t0 / sq, u0 * sq * sq * sq, n, P);
}

namespace {

// Coefficient of the top interpolation function R*_la(.; t0, u0) in the
// defining expansion of R_la.
cplx biortho_top_coeff(const Partition& la, const BioParams& B,
                       const EllParams& P) {
  const cplx tn1 = ipow(P.t, B.n - 1);
  cplx num = gen_binom(la, la, 1.0 / (B.u0 * B.u1),
                       1.0 / (tn1 * B.t[0] * B.u1), P, B.n);
  cplx den = delta0(la, tn1 * B.t[0] / B.u0,
                    {tn1 * B.t[0] * B.t[1], tn1 * B.t[0] * B.t[2],
                     tn1 * B.t[0] * B.t[3], tn1 * B.t[0] * B.u1},
                    P);
  return div_checked(num, den, "biorthogonal top coefficient");
}

}  // namespace

cplx dminus_prefactor(const Partition& la, const BioParams& B,
                      const EllParams& P) {
  const cplx sq = std::sqrt(P.q);
  BioParams Bi = B;
  for (auto& tr : Bi.t) tr /= sq;
  Bi.u0 = B.u0 * sq * sq * sq;
  Bi.u1 = B.u1 * sq;
  const Partition lap = add_rows(1, B.n, la);
  return biortho_top_coeff(lap, Bi, P) *
         dminus_eigen(la, B.n, B.t[0], B.u0, P) / biortho_top_coeff(la, B, P);
}

}  // namespace ellip
