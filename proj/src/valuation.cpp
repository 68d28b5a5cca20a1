#include "ellip/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "ellip/errors.hpp"

namespace ellip {

namespace {

cplx div_checked(cplx num, cplx den, const char* where) {
  if (std::abs(den) < 1e-280) throw PoleError("vanishing denominator", den, where);
  return num / den;
}

}  // namespace

long long rfloor(const Rat& x) {
  long long n = x.numerator(), d = x.denominator();
  long long q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

Rat rfrac(const Rat& x) { return x - rfloor(x); }

double rat_double(const Rat& x) {
  return static_cast<double>(x.numerator()) /
         static_cast<double>(x.denominator());
}

Rat frac_g(const Rat& x) {
  const Rat f = rfrac(x);
  return f * (1 - f);
}

Rat theta_val(const Rat& alpha) {
  const Rat f = rfrac(alpha);
  return f * (f - 1) / 2 - alpha * (alpha - 1) / 2;
}

cplx theta_lc(cplx x, const Rat& alpha) {
  const cplx mono = ipow(-1.0 / x, rfloor(alpha));
  if (alpha.denominator() == 1) return (1.0 - x) * mono;
  return mono;
}

Rat c_val(const Partition& la, const Rat& alpha) {
  return weight(la) * theta_val(alpha);
}

cplx c_lc(CKind k, const Partition& la, cplx x, const Rat& alpha, cplx q,
          cplx t) {
  if (alpha < 0 || alpha >= 1)
    throw EvaluationError("c_lc wants 0 <= alpha < 1; reduce by p-shifts");
  if (alpha == Rat(0)) return c_tilde(k, la, x, q, t);
  return 1.0;
}

std::pair<Rat, cplx> delta_val_lc(const Partition& la, cplx a, const Rat& alpha,
                                  int n, cplx q, cplx t) {
  if (alpha < 0 || alpha >= 1)
    throw EvaluationError("delta_val_lc wants 0 <= alpha < 1; reduce first");
  const Rat val = -2 * alpha * weight(la);
  if (alpha == Rat(0)) return {val, delta_tilde(la, a, n, q, t)};
  const cplx lc =
      div_checked(c_tilde(CKind::C0, la, ipow(t, n), q, t),
                  c_tilde(CKind::Cm, la, {q, t}, q, t), "delta lc") *
      ipow(-1.0 / (a * a * q * q * ipow(t, n - 1)), weight(la)) *
      ipow(q, -3 * nstat_conj(la)) * ipow(t, 5 * nstat(la));
  return {val, lc};
}

Rat interp_scale(const Rat& alpha, const Rat& beta, const Rat& zeta) {
  return theta_val(alpha + zeta) + theta_val(alpha - zeta) -
         theta_val(1 - beta + zeta) - theta_val(1 - beta - zeta);
}

namespace {

struct OmegaArgs {
  Rat alpha, beta;
  std::array<Rat, 4> gamma;
};

OmegaArgs variant_args(OmegaVariant v, const Rat& alpha, const Rat& beta,
                       const std::array<Rat, 4>& g) {
  switch (v) {
    case OmegaVariant::plain:
      return {alpha, beta, g};
    case OmegaVariant::f12:
      return {alpha, beta - g[0] - g[1], {-g[0], -g[1], g[2], g[3]}};
    case OmegaVariant::f13:
      return {alpha, beta - g[0] - g[2], {-g[0], g[1], -g[2], g[3]}};
    case OmegaVariant::f1234:
      return {alpha, beta - g[0] - g[1] - g[2] - g[3],
              {-g[0], -g[1], -g[2], -g[3]}};
  }
  throw EvaluationError("bad omega variant");
}

Rat f_sum(const OmegaArgs& a) {
  const Rat sg = a.gamma[0] + a.gamma[1] + a.gamma[2] + a.gamma[3];
  Rat f = frac_g(a.alpha + a.beta - sg) + frac_g(2 * a.alpha) -
          frac_g(-a.alpha - a.beta) - frac_g(sg - 2 * a.beta);
  for (const Rat& gr : a.gamma) f += frac_g(gr - a.beta) - frac_g(a.alpha - gr);
  return f;
}

// Per-weight valuations of the la-only and ka-only factors of the summands.
Rat vla_coeff(const OmegaArgs& a) {
  Rat v = theta_val(1 + a.alpha + a.beta) - theta_val(1 + a.alpha - a.beta);
  for (const Rat& gr : a.gamma) v += theta_val(1 + a.alpha - gr);
  return v;
}

Rat vka_coeff(const OmegaArgs& a) {
  const Rat sg = a.gamma[0] + a.gamma[1] + a.gamma[2] + a.gamma[3];
  Rat v = theta_val(sg - a.alpha - a.beta - 1) -
          theta_val(1 + a.alpha - a.beta);
  for (const Rat& gr : a.gamma) v += theta_val(gr - a.beta);
  return v;
}

using Vec6 = std::array<Rat, 6>;

// Probes the coordinate directions plus the gamma-difference directions that
// enter the derivative identity between the four variants.  eps stays below
// every breakpoint of the piecewise-linear pieces, so a zero at the endpoint
// means a zero one-sided slope.
bool locally_zero(OmegaVariant v, const Vec6& pt, const Rat& eps) {
  static const std::vector<std::array<int, 6>> dirs = {
      {1, 0, 0, 0, 0, 0},  {0, 1, 0, 0, 0, 0},  {0, 0, 1, 0, 0, 0},
      {0, 0, 0, 1, 0, 0},  {0, 0, 0, 0, 1, 0},  {0, 0, 0, 0, 0, 1},
      {0, 0, 1, -1, 0, 0}, {0, 0, 1, 0, -1, 0}, {0, 0, 0, 1, 0, -1},
  };
  for (const auto& d : dirs) {
    for (int s : {1, -1}) {
      Vec6 q = pt;
      for (int i = 0; i < 6; ++i) q[i] += s * d[i] * eps;
      if (f_sum(variant_args(v, q[0], q[1], {q[2], q[3], q[4], q[5]})) != Rat(0))
        return false;
    }
  }
  return true;
}

}  // namespace

Rat omega_f(OmegaVariant variant, const Rat& alpha, const Rat& beta,
            const std::array<Rat, 4>& gamma) {
  return f_sum(variant_args(variant, alpha, beta, gamma));
}

OmegaVal omega_val(const Rat& alpha, const Rat& beta,
                   const std::array<Rat, 4>& gamma) {
  static const std::array<OmegaVariant, 4> order = {
      OmegaVariant::plain, OmegaVariant::f12, OmegaVariant::f13,
      OmegaVariant::f1234};
  for (OmegaVariant v : order) {
    const OmegaArgs a = variant_args(v, alpha, beta, gamma);
    const Rat f = f_sum(a);
    if (f > 0) return {vla_coeff(a) - f / 2, -vka_coeff(a)};
    if (f < 0) return {vla_coeff(a), -f / 2 - vka_coeff(a)};
  }
  long long den = 1;
  const Vec6 pt = {alpha, beta, gamma[0], gamma[1], gamma[2], gamma[3]};
  for (const Rat& c : pt) den = std::lcm(den, c.denominator());
  const Rat eps(1, 32 * den);
  for (OmegaVariant v : order) {
    if (!locally_zero(v, pt, eps)) {
      const OmegaArgs a = variant_args(v, alpha, beta, gamma);
      return {vla_coeff(a), -vka_coeff(a)};
    }
  }
  throw UndeterminedError("all summand-size variants vanish near the point");
}

std::string family_name(CellFamily f) {
  switch (f) {
    case CellFamily::V: return "V";
    case CellFamily::E1: return "E1";
    case CellFamily::E2: return "E2";
    case CellFamily::E3: return "E3";
    case CellFamily::E4: return "E4";
    case CellFamily::F1: return "F1";
    case CellFamily::F2: return "F2";
    case CellFamily::F3: return "F3";
    case CellFamily::F4: return "F4";
    case CellFamily::T: return "T";
    case CellFamily::S: return "S";
    case CellFamily::P1: return "P1";
    case CellFamily::P2: return "P2";
  }
  return "?";
}

namespace {

// Cube coordinates (x, y, w) = fractional parts of (alpha+zeta, alpha-zeta,
// beta+zeta); this basis maps the shift lattice onto Z^3, so reduction is
// componentwise.
struct Reduced {
  Rat x, y, w;
  std::array<long long, 3> m;
};

Reduced reduce_to_cube(const Rat& alpha, const Rat& beta, const Rat& zeta) {
  const Rat s2 = alpha + zeta, s3 = alpha - zeta, s4 = beta + zeta;
  const long long m2 = rfloor(s2), m3 = rfloor(s3), m4 = rfloor(s4);
  return {s2 - m2, s3 - m3, s4 - m4, {m2, m3, m4}};
}

// Names the open cell containing a reduced point, testing equalities before
// sign conditions so boundary points land in the lower-dimensional cell.
// Cells whose defining plane is beta - zeta in Z (and a few edge pieces) only
// match after the zeta-reflection, in which case this returns false.
bool cube_family(const Reduced& r, CellFamily& fam) {
  const Rat &x = r.x, &y = r.y, &w = r.w;
  const bool x0 = x == Rat(0), y0 = y == Rat(0), w0 = w == Rat(0);
  const Rat s5 = w - x + y;
  if (x0 && y0 && w0) { fam = CellFamily::V; return true; }
  if (y0 && x == w) { fam = CellFamily::E1; return true; }
  if (y0 && w0) { fam = CellFamily::E2; return true; }
  if (x0 && y0) { fam = CellFamily::E3; return true; }
  if (w0 && x == y) { fam = CellFamily::E4; return true; }
  if (y0 && w > 0 && w < x) { fam = CellFamily::F1; return true; }
  if (x0 && y > 0 && w > 0 && y + w < 1) { fam = CellFamily::F2; return true; }
  if (w0 && y > 0 && y < x) { fam = CellFamily::F3; return true; }
  if (w0 && x > 0 && x < y) { fam = CellFamily::F4; return true; }
  if (x == w && x > 0 && y > 0) { fam = CellFamily::S; return true; }
  if (x > 0 && y > 0 && w > 0) {
    if (x > w && s5 < 0) { fam = CellFamily::T; return true; }
    if (x < w && s5 > 0 && s5 < 1) { fam = CellFamily::P1; return true; }
    if (x > w && s5 > 0 && s5 < 1) { fam = CellFamily::P2; return true; }
  }
  return false;
}

}  // namespace

CellId classify_cell(const Rat& alpha, const Rat& beta, const Rat& zeta) {
  for (int refl = 0; refl < 2; ++refl) {
    const Reduced r = reduce_to_cube(alpha, beta, refl ? -zeta : zeta);
    CellFamily fam;
    if (cube_family(r, fam)) {
      const long long a = r.m[1];
      const long long c = r.m[0] - r.m[1];
      const long long b = r.m[2] - r.m[0] + r.m[1];
      return {fam, {a, b, c}, refl != 0};
    }
  }
  throw EvaluationError("exponent vector escapes the cell tables");
}

BiorthoH biortho_h(const ExponentVector& ev, const Rat& nu_exp, int) {
  const Rat sigma = -(1 + ev.gamma[0] + ev.gamma[1]) / 2;
  const Rat a_om = sigma;
  const Rat b_om = ev.gamma[0] + sigma - ev.alpha[0];
  const std::array<Rat, 4> g_om = {
      1 + sigma - ev.alpha[0] - ev.alpha[1],
      1 + sigma - ev.alpha[0] - ev.alpha[2],
      1 + sigma - ev.alpha[0] - ev.alpha[3],
      ev.gamma[0] + nu_exp + sigma,
  };
  const OmegaVal ov = omega_val(a_om, b_om, g_om);
  Rat h2 = ov.f2;
  for (int r = 0; r < 4; ++r)
    h2 += theta_val(1 - ev.gamma[0] - ev.alpha[r]);
  h2 += interp_scale(nu_exp, ev.gamma[0], ev.zeta);
  if (h2 == Rat(0)) {
    const CellId cell = classify_cell(nu_exp, ev.gamma[0], ev.zeta);
    if (cell.family == CellFamily::S || cell.family == CellFamily::P1 ||
        cell.family == CellFamily::P2)
      throw UndeterminedError(
          "summand valuations tie with a z-independent expansion basis");
  }
  return {ov.f1, h2};
}

Rat biortho_val(const ExponentVector& ev, const Rat& nu_exp, int n) {
  const BiorthoH h = biortho_h(ev, nu_exp, n);
  const Rat pref = theta_val(1 + ev.alpha[0] - ev.gamma[0]) -
                   theta_val(1 - nu_exp - ev.gamma[0]) -
                   theta_val(ev.alpha[0] + ev.alpha[1]) -
                   theta_val(ev.alpha[0] + ev.alpha[2]) -
                   theta_val(ev.alpha[0] + ev.alpha[3]) -
                   theta_val(-ev.alpha[0] - ev.gamma[1]);
  return pref + h.h1 + std::min(h.h2, Rat(0));
}

ProbeResult probe_valuation(const std::function<cplx(double)>& f,
                            long long expected_den) {
  if (expected_den <= 0)
    throw EvaluationError("probe denominator must be positive");
  constexpr int kSteps = 7;
  double X[kSteps], Y[kSteps];
  cplx deepest = 0.0;
  double p_deep = 0.0;
  for (int k = 0; k < kSteps; ++k) {
    const double p = std::ldexp(1e-2, -k);
    cplx v;
    try {
      v = f(p);
    } catch (const std::exception& e) {
      throw EvaluationError(std::string("probe sample failed: ") + e.what());
    }
    const double m = std::abs(v);
    if (!std::isfinite(m) || m == 0.0)
      throw EvaluationError("probe sample vanishes or overflows");
    X[k] = std::log(p);
    Y[k] = std::log(m);
    deepest = v;
    p_deep = p;
  }
  double mx = 0, my = 0;
  for (int k = 0; k < kSteps; ++k) {
    mx += X[k];
    my += Y[k];
  }
  mx /= kSteps;
  my /= kSteps;
  double sxx = 0, sxy = 0;
  for (int k = 0; k < kSteps; ++k) {
    sxx += (X[k] - mx) * (X[k] - mx);
    sxy += (X[k] - mx) * (Y[k] - my);
  }
  const double slope = sxy / sxx;
  const Rat val(std::llround(slope * static_cast<double>(expected_den)),
                expected_den);
  const double vd = rat_double(val);
  double resid = 0;
  for (int k = 0; k + 1 < kSteps; ++k) {
    const double s = (Y[k + 1] - Y[k]) / (X[k + 1] - X[k]);
    resid = std::max(resid, std::abs(s - vd));
  }
  return {val, deepest * std::pow(p_deep, -vd), resid};
}

}  // namespace ellip
