#include "ellip/limits.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "ellip/csymbols.hpp"
#include "ellip/errors.hpp"
#include "ellip/kernels.hpp"

namespace ellip {

namespace {

cplx div_checked(cplx num, cplx den, const char* where) {
  if (std::abs(den) < 1e-280)
    throw PoleError("vanishing denominator", den, where);
  return num / den;
}

// Ct0_la(x) / Ct0_ka(x) for ka inside la.
cplx ct0_skew(const Partition& la, const Partition& ka, cplx x, cplx q,
              cplx t) {
  cplx r = 1.0;
  for (int i = 1; i <= length(la); ++i)
    for (int j = part(ka, i) + 1; j <= part(la, i); ++j)
      r *= 1.0 - ipow(q, j - 1) * ipow(t, 1 - i) * x;
  return r;
}

// Ct0_ka(x/t) / Ct0_la(x) for ka a horizontal strip of la.  Pushing ka down
// one row cancels all shared boxes against la, leaving only the first row of
// la in the denominator.
cplx ct0_shift_ratio(const Partition& la, const Partition& ka, cplx x, cplx q,
                     cplx t) {
  cplx num = 1.0;
  for (int i = 2; i <= length(ka) + 1; ++i)
    for (int j = part(la, i) + 1; j <= part(ka, i - 1); ++j)
      num *= 1.0 - ipow(q, j - 1) * ipow(t, 1 - i) * x;
  cplx den = 1.0;
  for (int j = 1; j <= part(la, 1); ++j) den *= 1.0 - ipow(q, j - 1) * x;
  return div_checked(num, den, "limit branching coefficient");
}

}  // namespace

cplx binon_a(const Partition& la, const Partition& mu, cplx a, cplx q,
             cplx t) {
  if (!horizontal_strip(la, mu)) return 0.0;
  const Partition lap = conjugate(la), mup = conjugate(mu);
  cplx num = 1.0, den = 1.0;
  for (int i = 1; i <= length(la); ++i)
    for (int j = 1; j <= part(la, i); ++j) {
      const int li = part(la, i), mi = part(mu, i);
      const int lpj = part(lap, j), mpj = part(mup, j);
      if (lpj == mpj) {
        num *= (1.0 - ipow(q, li - j + 1) * ipow(t, lpj - i)) *
               (1.0 - ipow(q, mi - j) * ipow(t, 1 + mpj - i));
        den *= (1.0 - ipow(q, mi - j + 1) * ipow(t, mpj - i)) *
               (1.0 - ipow(q, li - j) * ipow(t, 1 + lpj - i));
      } else {
        den *= (1.0 - ipow(q, mi + j) * ipow(t, -mpj - i) * a) *
               (1.0 - ipow(q, li + j - 1) * ipow(t, 2 - lpj - i) * a);
      }
    }
  for (int i = 1; i <= length(mu); ++i)
    for (int j = 1; j <= part(mu, i); ++j) {
      const int li = part(la, i), mi = part(mu, i);
      const int lpj = part(lap, j), mpj = part(mup, j);
      if (lpj != mpj)
        num *= (1.0 - ipow(q, li + j) * ipow(t, 1 - lpj - i) * a) *
               (1.0 - ipow(q, mi + j - 1) * ipow(t, 1 - mpj - i) * a);
    }
  return div_checked(num, den, "branching binomial");
}

cplx psi_coeff(const Partition& la, const Partition& mu, cplx q, cplx t) {
  return binon_a(la, mu, 0.0, q, t);
}

cplx branch_coeff_limit(CellFamily f, const Partition& la, const Partition& ka,
                        cplx a, cplx b, cplx v, int n, cplx q, cplx t) {
  if (!horizontal_strip(la, ka)) return 0.0;
  const cplx tn = ipow(t, n);
  const long w = weight(la) - weight(ka);
  const long dnp = nstat_conj(la) - nstat_conj(ka);
  const long dn = nstat(la) - nstat(ka);
  switch (f) {
    case CellFamily::V:
      return binon_a(la, ka, tn * a / b, q, t) *
             ct0_skew(la, ka, tn * a * v, q, t) *
             ct0_skew(la, ka, tn * a / v, q, t) *
             ct0_shift_ratio(la, ka, q * v / b, q, t) *
             ct0_shift_ratio(la, ka, q / (b * v), q, t) * ipow(t, weight(ka));
    case CellFamily::E1:
      return binon_a(la, ka, tn * a / b, q, t) *
             ct0_skew(la, ka, tn * a / v, q, t) *
             ct0_shift_ratio(la, ka, q * v / b, q, t) * ipow(v / b, w);
    case CellFamily::E2:
      return psi_coeff(la, ka, q, t) * ct0_skew(la, ka, tn * a / v, q, t) *
             ct0_shift_ratio(la, ka, q / (b * v), q, t) * ipow(t, weight(ka));
    case CellFamily::E3:
      return psi_coeff(la, ka, q, t) * ct0_skew(la, ka, tn * a * v, q, t) *
             ct0_skew(la, ka, tn * a / v, q, t) * ipow(-tn * a, -w) *
             ipow(q, -dnp) * ipow(t, dn);
    case CellFamily::E4:
      return psi_coeff(la, ka, q, t) *
             ct0_shift_ratio(la, ka, q * v / b, q, t) *
             ct0_shift_ratio(la, ka, q / (b * v), q, t) * ipow(t, weight(ka));
    case CellFamily::F1:
      return psi_coeff(la, ka, q, t) * ct0_skew(la, ka, tn * a / v, q, t) *
             ipow(v, w);
    case CellFamily::F2:
      return psi_coeff(la, ka, q, t) * ct0_skew(la, ka, tn * a * v, q, t) *
             ipow(-tn * a, -w) * ipow(q, -dnp) * ipow(t, dn);
    case CellFamily::F3:
      return psi_coeff(la, ka, q, t) *
             ct0_shift_ratio(la, ka, q / (b * v), q, t) * ipow(t, weight(ka));
    case CellFamily::F4:
      return psi_coeff(la, ka, q, t) *
             ct0_shift_ratio(la, ka, q / (b * v), q, t) * ipow(v, -w);
    case CellFamily::T:
      return psi_coeff(la, ka, q, t) * ipow(v, w);
    case CellFamily::S:
      return binon_a(la, ka, tn * a / b, q, t) * ipow(t, -weight(ka));
    case CellFamily::P1:
      return psi_coeff(la, ka, q, t) * ipow(t, weight(ka));
    case CellFamily::P2:
      return psi_coeff(la, ka, q, t) * ipow(t, -weight(ka));
  }
  throw EvaluationError("unknown limit family");
}

cplx interp_limit(CellFamily f, const Partition& la, const std::vector<cplx>& z,
                  cplx a, cplx b, cplx q, cplx t) {
  const int n = static_cast<int>(z.size());
  if (length(la) > n) return 0.0;
  std::map<std::pair<int, Partition>, cplx> memo;
  std::function<cplx(int, const Partition&)> rec =
      [&](int level, const Partition& ka) -> cplx {
    if (level == 0) return ka.empty() ? 1.0 : 0.0;
    if (length(ka) > level) return 0.0;
    const auto key = std::make_pair(level, ka);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    cplx sum = 0.0;
    for (const Partition& nu : horizontal_strips(ka)) {
      if (length(nu) > level - 1) continue;
      const cplx c =
          branch_coeff_limit(f, ka, nu, a, b, z[level - 1], level - 1, q, t);
      if (c != 0.0) sum += c * rec(level - 1, nu);
    }
    memo.emplace(key, sum);
    return sum;
  };
  return rec(n, la);
}

std::array<Rat, 3> limit_rep(CellFamily f) {
  switch (f) {
    case CellFamily::V: return {Rat(0), Rat(0), Rat(0)};
    case CellFamily::E1: return {Rat(1, 4), Rat(1, 4), Rat(1, 4)};
    case CellFamily::E2: return {Rat(1, 4), Rat(-1, 4), Rat(1, 4)};
    case CellFamily::E3: return {Rat(0), Rat(1, 2), Rat(0)};
    case CellFamily::E4: return {Rat(1, 2), Rat(0), Rat(0)};
    case CellFamily::F1: return {Rat(3, 8), Rat(-1, 8), Rat(3, 8)};
    case CellFamily::F2: return {Rat(1, 8), Rat(3, 8), Rat(-1, 8)};
    case CellFamily::F3: return {Rat(1, 2), Rat(-1, 4), Rat(1, 4)};
    case CellFamily::F4: return {Rat(1, 2), Rat(1, 4), Rat(-1, 4)};
    case CellFamily::T: return {Rat(1, 2), Rat(0), Rat(1, 4)};
    case CellFamily::S: return {Rat(1, 2), Rat(1, 2), Rat(0)};
    case CellFamily::P1: return {Rat(3, 8), Rat(5, 8), Rat(1, 8)};
    case CellFamily::P2: return {Rat(5, 8), Rat(3, 8), Rat(1, 8)};
  }
  throw EvaluationError("unknown limit family");
}

cplx octahedron_value(CellFamily f, const Partition& la, cplx a, cplx b, int n,
                      cplx q, cplx t) {
  const long w = weight(la);
  const cplx tn = ipow(t, n);
  const cplx c0_tn = c_tilde(CKind::C0, la, tn, q, t);
  const cplx cm_t = c_tilde(CKind::Cm, la, t, q, t);
  switch (f) {
    case CellFamily::S:
      return div_checked(c0_tn,
                         cm_t * c_tilde(CKind::Cp, la, tn / t * a / b, q, t) *
                             c_tilde(CKind::C0, la, a * q / (b * t), q, t),
                         "octahedron value") *
             ipow(t, nstat(la)) * ipow(t, -(n - 1) * w);
    case CellFamily::P1:
      return div_checked(c0_tn, cm_t, "octahedron value") *
             ipow(t, nstat(la));
    case CellFamily::P2:
      return div_checked(c0_tn, cm_t, "octahedron value") *
             ipow(t, nstat(la)) * ipow(t, -(n - 1) * w);
    default:
      throw EvaluationError("octahedron value wants S, P1 or P2");
  }
}

LimitScale limit_prefactor(CellFamily f, const Partition& la, cplx a, cplx b,
                           int n, cplx q, cplx t) {
  const long w = weight(la), np = nstat_conj(la), nl = nstat(la);
  const cplx tn1 = ipow(t, n - 1);
  const cplx cm_t = c_tilde(CKind::Cm, la, t, q, t);
  const cplx c0_tn = c_tilde(CKind::C0, la, ipow(t, n), q, t);
  auto base = [&](cplx mono, long knp, long knl) {
    return div_checked(cm_t * mono, c0_tn, "limit prefactor") *
           ipow(q, knp * np) * ipow(t, knl * nl);
  };
  switch (f) {
    case CellFamily::V:
      return {Rat(0), base(c_tilde(CKind::C0, la, a * q / (b * t), q, t) *
                               c_tilde(CKind::Cp, la, tn1 * a / b, q, t) *
                               ipow(q * q * tn1 / (b * b), w),
                           2, -3)};
    case CellFamily::E1:
      return {Rat(0), base(c_tilde(CKind::C0, la, a * q / (b * t), q, t) *
                               c_tilde(CKind::Cp, la, tn1 * a / b, q, t) *
                               ipow(-q * tn1, w),
                           1, -2)};
    case CellFamily::E2:
      return {Rat(w, 2), base(ipow(tn1 * q * q / (b * b), w), 2, -3)};
    case CellFamily::E3:
      return {Rat(0), base(ipow(-a * tn1, w), 1, -2)};
    case CellFamily::E4:
      return {Rat(0), base(ipow(q * q * tn1 / (b * b), w), 2, -3)};
    case CellFamily::F1:
      return {Rat(w, 2), base(ipow(-tn1 * q / b, w), 1, -2)};
    case CellFamily::F2:
      return {Rat(0), base(ipow(-tn1 * a, w), 1, -2)};
    case CellFamily::F3:
      return {Rat(w, 2), base(ipow(tn1 * q * q / (b * b), w), 2, -3)};
    case CellFamily::F4:
      return {Rat(0), base(ipow(-q * tn1 / b, w), 1, -2)};
    case CellFamily::T:
      return {Rat(w, 4), base(ipow(-tn1 * q / b, w), 1, -2)};
    case CellFamily::S:
    case CellFamily::P1:
    case CellFamily::P2:
      return {Rat(0), div_checked(1.0, octahedron_value(f, la, a, b, n, q, t),
                                  "limit prefactor")};
  }
  throw EvaluationError("unknown limit family");
}

cplx limit_binom(CellFamily f, const Partition& la, const Partition& mu,
                 cplx a, cplx b, cplx q, cplx t) {
  const int n = std::max(length(la), length(mu)) + 1;
  const long wm = weight(mu), npm = nstat_conj(mu), nm = nstat(mu);
  const cplx tn = ipow(t, n), tn1 = ipow(t, n - 1);
  const cplx sa = std::sqrt(a);
  std::vector<cplx> zp(n), zs(n), zm(n);
  for (int i = 1; i <= n; ++i) {
    const cplx pt = ipow(q, part(la, i)) * ipow(t, 1 - i);
    zp[i - 1] = pt;
    zs[i - 1] = sa * pt;
    zm[i - 1] = 1.0 / pt;
  }
  const cplx cm_q = c_tilde(CKind::Cm, mu, q, q, t);
  switch (f) {
    case CellFamily::V: {
      cplx c = ipow(q, 3 * npm) * ipow(t, -4 * nm) *
               ipow(-q * q * q * tn1 * a * a / (b * b), wm);
      c *= delta_tilde(mu, a / b, n, q, t);
      c *= c_tilde(CKind::C0, mu, {1.0 / b, a * q / (tn * b)}, q, t) *
           c_tilde(CKind::Cm, mu, t, q, t) *
           c_tilde(CKind::Cp, mu, a / b, q, t);
      c = div_checked(c, c_tilde(CKind::C0, mu, {a * q, tn}, q, t),
                      "limit binomial");
      return c * interp_limit(CellFamily::V, mu, zs, sa / tn1, b / sa, q, t);
    }
    case CellFamily::E1: {
      const cplx x = a / b;
      cplx c = ipow(-q * q * tn1 * x, wm) * ipow(q, 3 * npm) * ipow(t, -4 * nm);
      c *= delta_tilde(mu, x, n, q, t);
      c *= c_tilde(CKind::Cm, mu, t, q, t) * c_tilde(CKind::Cp, mu, x, q, t) *
           c_tilde(CKind::C0, mu, q * x / tn, q, t);
      c = div_checked(c, c_tilde(CKind::C0, mu, tn, q, t), "limit binomial");
      return c * interp_limit(CellFamily::E1, mu, zp, 1.0 / tn1, 1.0 / x, q, t);
    }
    case CellFamily::E2:
      return ipow(q, wm) * ipow(t, nm) *
             div_checked(c_tilde(CKind::C0, mu, 1.0 / b, q, t), cm_q,
                         "limit binomial") *
             interp_limit(CellFamily::E2, mu, zp, 1.0 / tn1, b, q, t);
    case CellFamily::E3:
      return ipow(q, npm) * ipow(-q * sa, wm) *
             div_checked(1.0, cm_q * c_tilde(CKind::C0, mu, a * q, q, t),
                         "limit binomial") *
             interp_limit(CellFamily::E3, mu, zs, sa / tn1, 1.0, q, t);
    case CellFamily::F1:
      return ipow(t, nm) * div_checked(1.0, cm_q, "limit binomial") *
             interp_limit(CellFamily::F1, mu, zp, 1.0 / tn1, 1.0, q, t);
    case CellFamily::F2:
      return ipow(q, npm) * ipow(-q, wm) *
             div_checked(1.0, cm_q, "limit binomial") *
             interp_limit(CellFamily::F2, mu, zm, 1.0 / tn1, 1.0, q, t);
    default:
      throw EvaluationError("limit binomial wants V, E1, E2, E3, F1 or F2");
  }
}

std::array<Rat, 2> limit_binom_rep(CellFamily f) {
  switch (f) {
    case CellFamily::V: return {Rat(0), Rat(0)};
    case CellFamily::E1: return {Rat(1, 3), Rat(1, 3)};
    case CellFamily::E2: return {Rat(1, 3), Rat(0)};
    case CellFamily::E3: return {Rat(0), Rat(1, 3)};
    case CellFamily::F1: return {Rat(2, 3), Rat(1, 3)};
    case CellFamily::F2: return {Rat(1, 3), Rat(2, 3)};
    default:
      throw EvaluationError("limit binomial wants V, E1, E2, E3, F1 or F2");
  }
}

cplx macdonald(const Partition& la, const std::vector<cplx>& z, cplx q,
               cplx t) {
  return interp_limit(CellFamily::T, la, z, 1.0, 1.0, q, t);
}

namespace {

using Mono = std::vector<int>;
using FullPoly = std::map<Mono, double>;

FullPoly psym(int k, int nvars) {
  FullPoly f;
  for (int i = 0; i < nvars; ++i) {
    Mono e(nvars, 0);
    e[i] = k;
    f[e] += 1.0;
  }
  return f;
}

FullPoly pmul(const FullPoly& f, const FullPoly& g) {
  FullPoly h;
  for (const auto& [ef, cf] : f)
    for (const auto& [eg, cg] : g) {
      Mono e = ef;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eg[i];
      h[e] += cf * cg;
    }
  return h;
}

// In-place solve of a dense complex system by Gaussian elimination.
void gauss_solve(int k, std::vector<cplx>& M, std::vector<cplx>& rhs) {
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r)
      if (std::abs(M[r * k + col]) > std::abs(M[piv * k + col])) piv = r;
    if (std::abs(M[piv * k + col]) < 1e-280)
      throw PoleError("singular linear system", M[piv * k + col],
                      "macdonald oracle");
    if (piv != col) {
      for (int c = 0; c < k; ++c) std::swap(M[piv * k + c], M[col * k + c]);
      std::swap(rhs[piv], rhs[col]);
    }
    for (int r = col + 1; r < k; ++r) {
      const cplx m = M[r * k + col] / M[col * k + col];
      for (int c = col; c < k; ++c) M[r * k + c] -= m * M[col * k + c];
      rhs[r] -= m * rhs[col];
    }
  }
  for (int r = k - 1; r >= 0; --r) {
    cplx s = rhs[r];
    for (int c = r + 1; c < k; ++c) s -= M[r * k + c] * rhs[c];
    rhs[r] = s / M[r * k + r];
  }
}

cplx monomial_sym(const Partition& mu, int n, const std::vector<cplx>& z) {
  if (length(mu) > n) return 0.0;
  Mono e(n, 0);
  for (int i = 0; i < length(mu); ++i) e[i] = part(mu, i + 1);
  std::sort(e.begin(), e.end());
  cplx s = 0.0;
  do {
    cplx m = 1.0;
    for (int i = 0; i < n; ++i) m *= ipow(z[i], e[i]);
    s += m;
  } while (std::next_permutation(e.begin(), e.end()));
  return s;
}

}  // namespace

cplx macdonald_oracle(const Partition& la, const std::vector<cplx>& z, cplx q,
                      cplx t) {
  const int d = static_cast<int>(weight(la));
  const int n = static_cast<int>(z.size());
  if (d > 4 || n > 3)
    throw EvaluationError("macdonald oracle guard: wants |la| <= 4, n <= 3");
  if (d == 0) return 1.0;
  if (length(la) > n) return 0.0;
  const std::vector<Partition> parts = partitions_of(d);
  const int m = static_cast<int>(parts.size());

  // change of basis between power sums and monomials, via full expansions
  std::vector<double> A(m * m, 0.0);
  for (int r = 0; r < m; ++r) {
    FullPoly f;
    f[Mono(d, 0)] = 1.0;
    for (int i = 1; i <= length(parts[r]); ++i)
      f = pmul(f, psym(part(parts[r], i), d));
    for (int c = 0; c < m; ++c) {
      Mono e(d, 0);
      for (int i = 0; i < length(parts[c]); ++i) e[i] = part(parts[c], i + 1);
      std::sort(e.begin(), e.end(), std::greater<int>());
      auto it = f.find(e);
      if (it != f.end()) A[r * m + c] = it->second;
    }
  }
  std::vector<double> B(m * m, 0.0);
  for (int i = 0; i < m; ++i) B[i * m + i] = 1.0;
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int r = col + 1; r < m; ++r)
      if (std::abs(A[r * m + col]) > std::abs(A[piv * m + col])) piv = r;
    for (int c = 0; c < m; ++c) {
      std::swap(A[piv * m + c], A[col * m + c]);
      std::swap(B[piv * m + c], B[col * m + c]);
    }
    const double d0 = A[col * m + col];
    for (int c = 0; c < m; ++c) {
      A[col * m + c] /= d0;
      B[col * m + c] /= d0;
    }
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      const double mfac = A[r * m + col];
      for (int c = 0; c < m; ++c) {
        A[r * m + c] -= mfac * A[col * m + c];
        B[r * m + c] -= mfac * B[col * m + c];
      }
    }
  }

  // Gram matrix of the monomial basis under <p_mu, p_mu> = z_mu prod
  // (1 - q^{mu_i}) / (1 - t^{mu_i})
  std::vector<cplx> gram(m * m, 0.0);
  for (int k = 0; k < m; ++k) {
    double zmu = 1.0;
    std::map<int, int> mult;
    for (int i = 1; i <= length(parts[k]); ++i) ++mult[part(parts[k], i)];
    for (const auto& [pk, cnt] : mult) {
      for (int c = 1; c <= cnt; ++c) zmu *= pk * c;
    }
    cplx bq = 1.0;
    for (int i = 1; i <= length(parts[k]); ++i)
      bq *= div_checked(1.0 - ipow(q, part(parts[k], i)),
                        1.0 - ipow(t, part(parts[k], i)), "macdonald oracle");
    const cplx wk = zmu * bq;
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c)
        gram[r * m + c] += B[r * m + k] * B[c * m + k] * wk;
  }

  int self = -1;
  std::vector<int> lower;
  for (int i = 0; i < m; ++i) {
    if (parts[i] == la)
      self = i;
    else if (dominates(la, parts[i]))
      lower.push_back(i);
  }
  const int k = static_cast<int>(lower.size());
  std::vector<cplx> coeff(k, 0.0);
  if (k > 0) {
    std::vector<cplx> M(k * k);
    std::vector<cplx> rhs(k);
    for (int r = 0; r < k; ++r) {
      rhs[r] = -gram[self * m + lower[r]];
      for (int c = 0; c < k; ++c) M[r * k + c] = gram[lower[c] * m + lower[r]];
    }
    gauss_solve(k, M, rhs);
    coeff = rhs;
  }

  cplx val = monomial_sym(la, n, z);
  for (int c = 0; c < k; ++c)
    val += coeff[c] * monomial_sym(parts[lower[c]], n, z);
  return val;
}

double min_singular_normalized(int rows, int cols, std::vector<cplx> m) {
  for (int r = 0; r < rows; ++r) {
    double s = 0.0;
    for (int c = 0; c < cols; ++c) s += std::norm(m[r * cols + c]);
    if (s == 0.0) return 0.0;
    s = std::sqrt(s);
    for (int c = 0; c < cols; ++c) m[r * cols + c] /= s;
  }
  std::vector<cplx> H(cols * cols, 0.0);
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j) {
      cplx s = 0.0;
      for (int r = 0; r < rows; ++r)
        s += std::conj(m[r * cols + i]) * m[r * cols + j];
      H[i * cols + j] = s;
    }
  for (int sweep = 0; sweep < 50; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < cols; ++i)
      for (int j = i + 1; j < cols; ++j) off += std::norm(H[i * cols + j]);
    if (off < 1e-28) break;
    for (int i = 0; i < cols; ++i)
      for (int j = i + 1; j < cols; ++j) {
        const cplx h = H[i * cols + j];
        if (std::abs(h) < 1e-300) continue;
        const double phi = std::arg(h);
        const double th =
            0.5 * std::atan2(2.0 * std::abs(h),
                             H[i * cols + i].real() - H[j * cols + j].real());
        const cplx ph = std::polar(1.0, phi / 2.0);
        const cplx j11 = std::cos(th) * ph, j12 = std::sin(th) * ph;
        const cplx j21 = -std::sin(th) / ph, j22 = std::cos(th) / ph;
        for (int r = 0; r < cols; ++r) {
          const cplx hi = H[r * cols + i], hj = H[r * cols + j];
          H[r * cols + i] = hi * j11 + hj * j21;
          H[r * cols + j] = hi * j12 + hj * j22;
        }
        for (int c = 0; c < cols; ++c) {
          const cplx hi = H[i * cols + c], hj = H[j * cols + c];
          H[i * cols + c] = std::conj(j11) * hi + std::conj(j21) * hj;
          H[j * cols + c] = std::conj(j12) * hi + std::conj(j22) * hj;
        }
      }
  }
  double mn = H[0].real();
  for (int i = 1; i < cols; ++i) mn = std::min(mn, H[i * cols + i].real());
  return std::sqrt(std::max(mn, 0.0));
}

}  // namespace ellip
