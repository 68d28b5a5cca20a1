#include "ellip/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "ellip/errors.hpp"
#include "ellip/kernels.hpp"

namespace ellip {

namespace {

cplx div_checked(cplx num, cplx den, const char* where) {
  if (std::abs(den) < 1e-280) throw PoleError("vanishing denominator", den, where);
  return num / den;
}

}  // namespace

cplx binon_elliptic(const Partition& la, const Partition& mu, cplx a,
                    const EllParams& P) {
  if (!horizontal_strip(la, mu)) return 0.0;
  const cplx q = P.q, t = P.t, p = P.p;
  const Partition lap = conjugate(la), mup = conjugate(mu);
  cplx num = 1.0, den = 1.0;
  for (int i = 1; i <= length(la); ++i) {
    for (int j = 1; j <= part(la, i); ++j) {
      const int li = part(la, i), mi = part(mu, i);
      const int lpj = part(lap, j), mpj = part(mup, j);
      if (lpj == mpj) {
        num *= theta(ipow(q, li + j - 1) * ipow(t, 2 - lpj - i) * a, p);
        den *= theta(ipow(q, mi - j) * ipow(t, mpj - i) * p * q, p);
      } else {
        num *= theta(ipow(q, li - j) * ipow(t, 1 + lpj - i), p);
        den *= theta(ipow(q, mi + j - 1) * ipow(t, -mpj - i) * p * q * a, p);
      }
    }
  }
  for (int i = 1; i <= length(mu); ++i) {
    for (int j = 1; j <= part(mu, i); ++j) {
      const int li = part(la, i), mi = part(mu, i);
      const int lpj = part(lap, j), mpj = part(mup, j);
      if (lpj == mpj) {
        num *= theta(ipow(q, li - j) * ipow(t, lpj - i) * p * q, p);
        den *= theta(ipow(q, mi + j - 1) * ipow(t, 1 - mpj - i) * a, p);
      } else {
        num *= theta(ipow(q, li + j - 1) * ipow(t, 1 - lpj - i) * p * q * a, p);
        den *= theta(ipow(q, mi - j) * ipow(t, 1 + mpj - i), p);
      }
    }
  }
  return div_checked(num, den, "binomial denominator");
}

namespace {

// C0 over the skew shape la minus ka; entire in b.
cplx c0_skew(const Partition& la, const Partition& ka, cplx b,
             const EllParams& P) {
  cplx r = 1.0;
  for (int i = 1; i <= length(la); ++i)
    for (int j = part(ka, i) + 1; j <= part(la, i); ++j)
      r *= theta(ipow(P.q, j - 1) * ipow(P.t, 1 - i) * b, P.p);
  return r;
}

// C0_ka(x/t) / C0_la(x) for ka a horizontal strip of la.  Pushing ka down one
// row leaves a shape containing every row of la but the first, so all shared
// boxes cancel and only the first row of la stays in the denominator.
cplx c0_shift_ratio(const Partition& la, const Partition& ka, cplx x,
                    const EllParams& P) {
  cplx num = 1.0;
  for (int i = 2; i <= length(ka) + 1; ++i)
    for (int j = part(la, i) + 1; j <= part(ka, i - 1); ++j)
      num *= theta(ipow(P.q, j - 1) * ipow(P.t, 1 - i) * x, P.p);
  cplx den = 1.0;
  for (int j = 1; j <= part(la, 1); ++j)
    den *= theta(ipow(P.q, j - 1) * x, P.p);
  return div_checked(num, den, "branching coefficient");
}

}  // namespace

cplx branch_coeff(const Partition& la, const Partition& ka, cplx a, cplx b,
                  cplx v, int n, const EllParams& P) {
  const cplx q = P.q, t = P.t, p = P.p;
  const cplx tn = ipow(t, n);
  const cplx A = tn * a / b;
  cplx c = binon_elliptic(la, ka, A, P);
  if (c == 0.0) return 0.0;
  for (cplx bi : {tn * a * v, tn * a / v, p * q * a / (b * t)}) {
    c *= c0_skew(la, ka, bi, P);
    c *= c0_shift_ratio(la, ka, p * q * A / bi, P);
  }
  return c;
}

cplx interp_R(const Partition& la, const std::vector<cplx>& z, cplx a, cplx b,
              const EllParams& P) {
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
      const cplx c = branch_coeff(ka, nu, a, b, z[level - 1], level - 1, P);
      if (c != 0.0) sum += c * rec(level - 1, nu);
    }
    memo.emplace(key, sum);
    return sum;
  };
  return rec(n, la);
}

cplx interp_norm(const Partition& la, cplx a, cplx b, int n,
                 const EllParams& P) {
  const cplx q = P.q, t = P.t, p = P.p;
  const cplx tn1 = ipow(t, n - 1);
  cplx f = delta(la, tn1 * a / b, {ipow(t, n)}, P);
  f *= c_sym(CKind::Cp, la, tn1 * a / b, P) * c_sym(CKind::C0, la, tn1 * a * b, P);
  return div_checked(f,
                     c_sym(CKind::Cp, la, tn1 * tn1 * a * a, P) *
                         c_sym(CKind::C0, la, p * q * tn1 * a / b, P),
                     "interpolation normalization");
}

cplx interp_Q(const Partition& la, const std::vector<cplx>& z, cplx a, cplx b,
              const EllParams& P) {
  const int n = static_cast<int>(z.size());
  return interp_R(la, z, a, b, P) * interp_norm(la, a, b, n, P);
}

cplx gen_binom(const Partition& la, const Partition& mu, cplx a, cplx b,
               const EllParams& P, int n, int sign) {
  const int nn = std::max({n, length(la), length(mu)});
  const cplx q = P.q, t = P.t;
  const cplx sa = double(sign) * std::sqrt(a);
  std::vector<cplx> z(nn);
  for (int i = 1; i <= nn; ++i) z[i - 1] = sa * ipow(q, part(la, i)) * ipow(t, 1 - i);
  const cplx w = delta(mu, a / b, {ipow(t, nn), 1.0 / b}, P);
  if (w == 0.0) return 0.0;
  return w * interp_R(mu, z, ipow(t, 1 - nn) * sa, b / sa, P);
}

std::vector<Partition> partitions_between(const Partition& ka,
                                          const Partition& la) {
  std::vector<Partition> out;
  if (!contains(la, ka)) return out;
  const int rows = length(la);
  Partition mu;
  std::function<void(int)> build = [&](int i) {
    if (i > rows) {
      out.push_back(normalized(mu));
      return;
    }
    const int hi = std::min(part(la, i), i == 1 ? part(la, 1) : mu[i - 2]);
    for (int v = part(ka, i); v <= hi; ++v) {
      mu.push_back(v);
      build(i + 1);
      mu.pop_back();
    }
  };
  build(1);
  return out;
}

cplx omega(const Partition& la, const Partition& ka, cplx a, cplx b,
           const std::array<cplx, 4>& v, const EllParams& P) {
  if (!contains(la, ka)) return 0.0;
  const cplx q = P.q, t = P.t, p = P.p;
  const cplx v4 = v[0] * v[1] * v[2] * v[3];
  std::vector<cplx> pqa_v(4), v_b(4);
  for (int r = 0; r < 4; ++r) {
    pqa_v[r] = p * q * a / v[r];
    v_b[r] = v[r] / b;
  }
  cplx sum = 0.0;
  for (const Partition& mu : partitions_between(ka, la)) {
    cplx term = gen_binom(la, mu, p * q * a * a, p * q * a * b, P);
    if (term == 0.0) continue;
    term *= gen_binom(mu, ka, a / b, a * b * p * q / v4, P);
    if (term == 0.0) continue;
    term *= delta0(mu, a / b, {a * b * p * q / v4}, P);
    term = div_checked(term, delta0(mu, a / b, {1.0 / (p * q * a * b)}, P),
                       "omega summand");
    term *= c_sym(CKind::C0, mu, v_b, P);
    term = div_checked(term, c_sym(CKind::C0, mu, pqa_v, P), "omega summand");
    sum += term;
  }
  cplx pref = delta0(la, p * q * a * a, {p * q * a * b}, P);
  pref *= c_sym(CKind::C0, la, pqa_v, P);
  pref = div_checked(
      pref,
      delta0(ka, v4 / (b * b * p * q), {v4 / (a * b * p * q)}, P) *
          c_sym(CKind::C0, ka, v_b, P),
      "omega prefactor");
  return pref * sum;
}

cplx omega_eval(const Partition& la, const Partition& ka, cplx a, cplx b,
                cplx v1, cplx v2, cplx x, const EllParams& P) {
  const cplx q = P.q, t = P.t, p = P.p;
  const cplx pqa = p * q * a;
  cplx f = gen_binom(la, ka, p * q * a * a, p * q * a * b / (v1 * v2), P);
  f *= c_sym(CKind::C0, la,
             {p * q * a * b / (v1 * v2), pqa * v1, pqa * v2, x / b, pqa / x}, P);
  f *= c_sym(CKind::C0, ka, p * p * q * q * a * a, P);
  return div_checked(
      f,
      c_sym(CKind::C0, la, pqa * v1 * v2 / b, P) *
          c_sym(CKind::C0, ka,
                {pqa * v1, pqa * v2, v1 * v2 / (p * q * a * b), x / b, pqa / x},
                P),
      "omega evaluation");
}

}  // namespace ellip
