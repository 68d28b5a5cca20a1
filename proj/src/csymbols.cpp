#include "ellip/csymbols.hpp"

#include <cmath>
#include <string>

#include "ellip/errors.hpp"

namespace ellip {

namespace {

constexpr double kPoleEps = 1e-12;

// Box argument q^e t^f x for the three kinds.
cplx box_arg(CKind k, int i, int j, int lai, int lacj, cplx q, cplx t, cplx x) {
  switch (k) {
    case CKind::C0:
      return ipow(q, j - 1) * ipow(t, 1 - i) * x;
    case CKind::Cm:
      return ipow(q, lai - j) * ipow(t, lacj - i) * x;
    case CKind::Cp:
      return ipow(q, lai + j - 1) * ipow(t, 2 - lacj - i) * x;
  }
  return 0.0;
}

template <typename F>
cplx box_product(CKind k, const Partition& la, cplx x, cplx q, cplx t, F factor) {
  Partition lc = conjugate(la);
  cplx r = 1.0;
  for (int i = 1; i <= (int)la.size(); ++i)
    for (int j = 1; j <= la[i - 1]; ++j)
      r *= factor(box_arg(k, i, j, la[i - 1], lc[j - 1], q, t, x));
  return r;
}

// Denominator product with a pole guard on every theta factor.
cplx c_sym_checked(CKind k, const Partition& la, cplx x, const EllParams& P,
                   const char* where) {
  Partition lc = conjugate(la);
  cplx r = 1.0;
  for (int i = 1; i <= (int)la.size(); ++i)
    for (int j = 1; j <= la[i - 1]; ++j) {
      cplx f = theta(box_arg(k, i, j, la[i - 1], lc[j - 1], P.q, P.t, x), P.p);
      if (std::abs(f) < kPoleEps)
        throw PoleError("theta factor near zero", f,
                        std::string(where) + " box (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
      r *= f;
    }
  return r;
}

}  // namespace

cplx c_sym(CKind k, const Partition& la, cplx x, const EllParams& P) {
  return box_product(k, la, x, P.q, P.t,
                     [&](cplx arg) { return theta(arg, P.p); });
}

cplx c_sym(CKind k, const Partition& la, const std::vector<cplx>& xs,
           const EllParams& P) {
  cplx r = 1.0;
  for (cplx x : xs) r *= c_sym(k, la, x, P);
  return r;
}

cplx c_tilde(CKind k, const Partition& la, cplx x, cplx q, cplx t) {
  return box_product(k, la, x, q, t, [](cplx arg) { return 1.0 - arg; });
}

cplx c_tilde(CKind k, const Partition& la, const std::vector<cplx>& xs, cplx q,
             cplx t) {
  cplx r = 1.0;
  for (cplx x : xs) r *= c_tilde(k, la, x, q, t);
  return r;
}

cplx delta0(const Partition& la, cplx a, const std::vector<cplx>& bs,
            const EllParams& P) {
  cplx num = 1.0, den = 1.0;
  for (cplx b : bs) {
    num *= c_sym(CKind::C0, la, b, P);
    den *= c_sym_checked(CKind::C0, la, P.p * P.q * a / b, P, "delta0 denominator");
  }
  return num / den;
}

cplx delta0(const Partition& la, cplx a, const std::vector<ArgSpec>& bs,
            const EllParams& P) {
  std::vector<cplx> flat;
  for (const ArgSpec& spec : bs)
    for (cplx b : expand_arg(spec)) flat.push_back(b);
  return delta0(la, a, flat, P);
}

cplx delta(const Partition& la, cplx a, const std::vector<cplx>& bs,
           const EllParams& P) {
  cplx r = delta0(la, a, bs, P);
  r *= c_sym(CKind::C0, double_square(la), P.p * P.q * a, P);
  cplx den = c_sym_checked(CKind::Cm, la, P.p * P.q, P, "delta Cm(pq)") *
             c_sym_checked(CKind::Cm, la, P.t, P, "delta Cm(t)") *
             c_sym_checked(CKind::Cp, la, a, P, "delta Cp(a)") *
             c_sym_checked(CKind::Cp, la, P.p * P.q * a / P.t, P, "delta Cp(pqa/t)");
  return r / den;
}

cplx delta_tilde(const Partition& la, cplx a, int n, cplx q, cplx t) {
  cplx tn = ipow(t, n);
  cplx num = c_tilde(CKind::C0, double_square(la), a * q, q, t) *
             c_tilde(CKind::C0, la, tn, q, t);
  cplx den = c_tilde(CKind::C0, la, a * q / tn, q, t) *
             c_tilde(CKind::Cm, la, {q, t}, q, t) *
             c_tilde(CKind::Cp, la, {a, a * q / t}, q, t);
  cplx mono = ipow(-1.0 / (a * a * q * q * ipow(t, n - 1)), weight(la)) *
              ipow(q, -3 * nstat_conj(la)) * ipow(t, 5 * nstat(la));
  return num / den * mono;
}

}  // namespace ellip
