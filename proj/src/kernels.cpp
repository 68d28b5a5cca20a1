#include "ellip/kernels.hpp"

#include <cmath>

#include "ellip/errors.hpp"

namespace ellip {

namespace {
constexpr double kTailEps = 1e-17;
constexpr int kMaxFactors = 2000;
constexpr double kPoleEps = 1e-12;
}  // namespace

cplx ipow(cplx x, long k) {
  if (k < 0) return 1.0 / ipow(x, -k);
  cplx r = 1.0, b = x;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

cplx qpoch(cplx x, cplx q, long m) {
  if (m < 0) throw EvaluationError("qpoch: negative length");
  cplx r = 1.0, xq = x;
  for (long k = 0; k < m; ++k) {
    r *= (1.0 - xq);
    xq *= q;
  }
  return r;
}

cplx qpoch_inf(cplx x, cplx q) {
  if (std::abs(q) >= 1.0) throw EvaluationError("qpoch_inf: |q| >= 1");
  cplx r = 1.0, xq = x;
  for (int k = 0; k < kMaxFactors; ++k) {
    if (std::abs(xq) < kTailEps) break;
    r *= (1.0 - xq);
    xq *= q;
  }
  return r;
}

cplx theta(cplx x, cplx p) {
  if (x == cplx(0.0)) throw EvaluationError("theta: x = 0");
  return qpoch_inf(x, p) * qpoch_inf(p / x, p);
}

cplx theta_poch(cplx x, cplx q, cplx p, long m) {
  if (m < 0) throw EvaluationError("theta_poch: negative length");
  cplx r = 1.0, xq = x;
  for (long k = 0; k < m; ++k) {
    r *= theta(xq, p);
    xq *= q;
  }
  return r;
}

cplx elliptic_gamma(cplx x, cplx p, cplx q) {
  if (x == cplx(0.0)) throw EvaluationError("elliptic_gamma: x = 0");
  if (std::abs(p) >= 1.0 || std::abs(q) >= 1.0)
    throw EvaluationError("elliptic_gamma: need |p| < 1 and |q| < 1");
  cplx num = 1.0, den = 1.0;
  cplx pi = 1.0;  // p^i
  for (int i = 0; i < kMaxFactors; ++i) {
    cplx nbase = p * pi * q / x;  // p^{i+1} q^{j+1} / x at j = 0
    cplx dbase = pi * x;          // p^i q^j x at j = 0
    if (std::abs(nbase) < kTailEps && std::abs(dbase) < kTailEps) break;
    for (int j = 0; j < kMaxFactors; ++j) {
      bool live = false;
      if (std::abs(nbase) >= kTailEps) {
        num *= (1.0 - nbase);
        live = true;
      }
      if (std::abs(dbase) >= kTailEps) {
        cplx f = 1.0 - dbase;
        if (std::abs(f) < kPoleEps)
          throw PoleError("elliptic_gamma denominator near zero", f,
                          "i=" + std::to_string(i) + ",j=" + std::to_string(j));
        den *= f;
        live = true;
      }
      if (!live) break;
      nbase *= q;
      dbase *= q;
    }
    pi *= p;
  }
  return num / den;
}

std::vector<cplx> expand_arg(const ArgSpec& a) {
  std::vector<cplx> out{a.plain};
  for (cplx y : a.pm) {
    std::vector<cplx> next;
    next.reserve(out.size() * 2);
    for (cplx v : out) {
      next.push_back(v * y);
      next.push_back(v / y);
    }
    out.swap(next);
  }
  return out;
}

}  // namespace ellip
