#pragma once

#include <complex>
#include <vector>

namespace ellip {

using cplx = std::complex<double>;

// Integer power with negative exponents.
cplx ipow(cplx x, long k);

// (x;q)_m, finite product, m >= 0.
cplx qpoch(cplx x, cplx q, long m);

// (x;q)_infty for |q| < 1.  Truncates once |x q^N| < 1e-17, capped at 2000
// factors.
cplx qpoch_inf(cplx x, cplx q);

// theta(x;p) = (x;p)_inf (p/x;p)_inf, |p| < 1, x != 0.
cplx theta(cplx x, cplx p);

// theta(x;q;p)_m = prod_{r=0}^{m-1} theta(x q^r; p), m >= 0.
cplx theta_poch(cplx x, cplx q, cplx p, long m);

// Gamma(x;p,q) = prod_{i,j>=0} (1 - p^{i+1} q^{j+1}/x) / (1 - p^i q^j x).
// Throws PoleError if a denominator factor comes within 1e-12 of zero.
cplx elliptic_gamma(cplx x, cplx p, cplx q);

// One argument written multiplicatively: plain * prod_k pm[k]^{eps_k} over all
// sign choices eps_k = +-1.  expand_arg lists the 2^{|pm|} plain arguments, so
// f(x y^{+-1} w^{+-1}) means the product of f over expand_arg({x, {y, w}}).
struct ArgSpec {
  cplx plain = 1.0;
  std::vector<cplx> pm;
};
std::vector<cplx> expand_arg(const ArgSpec& a);

}  // namespace ellip
