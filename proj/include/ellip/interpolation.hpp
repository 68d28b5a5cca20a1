#pragma once

#include <array>

#include "ellip/csymbols.hpp"

namespace ellip {

// Single-parameter elliptic binomial binon(la, mu)_{[a,t]}.  Zero unless
// la/mu is a horizontal strip.
cplx binon_elliptic(const Partition& la, const Partition& mu, cplx a,
                    const EllParams& P);

// Branching coefficient c_{la,ka}(a,b,v) relating an (n+1)-variable
// interpolation function to n-variable ones; v is the peeled variable.
cplx branch_coeff(const Partition& la, const Partition& ka, cplx a, cplx b,
                  cplx v, int n, const EllParams& P);

// Interpolation function R*_la^{(n)}(z; a, b) with n = z.size().  The last
// entry of z is the variable peeled off at the top recursion level.
cplx interp_R(const Partition& la, const std::vector<cplx>& z, cplx a, cplx b,
              const EllParams& P);

// Ratio Q*_la / R*_la = delta(t^{n-1}a/b | t^n) * Cp(t^{n-1}a/b)
// C0(t^{n-1}ab) / (Cp(t^{2(n-1)}a^2) C0(pq t^{n-1} a/b)); its inverse is the
// value of R*_la at the principal point a q^{la_i} t^{n-i}.
cplx interp_norm(const Partition& la, cplx a, cplx b, int n,
                 const EllParams& P);

// Normalization with principal specialization 1: Q*_la = R*_la * interp_norm.
cplx interp_Q(const Partition& la, const std::vector<cplx>& z, cplx a, cplx b,
              const EllParams& P);

// Generalized binomial binom(la, mu)_{[a,b]} = delta_mu(a/b | t^n, 1/b) *
// R*_mu^{(n)}(sqrt(a) q^{la_i} t^{1-i}; t^{1-n} sqrt(a), b/sqrt(a)).
// Independent of n >= max(len la, len mu) and of the branch of sqrt(a);
// n = 0 requests the minimal choice, sign = -1 the other square root.
cplx gen_binom(const Partition& la, const Partition& mu, cplx a, cplx b,
               const EllParams& P, int n = 0, int sign = 1);

// All partitions mu with ka subset mu subset la.
std::vector<Partition> partitions_between(const Partition& ka,
                                          const Partition& la);

// Connection coefficient Omega_{la/ka}(a, b; v1..v4) as the double-binomial
// sum over ka subset mu subset la.
cplx omega(const Partition& la, const Partition& ka, cplx a, cplx b,
           const std::array<cplx, 4>& v, const EllParams& P);

// Closed form of Omega_{la/ka}(a, b; v1, v2, x, abpq/x).
cplx omega_eval(const Partition& la, const Partition& ka, cplx a, cplx b,
                cplx v1, cplx v2, cplx x, const EllParams& P);

}  // namespace ellip
