#pragma once

#include <array>
#include <vector>

#include "ellip/interpolation.hpp"
#include "ellip/valuation.hpp"

namespace ellip {

// Small-p limits of the interpolation machinery.  Every open cell of the
// exponent tessellation carries its own limiting branching rule; the cell
// tags are shared with classify_cell.

// Branching binomial with deformation parameter a.  Zero unless la/mu is a
// horizontal strip; at a = 0 it reduces to the Macdonald branching weight.
cplx binon_a(const Partition& la, const Partition& mu, cplx a, cplx q, cplx t);
cplx psi_coeff(const Partition& la, const Partition& mu, cplx q, cplx t);

// Limiting branching coefficient of the family, peeling variable v with n
// variables remaining.  Families ignore parameters they do not mention.
cplx branch_coeff_limit(CellFamily f, const Partition& la, const Partition& ka,
                        cplx a, cplx b, cplx v, int n, cplx q, cplx t);

// Limiting interpolation function, n = z.size().  S, P1 and P2 use only the
// number of entries of z, not their values.
cplx interp_limit(CellFamily f, const Partition& la, const std::vector<cplx>& z,
                  cplx a, cplx b, cplx q, cplx t);

// Exponents (alpha, beta, zeta) of the probe representative of each family,
// sitting at a far-from-boundary point of its open cell.
std::array<Rat, 3> limit_rep(CellFamily f);

// Valuation at the representative exponents, and the constant relating the
// elliptic leading coefficient there to interp_limit.
struct LimitScale {
  Rat val;
  cplx prefactor;
};
LimitScale limit_prefactor(CellFamily f, const Partition& la, cplx a, cplx b,
                           int n, cplx q, cplx t);

// Closed forms of the z-independent limits (families S, P1, P2).
cplx octahedron_value(CellFamily f, const Partition& la, cplx a, cplx b, int n,
                      cplx q, cplx t);

// Limiting binomial coefficients; defined for V, E1, E2, E3, F1 and F2, the
// cells of the two-exponent picture.  E1 depends on a, b only through a/b;
// E2 only uses b, E3 only a; F1 and F2 use neither.
cplx limit_binom(CellFamily f, const Partition& la, const Partition& mu,
                 cplx a, cplx b, cplx q, cplx t);
// Probe exponents (alpha, beta) whose limit is the family's coefficient.
std::array<Rat, 2> limit_binom_rep(CellFamily f);

// Macdonald polynomial P_la(z; q, t) through the T-family branching rule.
cplx macdonald(const Partition& la, const std::vector<cplx>& z, cplx q,
               cplx t);
// Same polynomial built independently: Gram-Schmidt of the monomial basis
// under the power-sum scalar product.  Guarded to |la| <= 4, z.size() <= 3.
cplx macdonald_oracle(const Partition& la, const std::vector<cplx>& z, cplx q,
                      cplx t);

// Smallest singular value of the row-major rows x cols matrix after scaling
// every row to unit norm.
double min_singular_normalized(int rows, int cols, std::vector<cplx> m);

}  // namespace ellip
