#pragma once

#include <boost/rational.hpp>

#include <array>
#include <functional>
#include <string>
#include <utility>

#include "ellip/csymbols.hpp"

namespace ellip {

// Exact rational exponents; all limit bookkeeping is done in these.
using Rat = boost::rational<long long>;

long long rfloor(const Rat& x);
Rat rfrac(const Rat& x);
double rat_double(const Rat& x);

// {x}(1 - {x}), the periodic bump driving the summand-size analysis below.
Rat frac_g(const Rat& x);

// Lowest p-power of theta(x p^alpha; p) and the coefficient in front of it.
Rat theta_val(const Rat& alpha);
cplx theta_lc(cplx x, const Rat& alpha);

// C-symbols with argument x p^alpha.  The valuation holds for all real alpha;
// the leading coefficient is given on 0 <= alpha < 1 (reduce with the p-shift
// laws first), where it is the tilde symbol at alpha = 0 and 1 otherwise.
Rat c_val(const Partition& la, const Rat& alpha);
cplx c_lc(CKind k, const Partition& la, cplx x, const Rat& alpha, cplx q,
          cplx t);

// delta(la; a p^alpha | t^n) for 0 <= alpha < 1: valuation -2 alpha |la|,
// leading coefficient delta_tilde at alpha = 0 and a Ct0/Ctm monomial
// expression for fractional alpha.
std::pair<Rat, cplx> delta_val_lc(const Partition& la, cplx a,
                                  const Rat& alpha, int n, cplx q, cplx t);

// Valuation of R*_la(z_i p^zeta; a p^alpha, b p^beta) per unit of |la|.
Rat interp_scale(const Rat& alpha, const Rat& beta, const Rat& zeta);

// The four summand-size functions attached to the connection coefficients
// Omega_{la/ka}(a p^alpha, b p^beta; v_r p^{gamma_r}).  The variants apply
// sign flips of the gamma's (compensated through beta) under which Omega is
// invariant but the summands are not.
enum class OmegaVariant { plain, f12, f13, f1234 };
Rat omega_f(OmegaVariant variant, const Rat& alpha, const Rat& beta,
            const std::array<Rat, 4>& gamma);

// val(Omega_{la/ka}) = f1 |la| + f2 |ka|.  Computed from the first variant
// that is nonzero, or failing that not locally zero, at the point; throws
// UndeterminedError if every variant vanishes on a neighborhood (which the
// derivative identity between the variants rules out).
struct OmegaVal {
  Rat f1, f2;
};
OmegaVal omega_val(const Rat& alpha, const Rat& beta,
                   const std::array<Rat, 4>& gamma);

// Open cells of the tessellation of exponent space by the hyperplanes
// alpha - beta, alpha +- zeta, beta +- zeta in Z.  The fundamental domain
// 0 <= alpha +- zeta, beta + zeta <= 1 splits into an octahedron (square S
// between pyramids P1, P2) and two tetrahedra glued along vertex V, edges
// E1-E4 and faces F1-F4; the leading coefficient of an interpolation
// function depends only on the cell of its exponents.
enum class CellFamily { V, E1, E2, E3, E4, F1, F2, F3, F4, T, S, P1, P2 };
std::string family_name(CellFamily f);

// shift holds the coefficients of (1,0,0), (0,1,0), (1/2,1/2,1/2) moving the
// (possibly zeta-reflected) input into the fundamental domain.
struct CellId {
  CellFamily family;
  std::array<long long, 3> shift;
  bool reflected;
};
CellId classify_cell(const Rat& alpha, const Rat& beta, const Rat& zeta);

// Exponents of a biorthogonal parameter scaling t_r -> t_r p^{alpha_r},
// u_r -> u_r p^{gamma_r}, z_i -> z_i p^zeta.
struct ExponentVector {
  std::array<Rat, 4> alpha;
  std::array<Rat, 2> gamma;
  Rat zeta;
};

// Valuation of the nu-th summand in the connection-coefficient expansion of
// the n-variable biorthogonal function (auxiliary spectral parameter scaled
// by p^{nu_exp}): h1 |la| + h2 |nu| on top of a nu-independent prefactor.
// The coefficients do not depend on n.  Throws UndeterminedError when h2 = 0
// while the auxiliary interpolation cell lies inside the octahedron, where
// summand cancellation cannot be excluded.
struct BiorthoH {
  Rat h1, h2;
};
BiorthoH biortho_h(const ExponentVector& ev, const Rat& nu_exp, int n = 1);

// Valuation of the biorthogonal function itself per unit of |la|: prefactor
// plus dominant summand, i.e. pref + h1 + min(h2, 0).
Rat biortho_val(const ExponentVector& ev, const Rat& nu_exp, int n = 1);

// Numeric stand-in for val/lc of a p-series.  Fits the log-log slope on the
// ladder p_k = 1e-2 * 2^{-k}, k = 0..6, rounds it to the nearest multiple of
// 1/expected_den, and rescales the deepest sample for the coefficient.
// residual is the worst per-step slope deviation from the rounded value.
struct ProbeResult {
  Rat val;
  cplx lc;
  double residual;
};
ProbeResult probe_valuation(const std::function<cplx(double)>& f,
                            long long expected_den);

}  // namespace ellip
