#pragma once

#include <vector>

#include "ellip/kernels.hpp"
#include "ellip/partitions.hpp"

namespace ellip {

struct EllParams {
  cplx q, t, p;
};

enum class CKind { C0, Cm, Cp };

// Theta-product symbols over the boxes of la:
//   C0: theta(q^{j-1} t^{1-i} x)
//   Cm: theta(q^{la_i - j} t^{la'_j - i} x)
//   Cp: theta(q^{la_i + j - 1} t^{2 - la'_j - i} x)
cplx c_sym(CKind k, const Partition& la, cplx x, const EllParams& P);
// Multiplicative in x: product over all listed arguments.
cplx c_sym(CKind k, const Partition& la, const std::vector<cplx>& xs,
           const EllParams& P);

// Same box exponents with theta replaced by (1 - .).
cplx c_tilde(CKind k, const Partition& la, cplx x, cplx q, cplx t);
cplx c_tilde(CKind k, const Partition& la, const std::vector<cplx>& xs, cplx q,
             cplx t);

// delta0(la; a | b_1..b_r) = prod_r C0(b_r) / C0(pq a / b_r).
// Multiplicative in b; the ArgSpec overload expands x y^{+-1} style arguments.
// Throws PoleError when a denominator theta factor is within 1e-12 of zero.
cplx delta0(const Partition& la, cplx a, const std::vector<cplx>& bs,
            const EllParams& P);
cplx delta0(const Partition& la, cplx a, const std::vector<ArgSpec>& bs,
            const EllParams& P);

// delta(la; a | b_1..b_r) =
//   delta0(la; a | b) * C0_{2 la^2}(pqa) / (Cm(pq, t) Cp(a, pqa/t)).
// Takes the flat b list as-is; callers expand +-1 arguments themselves.
cplx delta(const Partition& la, cplx a, const std::vector<cplx>& bs,
           const EllParams& P);

// q-hypergeometric normalization
//   delta_tilde(la; a; n) = Ct0_{2la^2}(aq) Ct0(t^n) /
//     (Ct0(aq/t^n) Ctm(q,t) Ctp(a, aq/t))
//     * (-1/(a^2 q^2 t^{n-1}))^{|la|} q^{-3n(la')} t^{5n(la)}.
cplx delta_tilde(const Partition& la, cplx a, int n, cplx q, cplx t);

}  // namespace ellip
