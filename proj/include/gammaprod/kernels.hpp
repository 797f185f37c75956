#pragma once

#include "gammaprod/hyperdata.hpp"
#include "gammaprod/wxpoly.hpp"

namespace gpf {

// (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned k);
// (c*w + d)_k as a polynomial in w.
UniPoly pochhammer_affine(const Rational& c, const Rational& d, unsigned k);

Rational binomial(unsigned n, unsigned k);

// The renormalized terminating hypergeometric polynomial
//   sum_{j=0}^{k} (-1)^j C(k,j) (beta)_j (gamma+j)_{k-j} z^j,
// equal to (gamma)_k * 2F1(-k, beta; gamma; z) away from gamma poles.
UniPoly terminating_sum(unsigned k, const Rational& beta, const Rational& gamma);

// Identically-zero criterion: beta, gamma integers with 0 <= -beta <= -gamma <= k-1.
// The verdict is cross-checked against the constructed polynomial.
bool terminating_sum_vanishes(unsigned k, const Rational& beta, const Rational& gamma);

// Truncated hypergeometric products for integral lambda = (p,0,r; a,1/2; x),
// 1 <= p < r, as polynomials in w whose coefficients are polynomials in x:
//   Phi = (rw)_{r-1} < F(a*(w); z) F(v - a*(w+1); z) >_{r-1}
//   P   = (rw)_r     < F(a*(w); z) F(1 - a*(w+1); z) >_{r-1}
// with a*(w) = ((r-p)w - a, rw - 1/2; rw). Polynomiality in w is asserted
// after the clearing factor is applied.
WxPoly phi_product(const HyperData& lambda);
WxPoly p_product(const HyperData& lambda);

// The same two polynomials computed through Euler-transformed series; must
// agree with phi_product / p_product coefficient by coefficient.
WxPoly phi_product_euler(const HyperData& lambda);
WxPoly p_product_euler(const HyperData& lambda);

// True iff Phi(w; lambda) == 0 identically once x is specialized.
bool phi_vanishes(const HyperData& lambda);

// Special evaluation points where both series terminate:
//   Xi  : w = -(j - a)/(r - p),  j in [r-p]   (needs r*xi not an integer)
//   Eta : w = -(j - 1/2)/r,      j in [r]
//   Zeta: w = -(a + i)/p,        i in [p]     (needs r*zeta not an integer)
enum class SpecialKind { Xi, Eta, Zeta };

Rational special_point(const HyperData& lambda, SpecialKind kind, unsigned index);

// Values of Phi and P at the special point, both by the terminating-sum
// closed form and by direct substitution into the truncated products.
// All four are polynomials in x; closed and direct must agree exactly.
struct SpecialValues {
    UniPoly phi_closed, phi_direct;
    UniPoly p_closed, p_direct;
};
SpecialValues eval_special(const HyperData& lambda, SpecialKind kind, unsigned index);

}  // namespace gpf
