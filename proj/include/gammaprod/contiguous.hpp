#pragma once

#include <optional>
#include <vector>

#include "gammaprod/hyperdata.hpp"
#include "gammaprod/wxpoly.hpp"

namespace gpf {

// Affine expression c*w + d with rational coefficients (c may be zero).
struct WAffine {
    Rational c;
    Rational d;

    WAffine shifted(long t) const { return {c, d + Rational(t)}; }
    WxPoly poly() const { return WxPoly::affine_w(c, d); }
    bool identically_zero() const { return c == 0 && d == 0; }
};

// Hypergeometric parameter triple (alpha, beta, gamma), entries affine in w.
struct AffineTriple {
    WAffine alpha, beta, gamma;
};

// The argument z: symbolic (the indeterminate x) or a fixed rational value.
struct ZArg {
    std::optional<Rational> value;  // nullopt == symbolic

    static ZArg symbolic() { return {std::nullopt}; }
    static ZArg at(const Rational& v) { return {v}; }
    bool is_symbolic() const { return !value.has_value(); }
};

// Integer shift vector (p, 0, r) realized by step paths over {1, 3}.
struct ShiftVector {
    long p = 0;
    long r = 0;
};

enum class BasicKind { A1, A3, A13 };

// One contiguous basic matrix, by the explicit closed formulas. Throws
// domain_error when a denominator vanishes identically (e.g. gamma == 0 as
// an expression, or numeric z in {0, 1} where z / z-1 divides).
Mat2 basic_matrix(BasicKind kind, const AffineTriple& a, const ZArg& z);

// Product of basic matrices along `path` (entries 1 or 3), left-extending:
// result = A_{i_k}(a + e_{i_1} + ... + e_{i_{k-1}}) ... A_{i_1}(a).
// The path's step counts must realize the shift vector.
Mat2 contig_product(const AffineTriple& a, const ShiftVector& shift,
                    const std::vector<int>& path, const ZArg& z);

// The contiguous matrix A(w; lambda) for integral lambda = (p,0,r; a,1/2; x)
// with 1 <= p <= r, built along the canonical path (p interleaved (3,1)
// pairs, then r-p single 3-steps). x stays symbolic; zero tests specialize.
Mat2 contig_matrix(const HyperData& lambda);

// The four polynomials phi_ij extracted from A(w; lambda) by dividing out
// the Pochhammer prefactors. Each is a true polynomial in w; the leftover
// denominator is a pure power of x (and possibly x-1), never w-dependent.
struct PhiPolys {
    WxFrac phi11, phi12, phi21, phi22;
};
PhiPolys extract_phi(const Mat2& A, const HyperData& lambda);

// (1,1) and (1,2) entries: the coefficients of the three-term relation
// f(w+1) = R f(w) + Q f~(w).
struct RQ {
    WxFrac R, Q;
};
RQ extract_rq(const Mat2& A);

// True iff Q(w; lambda) vanishes identically once x is specialized to
// lambda's argument.
bool q_vanishes(const Mat2& A, const HyperData& lambda);

// Y(z; p) = p^p (r-p)^{r-p} z^r - r^r (1-z)^{r-p}; its vanishing at x is the
// leading-asymptotics obstruction.
struct LeadingY {
    UniPoly poly;                   // in z
    std::optional<Rational> value;  // set when lambda's x is rational
    bool vanishes_at_x;
};
UniPoly leading_y_poly(const ShiftVector& shift);
LeadingY leading_y(const HyperData& lambda);

// Pochhammer prefactor (c*w + d)_k kept factored: scalar * prod (w + root).
struct PochFactors {
    Rational scalar;
    std::vector<Rational> monic_roots;  // roots d_i of the monic factors w + d_i
};
PochFactors poch_factors(const Rational& c, const Rational& d, unsigned k);

}  // namespace gpf
