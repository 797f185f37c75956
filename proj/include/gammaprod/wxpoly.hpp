#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gammaprod/bigfloat.hpp"
#include "gammaprod/unipoly.hpp"

namespace gpf {

// Polynomial in w whose coefficients are polynomials in x (dense in both
// variables, no trailing zeros in either).
class WxPoly {
  public:
    WxPoly() = default;
    explicit WxPoly(std::vector<UniPoly> wcoeffs) : c_(std::move(wcoeffs)) { trim(); }

    static WxPoly zero() { return {}; }
    static WxPoly constant(const Rational& q) { return from_x(UniPoly::constant(q)); }
    static WxPoly from_x(const UniPoly& xpoly);
    // c1*w + c0 with rational coefficients
    static WxPoly affine_w(const Rational& c1, const Rational& c0);
    static WxPoly x_monomial(std::size_t k) { return from_x(UniPoly::monomial(k, Rational(1))); }

    int deg_w() const { return static_cast<int>(c_.size()) - 1; }
    int deg_x() const;
    bool is_zero() const { return c_.empty(); }
    const std::vector<UniPoly>& wcoeffs() const { return c_; }
    const UniPoly& wcoeff(std::size_t k) const;
    const UniPoly& leading_w() const;

    bool operator==(const WxPoly& o) const { return c_ == o.c_; }
    bool operator!=(const WxPoly& o) const { return !(*this == o); }

    WxPoly operator-() const;
    WxPoly operator+(const WxPoly& o) const;
    WxPoly operator-(const WxPoly& o) const;
    WxPoly operator*(const WxPoly& o) const;
    WxPoly& operator+=(const WxPoly& o) { return *this = *this + o; }
    WxPoly& operator-=(const WxPoly& o) { return *this = *this - o; }
    WxPoly& operator*=(const WxPoly& o) { return *this = *this * o; }
    WxPoly scaled(const Rational& s) const;
    WxPoly mul_x(const UniPoly& xpoly) const;

    // Substitute a rational value for w; result is a polynomial in x.
    UniPoly eval_w(const Rational& w) const;
    // Substitute a rational value for x; result is a polynomial in w.
    UniPoly eval_x(const Rational& x) const;
    BigFloat eval_numeric(const Rational& w, const BigFloat& x) const;

    // Division by the monic factor (w + d); returns {quotient, remainder},
    // the remainder being a polynomial in x alone.
    std::pair<WxPoly, UniPoly> div_affine(const Rational& d) const;

    // Common power of x dividing every coefficient (poly must be nonzero).
    std::size_t x_valuation() const;
    WxPoly div_x_power(std::size_t k) const;
    bool divisible_by_xm1() const;
    WxPoly div_xm1() const;

    std::string str() const;

  private:
    void trim();
    std::vector<UniPoly> c_;
};

// Denominator kept in factored form: x^a * (x-1)^b * prod (w + d_i).
// Rational scalars are always folded into the numerator.
struct FactoredDen {
    int x_pow = 0;
    int xm1_pow = 0;
    std::map<Rational, int> affine;  // monic w + d, with multiplicity

    bool is_one() const { return x_pow == 0 && xm1_pow == 0 && affine.empty(); }
    bool w_free() const { return affine.empty(); }
    int deg_w() const;
    FactoredDen times(const FactoredDen& o) const;
    WxPoly expand() const;
    std::string str() const;
};

// Exact rational function in (w, x) with factored denominator. This is the
// workhorse representation for contiguous matrices: every denominator that
// ever appears is a product of x-powers, (x-1)-powers and affine factors
// in w with rational coefficients.
class WxFrac {
  public:
    WxFrac() = default;
    explicit WxFrac(WxPoly num) : num_(std::move(num)) {}
    WxFrac(WxPoly num, FactoredDen den) : num_(std::move(num)), den_(std::move(den)) {
        cancel_x_parts();
    }

    static WxFrac constant(const Rational& q) { return WxFrac(WxPoly::constant(q)); }

    const WxPoly& num() const { return num_; }
    const FactoredDen& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    WxFrac operator+(const WxFrac& o) const;
    WxFrac operator-(const WxFrac& o) const;
    WxFrac operator*(const WxFrac& o) const;
    WxFrac operator-() const { return WxFrac(-num_, den_); }
    WxFrac& operator+=(const WxFrac& o) { return *this = *this + o; }

    WxFrac scaled(const Rational& s) const { return WxFrac(num_.scaled(s), den_); }

    // Multiply by the monic affine (w + d); cancels against the denominator
    // when possible.
    WxFrac mul_affine(const Rational& d) const;
    // Divide by scalar * (w + d).
    WxFrac div_affine(const Rational& scalar, const Rational& d) const;
    WxFrac mul_x_power(int k) const;   // k may be negative
    WxFrac mul_xm1_power(int k) const;

    // Cancels every denominator affine factor that divides the numerator
    // exactly, and x/(x-1) powers against the numerator valuations.
    WxFrac reduced() const;

    bool equals(const WxFrac& o) const;
    // True when this equals num/(x^xpow (x-1)^mpow) given as a numerator and
    // explicit x-power denominators.
    bool equals_poly_over_x(const WxPoly& num, int xpow, int mpow) const;

    BigFloat eval_numeric(const Rational& w, const BigFloat& x) const;

    std::string str() const;

  private:
    void cancel_x_parts();
    WxPoly num_;
    FactoredDen den_;
};

struct Mat2 {
    WxFrac a11, a12, a21, a22;

    Mat2 operator*(const Mat2& o) const;
    WxFrac det() const { return a11 * a22 - a12 * a21; }
};

// Ratio of two univariate polynomials in x, used for the coefficients of
// 1/w-expansions of matrix entries.
struct XRat {
    UniPoly num;
    UniPoly den;
    bool equals(const XRat& o) const { return (num * o.den) == (o.num * den); }
};

// First `count` coefficients of the expansion of f in descending powers of w:
// f = c0 + c1/w + c2/w^2 + ...  (requires deg_w num <= deg_w den).
std::vector<XRat> asymptotic_coeffs(const WxFrac& f, unsigned count);

}  // namespace gpf
