#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gammaprod/rational.hpp"

namespace gpf {

// Dense univariate polynomial over Rational, lowest degree first.
// The zero polynomial is the empty coefficient list; degree() is then -1.
class UniPoly {
  public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& q);
    static UniPoly monomial(std::size_t k, const Rational& coeff);
    // c1*z + c0
    static UniPoly affine(const Rational& c1, const Rational& c0);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](std::size_t k) const;
    const Rational& leading() const;
    // Index of the lowest nonzero coefficient (z-adic valuation); poly must be nonzero.
    std::size_t valuation() const;

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    UniPoly scaled(const Rational& s) const;
    UniPoly pow(unsigned e) const;
    UniPoly derivative() const;
    // Multiply by z^k.
    UniPoly shifted_up(std::size_t k) const;

    Rational eval(const Rational& at) const;

    // Quotient and remainder over the field of rationals: *this = q*g + r.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& g) const;
    // Exact division; throws internal_error when a remainder is left.
    UniPoly exact_div(const UniPoly& g) const;

    UniPoly monic() const;
    // Largest c > 0 with (*this)/c integer-coefficient and content-free;
    // sign carried so primitive() has positive leading coefficient.
    Rational content() const;
    UniPoly primitive() const;

    std::string str(const std::string& var = "z") const;

  private:
    void trim();
    std::vector<Rational> c_;
};

// Monic greatest common divisor over the rationals; gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& f, const UniPoly& g);

// f divided by its gcd with f'; primitive with positive leading coefficient.
UniPoly squarefree_part(const UniPoly& f);

// Pochhammer-style product prod_{t=0}^{k-1} (f + t) for polynomial f.
UniPoly rising_product(const UniPoly& f, unsigned k);

}  // namespace gpf
