#pragma once

#include <variant>

#include "gammaprod/algebraic.hpp"

namespace gpf {

// The data sextuple lambda = (p, q, r; a, b; x). The argument x is either an
// exact rational or a real algebraic number with 0 < x < 1.
struct HyperData {
    long p = 0;
    long q = 0;
    long r = 0;
    Rational a;
    Rational b;
    std::variant<Rational, AlgebraicReal> x;

    bool x_is_rational() const { return std::holds_alternative<Rational>(x); }
    const Rational& x_rational() const { return std::get<Rational>(x); }
    AlgebraicReal x_algebraic() const {
        if (x_is_rational()) return AlgebraicReal::from_rational(x_rational());
        return std::get<AlgebraicReal>(x);
    }

    bool x_in_unit_interval() const {
        if (x_is_rational()) return x_rational() > 0 && x_rational() < 1;
        return in_open_unit_interval(std::get<AlgebraicReal>(x));
    }

    // South side of the parameter square: 0 < p < r, q = 0, 0 < x < 1.
    bool in_region_I() const { return 0 < p && p < r && q == 0 && x_in_unit_interval(); }
    // Image of the south side under reciprocity: p < 0 < r, q = 0, 0 < x < 1.
    bool in_region_J() const { return p < 0 && q == 0 && r > 0 && x_in_unit_interval(); }
};

// Exact zero test of a polynomial in x at lambda's argument.
inline bool vanishes_at_x(const UniPoly& g, const HyperData& lambda) {
    if (lambda.x_is_rational()) return g.eval(lambda.x_rational()) == 0;
    return alg_is_root(g, std::get<AlgebraicReal>(lambda.x));
}

}  // namespace gpf
