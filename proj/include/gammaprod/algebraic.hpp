#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gammaprod/unipoly.hpp"

namespace gpf {

// A real algebraic number: a squarefree integer-primitive defining polynomial
// together with an isolating interval. When the number is rational, `exact`
// is set, the defining polynomial is the linear minimal polynomial and the
// interval is degenerate.
struct AlgebraicReal {
    UniPoly defining;
    Rational lo;
    Rational hi;
    std::optional<Rational> exact;

    bool is_rational() const { return exact.has_value(); }
    Rational mid() const { return exact ? *exact : (lo + hi) / 2; }
    static AlgebraicReal from_rational(const Rational& q);
};

// Number of distinct real roots of f in the half-open interval (lo, hi].
// Repeated factors of f are removed first; f must be nonzero.
unsigned sturm_count(const UniPoly& f, const Interval& iv);

// Isolates the unique root of f in iv (pre: sturm_count(f, iv) == 1) and
// refines the interval to width <= 2^-32. Collapses to an exact rational
// when the root is recognized as one.
AlgebraicReal isolate_root(const UniPoly& f, const Interval& iv);

// Shrinks the isolating interval until its width is <= target.
void refine(AlgebraicReal& a, const Rational& target_width);

// Decides g(a) == 0 exactly: h := gcd(g, a.defining) followed by a Sturm
// count of h on the isolating interval.
bool alg_is_root(const UniPoly& g, const AlgebraicReal& a);

// Exact sign of g(a): -1, 0, +1.
int alg_sign(const UniPoly& g, const AlgebraicReal& a);

// Exact three-way comparison of a with a rational: -1, 0, +1.
int alg_cmp(const AlgebraicReal& a, const Rational& q);

bool in_open_unit_interval(const AlgebraicReal& a);

enum class Irreducibility { Irreducible, Composite, Unknown };

struct IrredResult {
    Irreducibility verdict = Irreducibility::Unknown;
    UniPoly witness;     // an exact factor when verdict == Composite
    std::string method;  // how the verdict was certified
};

// Sound three-valued irreducibility test over Q for integer-content-cleared f:
// rational-root exclusion settles degree <= 3; factor-degree patterns modulo
// at least three good primes settle higher degrees; otherwise Unknown.
IrredResult irreducibility_certify(const UniPoly& f);

}  // namespace gpf
