#pragma once

#include <optional>
#include <vector>

#include "gammaprod/algebraic.hpp"
#include "gammaprod/bigfloat.hpp"

namespace gpf {

// phi_s(z) = (s-1)^{s-1} z^s - s^s (1-z)^{s-1}
UniPoly phi_poly(long s);
// psi_s(z) = z^{s-1} (z + s) - (s-1)^{s-1}; the substitution z -> s/(w+s)
// carries one equation to the other.
UniPoly psi_poly(long s);

// psi_s with the trivial double root at z = 1-s removed (odd s); psi_s
// itself when s is even.
UniPoly nontrivial_factor(long s);

// The unique positive root of psi_s.
AlgebraicReal y_of_s(long s);
// The unique root of phi_s in (0, 1), represented through the transported
// nontrivial factor (so its defining polynomial is the relevant one and the
// rational case s = 3 collapses to 3/4 exactly).
AlgebraicReal x_of_s(long s);

long least_prime_factor(long n);

// Certified rational enclosure of delta(s) = log(p_s)(s-1)/(1 + log(s-1)).
struct DeltaBound {
    Rational lo;
    Rational hi;
};
DeltaBound delta_bound(long s);
// The parity proxies: log 3 for even s, log 2 for odd s.
DeltaBound delta_parity_bound(long s);

// The unique solution t = c(s) in (0,1) of t ((s+t)/(s-1))^{s-1} = 1,
// located by directed-rounding bisection; relevant to the negative root
// -s - c(s) of psi_s for even s.
BigFloat c_of_s(long s, mpfr_prec_t precision);

struct ComplexPair {
    BigFloat theta;  // argument, in (2 pi j / s, 2 pi j / (s-1))
    BigFloat r;      // modulus
    BigFloat rho;    // |s + root|
};

struct RootChecks {
    bool ordering_chain = false;     // r0 < r1 < ... < rm < s-1, rho decreasing > 1
    bool modulus_bound = false;      // every root but the negative one has |.| < s-1
    bool negative_bracket = false;   // even s: negative root in (-s-1, 1-s)
    bool rho_floor = false;          // rho_m lower bounds
    bool census = false;             // reconstructed polynomial matches psi_s
    bool theta_brackets = false;     // theta_j inside its window
    bool r0_above_one = false;       // r(0) > 1 for s > 3
    bool r0_above_R = true;          // r(0) > (s-1)/(1 + (1+log(s-1))/(s-1)), s >= 26
    bool all() const {
        return ordering_chain && modulus_bound && negative_bracket && rho_floor &&
               census && theta_brackets && r0_above_one && r0_above_R;
    }
};

struct RootReport {
    long s = 0;
    mpfr_prec_t precision = 0;
    AlgebraicReal positive_root;
    std::optional<AlgebraicReal> negative_root;  // even s only
    bool trivial_double_root = false;            // odd s: z = 1-s, double
    std::vector<ComplexPair> pairs;              // j = 1..floor(s/2)-1
    RootChecks checks;
};

// Real/complex root localization of psi_s through the radial/angular
// decomposition; every reported invariant is decided with certified
// (outward-rounded) interval evaluations or exact algebraic comparisons.
RootReport localize_roots(long s, mpfr_prec_t precision);

struct IntegerInvariants {
    long s = 0;
    int d = 0;  // degree of the nontrivial factor
    BigInt M;   // (-1)^d P(-s)
    BigInt N;   // (-1)^d P(0)
    std::optional<BigInt> n;  // (s-1)^d / N, absent for the special s = 2 record
};
IntegerInvariants integer_invariants(long s);

struct DegreeReport {
    long s = 0;
    long p_s = 0;  // least prime factor of s-1
    DeltaBound delta;
    std::vector<int> factor_degrees;  // of the nontrivial part (certified irreducible)
    Irreducibility factor_verdict = Irreducibility::Unknown;
    std::optional<IntegerInvariants> invariants;
};
DegreeReport degree_report(long s);

struct DegreeClassification {
    std::vector<long> pre_refinement;  // delta-bound survivors
    std::vector<long> refined;         // after actual factor degrees
};
DegreeClassification degree_classify(int max_deg);

}  // namespace gpf
