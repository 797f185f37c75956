#pragma once

#include <string>
#include <vector>

#include "gammaprod/bigfloat.hpp"
#include "gammaprod/hyperdata.hpp"

namespace gpf {

enum class Classification { Elementary, NonElementaryCandidate, Excluded };

// For lambda in the south-side region: elementary iff b is zero or a negative
// integer; candidate iff p == r mod 2 and b == 1/2; excluded otherwise.
Classification classify(const HyperData& lambda);

// chi(j, k; s) = -(1/s) (j + (s-1)(k - 1/2))
Rational chi_param(long j, long k, long s);

// The decision procedure for a dual pair of non-elementary solutions with
// parameters (p, s, j, j'), j + j' = s - 2, r = p s:
//   (1) p (s-1) even,
//   (2) x the unique (0,1)-root of (s-1)^{s-1} x^s = s^s (1-x)^{s-1},
//   (3) F_k(chi(j,k;s); 1/2-k; x) * F_{k'}(chi(j',k';s); 1/2-k'; x) = 0
//       for every k + k' = r - 1,
// decided entirely in exact arithmetic.
bool solution_criterion(long p, long s, long j, long j_prime);

struct CriterionOutcome {
    bool ok = false;
    std::string failure;  // first failed condition, empty when ok
};
CriterionOutcome solution_criterion_explain(long p, long s, long j, long j_prime);

// (p, 0, ps; j/s, 1/2; x_of_s(s))
HyperData make_solution_data(long p, long s, long j);

// Data transforms. Duality fixes the region; reciprocity maps it to the
// p < 0 half-line with x -> 1 - x.
HyperData dual(const HyperData& lambda);
HyperData reciprocal(const HyperData& lambda);
HyperData multiple(const HyperData& lambda, long k);
enum class SquareSymmetry { Swap, Euler };
HyperData square_symmetry(const HyperData& lambda, SquareSymmetry kind);

// v'_i = 1 - 2/r - v*_i
std::vector<Rational> dual_v(const std::vector<Rational>& v_star, long r);
// v-check_i = v_i - (1/2 - a)/(r - p), over the first r-p arranged entries
std::vector<Rational> reciprocal_v(const std::vector<Rational>& v_arranged,
                                   const HyperData& lambda);
// {(v_i + m)/k : m in [k]}
std::vector<Rational> multiple_v(const std::vector<Rational>& v, long k);

struct VSets {
    std::vector<Rational> v;           // sorted ascending
    std::vector<Rational> v_arranged;  // the p entries (i+a)/p moved to the back
    std::vector<Rational> v_star;      // complement within the candidate multiset
};

// Factors the degree-r polynomial P(w; lambda) over the candidate root set
// {(i+a)/p} u {(j-a)/(r-p)} u {(j-1/2)/r} by exact trial division at
// lambda's algebraic argument, then arranges v for the reciprocity step.
VSets assemble_v(const HyperData& lambda);

struct GpfCertificate {
    HyperData lambda;
    long s = 0, j = 0, j_prime = 0;
    std::vector<Rational> v, v_arranged, v_star, v_prime, v_check;
    Rational sum_check;  // (r-1)/2
    Rational delta;      // p^p (r-p)^{r-p} r^{-r}, exact
    bool parity_ok = false;
    bool r_minus_p_even = false;
    bool primitive = true;
    long multiple_of_p = 0;  // smallest certified divisor of p (== p when primitive)
    long precision_bits = 0;
    std::string C, C_prime, C_check;  // decimal strings at precision_bits
    unsigned seed = 0;
};

// Runs the criterion, assembles the v-sets and transforms, and determines the
// numeric constants at the given precision.
GpfCertificate build_certificate(long p, long s, long j, mpfr_prec_t precision,
                                 unsigned seed = 1);

// All certified (p, s, j, j') over 2 <= s <= s_max, 1 <= p <= p_max, ordered
// by (s, p, j); every hit is flagged primitive or tied to the smallest
// certified divisor of p.
std::vector<GpfCertificate> search_solutions(long s_max, long p_max,
                                             mpfr_prec_t precision, unsigned seed = 1);

}  // namespace gpf
