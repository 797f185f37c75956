#pragma once

#include <string>
#include <vector>

#include "gammaprod/bigfloat.hpp"
#include "gammaprod/hyperdata.hpp"

namespace gpf {

// Arbitrary-precision complex value; precision travels with the value and
// binary operations take the larger operand precision.
struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    static BigComplex real(const Rational& q, mpfr_prec_t prec) {
        return {BigFloat::from(q, prec), BigFloat(prec)};
    }
    static BigComplex real(const BigFloat& r) { return {r, BigFloat(r.prec())}; }

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
    BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
    BigComplex operator-() const { return {-re, -im}; }
    BigComplex operator*(const BigComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigComplex operator/(const BigComplex& o) const;
    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }

    BigFloat abs() const;
    std::string str(std::size_t digits) const;
};

BigComplex c_exp(const BigComplex& z);
BigComplex c_log(const BigComplex& z);  // principal branch
BigComplex c_sin(const BigComplex& z);
// base^expo for real base > 0
BigComplex c_pow(const BigFloat& base, const BigComplex& expo);

// Euler gamma by argument-shift recursion into the Stirling regime plus the
// asymptotic series with exact Bernoulli coefficients; relative error well
// below 2^-precision (a guard of ~64 bits is carried internally).
BigComplex gamma(const BigComplex& w, mpfr_prec_t precision);

// Gauss hypergeometric series, |z| < 1, c away from nonpositive integers;
// the tail is bounded by a geometric majorant before summation stops.
BigComplex hyp2f1(const BigComplex& a, const BigComplex& b, const BigComplex& c,
                  const BigComplex& z, mpfr_prec_t precision);

// lambda's argument as a float (isolating interval refined to ~precision).
BigFloat x_value(const HyperData& lambda, mpfr_prec_t precision);

// f(w; lambda) = 2F1(pw + a, qw + b; rw; x)
BigComplex f_val(const Rational& w, const HyperData& lambda, mpfr_prec_t precision);
// f~(w; lambda) = 2F1(pw + a + 1, qw + b + 1; rw + 1; x)
BigComplex f_tilde_val(const Rational& w, const HyperData& lambda, mpfr_prec_t precision);

// g and h (the companion solutions of the hypergeometric equation), each
// computed both from its defining substitution and from its transform
// representation through the dual / reciprocal data.
struct TwoRoutes {
    BigComplex direct;
    BigComplex via_transform;
    BigFloat relative_gap() const;
};
TwoRoutes g_val(const Rational& w, const HyperData& lambda, mpfr_prec_t precision);
TwoRoutes h_val(const Rational& w, const HyperData& lambda, mpfr_prec_t precision);

struct VerificationReport {
    std::string identity;
    std::vector<Rational> samples;
    std::vector<std::string> residuals;  // decimal strings, same order as samples
    std::string worst_residual;
    std::string constant;  // fitted or derived multiplicative constant
    long precision_bits = 0;
    bool pass = false;
};

// Relative-residual pass threshold at a given precision: 10^-(digits/2).
BigFloat residual_tolerance(mpfr_prec_t precision);

// Deterministic pole-aware sample points: 1/5 + k/7 for k = 0..6 plus
// `extra` seeded rationals in (0, 3), each shifted by steps of 3/100 until it
// clears every conflict (gamma arguments near nonpositive integers, sine
// arguments near integers), with conflicts described by affine forms
// mu * w + nu.
struct AffineForm {
    Rational mu, nu;
    bool sine = false;  // gamma-type (nonpositive integers) when false
};
std::vector<Rational> sample_points(const std::vector<AffineForm>& conflicts,
                                    unsigned seed, unsigned extra = 8);

// prod Gamma(w + u) / prod Gamma(w + v) over the given shift lists.
BigComplex gamma_quotient(const Rational& w, const std::vector<Rational>& numerator_shifts,
                          const std::vector<Rational>& denominator_shifts,
                          mpfr_prec_t precision);

struct GpfCertificate;  // certifier.hpp

// Residual verification of every identity attached to a certificate:
//   gpf-main        f(w; lambda)        = C  prod G(w + i/r) / prod G(w + v_i)
//   gpf-dual        f(w; lambda')       = C' prod G(w + i/r) / prod G(w + v'_i)
//   gpf-reciprocal  f(w; lambda-check)  = Cv prod G(w + i/(r-p)) / prod G(w + v-check_i)
//   gpf-sine-g      g(w; lambda) against the sine-product form, D derived from C'
//   gpf-h           h(w; lambda) against the dilated quotient with delta = p^p(r-p)^{r-p}r^-r
// Constants are fixed from the first sample; residuals are reported at the rest.
std::vector<VerificationReport> verify_gpf(const GpfCertificate& cert,
                                           const std::vector<Rational>& samples,
                                           mpfr_prec_t precision);

// Three-term relation f(w+1) = R f(w) + Q f~(w) with R, Q from the contiguous
// matrix; for certified data additionally the two-term ratio with d = 1.
std::vector<VerificationReport> verify_three_term(const HyperData& lambda,
                                                  const std::vector<Rational>& samples,
                                                  mpfr_prec_t precision,
                                                  const GpfCertificate* cert = nullptr);

// Samples appropriate for a certificate (union of all families' conflicts).
std::vector<Rational> certificate_samples(const GpfCertificate& cert, unsigned seed);

}  // namespace gpf
