#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "gammaprod/errors.hpp"

namespace gpf {

// Exact arbitrary-precision rational scalar. mpq_class results are always
// canonical (lowest terms, positive denominator, 0 == 0/1) as long as values
// are built through its operators; rat() canonicalizes raw num/den pairs.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rat(long num, long den = 1) {
    GPF_CHECK(den != 0, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const BigInt& num, const BigInt& den) {
    GPF_CHECK(den != 0, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "3/4", "-12", "0". Throws domain_error on malformed input.
Rational parse_rational(const std::string& text);

// "num/den" when den != 1, plain integer otherwise.
std::string rational_str(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::optional<long> as_long(const Rational& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p()) return std::nullopt;
    return q.get_num().get_si();
}

inline BigInt int_pow(const BigInt& base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// base^e with e possibly negative (then base must be nonzero).
Rational rat_pow(const Rational& base, long e);

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline BigInt floor_rat(const Rational& q) {
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

// Distance from q to the nearest integer.
Rational dist_to_integer(const Rational& q);

// Distance from q to the nearest nonpositive integer (gamma pole set).
Rational dist_to_nonpositive_integer(const Rational& q);

inline bool is_nonpositive_integer(const Rational& q) {
    return is_integer(q) && q <= 0;
}

struct Interval {
    Rational lo;
    Rational hi;

    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        GPF_CHECK(lo <= hi, "interval with lo > hi");
    }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
};

}  // namespace gpf
