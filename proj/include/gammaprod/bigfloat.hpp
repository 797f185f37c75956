#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "gammaprod/rational.hpp"

namespace gpf {

// Arbitrary-precision real number. Every value carries its precision and
// operations never silently downgrade: binary results use the larger of the
// two operand precisions.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
        BigFloat x(prec);
        mpfr_set_q(x.v_, q.get_mpq_t(), rnd);
        return x;
    }
    static BigFloat from(long n, mpfr_prec_t prec) {
        BigFloat x(prec);
        mpfr_set_si(x.v_, n, MPFR_RNDN);
        return x;
    }
    static BigFloat from(const BigInt& n, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
        BigFloat x(prec);
        mpfr_set_z(x.v_, n.get_mpz_t(), rnd);
        return x;
    }
    static BigFloat pi(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
        BigFloat x(prec);
        mpfr_const_pi(x.v_, rnd);
        return x;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Deterministic decimal rendering with the given significant digit count.
    std::string str(std::size_t digits) const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binop(mpfr_add, a, b); }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binop(mpfr_sub, a, b); }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binop(mpfr_mul, a, b); }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binop(mpfr_div, a, b); }
    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
    BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sqrt(const BigFloat& a) { return unop(mpfr_sqrt, a); }
    friend BigFloat exp(const BigFloat& a) { return unop(mpfr_exp, a); }
    friend BigFloat log(const BigFloat& a) { return unop(mpfr_log, a); }
    friend BigFloat sin(const BigFloat& a) { return unop(mpfr_sin, a); }
    friend BigFloat cos(const BigFloat& a) { return unop(mpfr_cos, a); }
    friend BigFloat sinh(const BigFloat& a) { return unop(mpfr_sinh, a); }
    friend BigFloat cosh(const BigFloat& a) { return unop(mpfr_cosh, a); }
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x) { return binop(mpfr_atan2, y, x); }
    friend BigFloat pow(const BigFloat& a, const BigFloat& b) { return binop(mpfr_pow, a, b); }
    friend BigFloat pow_ui(const BigFloat& a, unsigned long e) {
        BigFloat r(a.prec());
        mpfr_pow_ui(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    // 2^e as an exact value.
    static BigFloat two_to(long e, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    using Ternary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using Unary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
    static BigFloat binop(Ternary fn, const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat unop(Unary fn, const BigFloat& a) {
        BigFloat r(a.prec());
        fn(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

// Closed interval [lo, hi] with outward-rounded arithmetic. Just enough for
// certified sign decisions in bisections; not a general interval library.
struct FloatInterval {
    BigFloat lo, hi;

    FloatInterval(BigFloat l, BigFloat h) : lo(std::move(l)), hi(std::move(h)) {}
    static FloatInterval exact(const Rational& q, mpfr_prec_t prec) {
        return {BigFloat::from(q, prec, MPFR_RNDD), BigFloat::from(q, prec, MPFR_RNDU)};
    }
    static FloatInterval pi(mpfr_prec_t prec);

    mpfr_prec_t prec() const { return std::max(lo.prec(), hi.prec()); }
    // -1, +1 when the sign is certain, 0 when the enclosure straddles zero.
    int sign() const {
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        return 0;
    }

    FloatInterval operator+(const FloatInterval& o) const;
    FloatInterval operator-(const FloatInterval& o) const;
    FloatInterval operator*(const FloatInterval& o) const;
    FloatInterval operator-() const { return {-hi, -lo}; }
    FloatInterval pow_ui(unsigned long e) const;
    FloatInterval scaled(const Rational& q, mpfr_prec_t prec) const;
    // Valid enclosure of sin over the interval (Lipschitz bound around the midpoint).
    FloatInterval sin_enclosure() const;
    FloatInterval log_enclosure() const;  // requires lo > 0
};

}  // namespace gpf
