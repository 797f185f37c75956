#include "gammaprod/bigfloat.hpp"

#include <cstdio>

namespace gpf {

std::string BigFloat::str(std::size_t digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", static_cast<int>(digits ? digits - 1 : 0), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

FloatInterval FloatInterval::pi(mpfr_prec_t prec) {
    return {BigFloat::pi(prec, MPFR_RNDD), BigFloat::pi(prec, MPFR_RNDU)};
}

FloatInterval FloatInterval::operator+(const FloatInterval& o) const {
    const mpfr_prec_t p = std::max(prec(), o.prec());
    BigFloat l(p), h(p);
    mpfr_add(l.raw(), lo.raw(), o.lo.raw(), MPFR_RNDD);
    mpfr_add(h.raw(), hi.raw(), o.hi.raw(), MPFR_RNDU);
    return {l, h};
}

FloatInterval FloatInterval::operator-(const FloatInterval& o) const {
    const mpfr_prec_t p = std::max(prec(), o.prec());
    BigFloat l(p), h(p);
    mpfr_sub(l.raw(), lo.raw(), o.hi.raw(), MPFR_RNDD);
    mpfr_sub(h.raw(), hi.raw(), o.lo.raw(), MPFR_RNDU);
    return {l, h};
}

FloatInterval FloatInterval::operator*(const FloatInterval& o) const {
    const mpfr_prec_t p = std::max(prec(), o.prec());
    mpfr_t cand[4];
    for (auto& c : cand) mpfr_init2(c, p);
    BigFloat l(p), h(p);
    mpfr_mul(cand[0], lo.raw(), o.lo.raw(), MPFR_RNDD);
    mpfr_mul(cand[1], lo.raw(), o.hi.raw(), MPFR_RNDD);
    mpfr_mul(cand[2], hi.raw(), o.lo.raw(), MPFR_RNDD);
    mpfr_mul(cand[3], hi.raw(), o.hi.raw(), MPFR_RNDD);
    mpfr_min(l.raw(), cand[0], cand[1], MPFR_RNDD);
    mpfr_min(l.raw(), l.raw(), cand[2], MPFR_RNDD);
    mpfr_min(l.raw(), l.raw(), cand[3], MPFR_RNDD);
    mpfr_mul(cand[0], lo.raw(), o.lo.raw(), MPFR_RNDU);
    mpfr_mul(cand[1], lo.raw(), o.hi.raw(), MPFR_RNDU);
    mpfr_mul(cand[2], hi.raw(), o.lo.raw(), MPFR_RNDU);
    mpfr_mul(cand[3], hi.raw(), o.hi.raw(), MPFR_RNDU);
    mpfr_max(h.raw(), cand[0], cand[1], MPFR_RNDU);
    mpfr_max(h.raw(), h.raw(), cand[2], MPFR_RNDU);
    mpfr_max(h.raw(), h.raw(), cand[3], MPFR_RNDU);
    for (auto& c : cand) mpfr_clear(c);
    return {l, h};
}

FloatInterval FloatInterval::pow_ui(unsigned long e) const {
    FloatInterval acc = exact(Rational(1), prec());
    FloatInterval base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return acc;
}

FloatInterval FloatInterval::scaled(const Rational& q, mpfr_prec_t p) const {
    return *this * exact(q, p);
}

FloatInterval FloatInterval::sin_enclosure() const {
    const mpfr_prec_t p = prec();
    BigFloat mid(p), rad(p);
    mpfr_add(mid.raw(), lo.raw(), hi.raw(), MPFR_RNDN);
    mpfr_div_ui(mid.raw(), mid.raw(), 2, MPFR_RNDN);
    mpfr_sub(rad.raw(), hi.raw(), lo.raw(), MPFR_RNDU);
    // |sin'| <= 1, plus rounding slack for the midpoint sine itself
    BigFloat s(p);
    mpfr_sin(s.raw(), mid.raw(), MPFR_RNDN);
    BigFloat slack = rad + BigFloat::two_to(2 - static_cast<long>(p), p);
    BigFloat l(p), h(p);
    mpfr_sub(l.raw(), s.raw(), slack.raw(), MPFR_RNDD);
    mpfr_add(h.raw(), s.raw(), slack.raw(), MPFR_RNDU);
    return {l, h};
}

FloatInterval FloatInterval::log_enclosure() const {
    GPF_CHECK(lo.sign() > 0, "log of an interval touching zero");
    const mpfr_prec_t p = prec();
    BigFloat l(p), h(p);
    mpfr_log(l.raw(), lo.raw(), MPFR_RNDD);
    mpfr_log(h.raw(), hi.raw(), MPFR_RNDU);
    return {l, h};
}

}  // namespace gpf
