#include "gammaprod/rational.hpp"

namespace gpf {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw domain_error("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            BigInt n(text);
            return Rational(n);
        }
        BigInt n(text.substr(0, slash));
        BigInt d(text.substr(slash + 1));
        if (d == 0) throw domain_error("rational literal with zero denominator: " + text);
        return rat(n, d);
    } catch (const std::invalid_argument&) {
        throw domain_error("malformed rational literal: " + text);
    }
}

std::string rational_str(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        GPF_CHECK(base != 0, "zero raised to a negative power");
        Rational inv = 1 / base;
        return rat_pow(inv, -e);
    }
    Rational out;
    mpz_pow_ui(out.get_num().get_mpz_t(), base.get_num().get_mpz_t(),
               static_cast<unsigned long>(e));
    mpz_pow_ui(out.get_den().get_mpz_t(), base.get_den().get_mpz_t(),
               static_cast<unsigned long>(e));
    // num/den already coprime, so powers are too.
    return out;
}

Rational dist_to_integer(const Rational& q) {
    const BigInt f = floor_rat(q);
    const Rational lo = q - Rational(f);
    const Rational hi = Rational(f + 1) - q;
    return lo < hi ? lo : hi;
}

Rational dist_to_nonpositive_integer(const Rational& q) {
    if (q >= 0) return q;  // nearest nonpositive integer to q >= 0 is 0
    return dist_to_integer(q);
}

}  // namespace gpf
