#include "gammaprod/unipoly.hpp"

#include <sstream>

namespace gpf {

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& q) {
    UniPoly p;
    if (q != 0) p.c_ = {q};
    return p;
}

UniPoly UniPoly::monomial(std::size_t k, const Rational& coeff) {
    UniPoly p;
    if (coeff != 0) {
        p.c_.assign(k + 1, Rational(0));
        p.c_[k] = coeff;
    }
    return p;
}

UniPoly UniPoly::affine(const Rational& c1, const Rational& c0) {
    UniPoly p;
    p.c_ = {c0, c1};
    p.trim();
    return p;
}

const Rational& UniPoly::operator[](std::size_t k) const {
    static const Rational kZero(0);
    return k < c_.size() ? c_[k] : kZero;
}

const Rational& UniPoly::leading() const {
    GPF_CHECK(!c_.empty(), "leading coefficient of the zero polynomial");
    return c_.back();
}

std::size_t UniPoly::valuation() const {
    GPF_CHECK(!c_.empty(), "valuation of the zero polynomial");
    std::size_t v = 0;
    while (c_[v] == 0) ++v;
    return v;
}

UniPoly UniPoly::operator-() const {
    UniPoly out(*this);
    for (auto& q : out.c_) q = -q;
    return out;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly out;
    out.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = (*this)[i] + o[i];
    out.trim();
    return out;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    UniPoly out;
    out.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            out.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    out.trim();
    return out;
}

UniPoly UniPoly::scaled(const Rational& s) const {
    if (s == 0) return {};
    UniPoly out(*this);
    for (auto& q : out.c_) q *= s;
    return out;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly out = constant(Rational(1));
    UniPoly base(*this);
    while (e) {
        if (e & 1u) out *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return out;
}

UniPoly UniPoly::derivative() const {
    UniPoly out;
    if (c_.size() <= 1) return out;
    out.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out.c_[i - 1] = c_[i] * Rational(static_cast<long>(i));
    out.trim();
    return out;
}

UniPoly UniPoly::shifted_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    UniPoly out;
    out.c_.assign(k, Rational(0));
    out.c_.insert(out.c_.end(), c_.begin(), c_.end());
    return out;
}

Rational UniPoly::eval(const Rational& at) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& g) const {
    GPF_CHECK(!g.is_zero(), "polynomial division by zero");
    UniPoly r(*this);
    UniPoly q;
    const int dg = g.degree();
    if (r.degree() >= dg) q.c_.assign(static_cast<std::size_t>(r.degree() - dg) + 1, Rational(0));
    const Rational& lg = g.leading();
    while (!r.is_zero() && r.degree() >= dg) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - dg);
        const Rational f = r.leading() / lg;
        q.c_[shift] = f;
        // r -= f * z^shift * g, done in place
        for (std::size_t i = 0; i < g.c_.size(); ++i) r.c_[shift + i] -= f * g.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

UniPoly UniPoly::exact_div(const UniPoly& g) const {
    auto [q, r] = divrem(g);
    GPF_ASSERT(r.is_zero(), "polynomial division expected to be exact left a remainder");
    return q;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    return scaled(1 / leading());
}

Rational UniPoly::content() const {
    if (is_zero()) return Rational(0);
    BigInt den_lcm(1);
    for (const auto& q : c_)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    BigInt num_gcd(0);
    for (const auto& q : c_) {
        BigInt n = q.get_num() * (den_lcm / q.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rational c = rat(num_gcd, den_lcm);
    return leading() < 0 ? Rational(-c) : c;
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return {};
    return scaled(1 / content());
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& q = c_[static_cast<std::size_t>(k)];
        if (q == 0) continue;
        if (!first) os << (q > 0 ? " + " : " - ");
        else if (q < 0) os << "-";
        first = false;
        const Rational aq = rat_abs(q);
        if (k == 0 || aq != 1) os << rational_str(aq);
        if (k > 0) {
            if (aq != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

UniPoly poly_gcd(const UniPoly& f, const UniPoly& g) {
    UniPoly a = f, b = g;
    while (!b.is_zero()) {
        UniPoly r = a.divrem(b).second;
        // Normalizing each remainder keeps coefficient growth in check.
        if (!r.is_zero()) r = r.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

UniPoly squarefree_part(const UniPoly& f) {
    GPF_CHECK(!f.is_zero(), "squarefree part of the zero polynomial");
    if (f.degree() == 0) return UniPoly::constant(Rational(1));
    const UniPoly g = poly_gcd(f, f.derivative());
    return f.exact_div(g).primitive();
}

UniPoly rising_product(const UniPoly& f, unsigned k) {
    UniPoly out = UniPoly::constant(Rational(1));
    for (unsigned t = 0; t < k; ++t) out *= f + UniPoly::constant(Rational(static_cast<long>(t)));
    return out;
}

}  // namespace gpf
