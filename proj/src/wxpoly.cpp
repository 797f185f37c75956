#include "gammaprod/wxpoly.hpp"

#include <sstream>

namespace gpf {

void WxPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

WxPoly WxPoly::from_x(const UniPoly& xpoly) {
    WxPoly p;
    if (!xpoly.is_zero()) p.c_ = {xpoly};
    return p;
}

WxPoly WxPoly::affine_w(const Rational& c1, const Rational& c0) {
    WxPoly p;
    p.c_ = {UniPoly::constant(c0), UniPoly::constant(c1)};
    p.trim();
    return p;
}

int WxPoly::deg_x() const {
    int d = -1;
    for (const auto& c : c_) d = std::max(d, c.degree());
    return d;
}

const UniPoly& WxPoly::wcoeff(std::size_t k) const {
    static const UniPoly kZero;
    return k < c_.size() ? c_[k] : kZero;
}

const UniPoly& WxPoly::leading_w() const {
    GPF_CHECK(!c_.empty(), "leading coefficient of the zero polynomial");
    return c_.back();
}

WxPoly WxPoly::operator-() const {
    WxPoly out(*this);
    for (auto& c : out.c_) c = -c;
    return out;
}

WxPoly WxPoly::operator+(const WxPoly& o) const {
    WxPoly out;
    out.c_.resize(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = wcoeff(i) + o.wcoeff(i);
    out.trim();
    return out;
}

WxPoly WxPoly::operator-(const WxPoly& o) const { return *this + (-o); }

WxPoly WxPoly::operator*(const WxPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    WxPoly out;
    out.c_.assign(c_.size() + o.c_.size() - 1, UniPoly());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) out.c_[i + j] += c_[i] * o.c_[j];
    }
    out.trim();
    return out;
}

WxPoly WxPoly::scaled(const Rational& s) const {
    if (s == 0) return {};
    WxPoly out(*this);
    for (auto& c : out.c_) c = c.scaled(s);
    return out;
}

WxPoly WxPoly::mul_x(const UniPoly& xpoly) const {
    WxPoly out(*this);
    for (auto& c : out.c_) c = c * xpoly;
    out.trim();
    return out;
}

UniPoly WxPoly::eval_w(const Rational& w) const {
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc.scaled(w) + *it;
    return acc;
}

UniPoly WxPoly::eval_x(const Rational& x) const {
    std::vector<Rational> coeffs;
    coeffs.reserve(c_.size());
    for (const auto& c : c_) coeffs.push_back(c.eval(x));
    return UniPoly(std::move(coeffs));
}

BigFloat WxPoly::eval_numeric(const Rational& w, const BigFloat& x) const {
    const mpfr_prec_t p = x.prec();
    BigFloat acc(p);
    const BigFloat wf = BigFloat::from(w, p);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        // Horner in w; inner Horner in x
        BigFloat inner(p);
        for (auto jt = it->coeffs().rbegin(); jt != it->coeffs().rend(); ++jt)
            inner = inner * x + BigFloat::from(*jt, p);
        acc = acc * wf + inner;
    }
    return acc;
}

std::pair<WxPoly, UniPoly> WxPoly::div_affine(const Rational& d) const {
    if (is_zero()) return {WxPoly(), UniPoly()};
    // synthetic division by (w + d)
    std::vector<UniPoly> q(c_.size() > 1 ? c_.size() - 1 : 0);
    UniPoly carry;  // running remainder
    for (std::size_t i = c_.size(); i-- > 0;) {
        UniPoly cur = c_[i] - carry.scaled(d);
        if (i == 0) return {WxPoly(std::move(q)), cur};
        q[i - 1] = cur;
        carry = std::move(cur);
    }
    return {WxPoly(std::move(q)), carry};  // unreachable
}

std::size_t WxPoly::x_valuation() const {
    GPF_CHECK(!is_zero(), "x-valuation of the zero polynomial");
    std::size_t v = SIZE_MAX;
    for (const auto& c : c_)
        if (!c.is_zero()) v = std::min(v, c.valuation());
    return v;
}

WxPoly WxPoly::div_x_power(std::size_t k) const {
    if (k == 0 || is_zero()) return *this;
    WxPoly out(*this);
    for (auto& c : out.c_) {
        if (c.is_zero()) continue;
        GPF_ASSERT(c.valuation() >= k, "x-power division not exact");
        std::vector<Rational> nc(c.coeffs().begin() + static_cast<long>(k), c.coeffs().end());
        c = UniPoly(std::move(nc));
    }
    return out;
}

bool WxPoly::divisible_by_xm1() const {
    for (const auto& c : c_)
        if (c.eval(Rational(1)) != 0) return false;
    return true;
}

WxPoly WxPoly::div_xm1() const {
    static const UniPoly xm1 = UniPoly::affine(Rational(1), Rational(-1));
    WxPoly out(*this);
    for (auto& c : out.c_) c = c.exact_div(xm1);
    return out;
}

std::string WxPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = deg_w(); k >= 0; --k) {
        const UniPoly& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str("x") << ")";
        if (k > 0) {
            os << "*w";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

int FactoredDen::deg_w() const {
    int d = 0;
    for (const auto& [root, mult] : affine) d += mult;
    return d;
}

FactoredDen FactoredDen::times(const FactoredDen& o) const {
    FactoredDen out(*this);
    out.x_pow += o.x_pow;
    out.xm1_pow += o.xm1_pow;
    for (const auto& [d, m] : o.affine) out.affine[d] += m;
    return out;
}

WxPoly FactoredDen::expand() const {
    WxPoly out = WxPoly::constant(Rational(1));
    for (const auto& [d, m] : affine)
        for (int i = 0; i < m; ++i) out *= WxPoly::affine_w(Rational(1), d);
    UniPoly xpart = UniPoly::monomial(static_cast<std::size_t>(x_pow), Rational(1));
    xpart = xpart * UniPoly::affine(Rational(1), Rational(-1)).pow(static_cast<unsigned>(xm1_pow));
    return out.mul_x(xpart);
}

std::string FactoredDen::str() const {
    std::ostringstream os;
    if (x_pow) os << "x^" << x_pow << " ";
    if (xm1_pow) os << "(x-1)^" << xm1_pow << " ";
    for (const auto& [d, m] : affine) {
        os << "(w";
        if (d != 0) os << (d > 0 ? "+" : "") << rational_str(d);
        os << ")";
        if (m > 1) os << "^" << m;
    }
    return os.str().empty() ? "1" : os.str();
}

void WxFrac::cancel_x_parts() {
    if (num_.is_zero()) {
        den_ = FactoredDen{};
        return;
    }
    if (den_.x_pow > 0) {
        const auto v = std::min<std::size_t>(num_.x_valuation(),
                                             static_cast<std::size_t>(den_.x_pow));
        if (v > 0) {
            num_ = num_.div_x_power(v);
            den_.x_pow -= static_cast<int>(v);
        }
    }
    while (den_.xm1_pow > 0 && num_.divisible_by_xm1()) {
        num_ = num_.div_xm1();
        den_.xm1_pow -= 1;
    }
}

namespace {
// expansion of the part of `den` missing from `sub` (sub must divide den)
WxPoly expand_quotient(const FactoredDen& den, const FactoredDen& sub) {
    FactoredDen q;
    q.x_pow = den.x_pow - sub.x_pow;
    q.xm1_pow = den.xm1_pow - sub.xm1_pow;
    GPF_ASSERT(q.x_pow >= 0 && q.xm1_pow >= 0, "denominator quotient underflow");
    for (const auto& [d, m] : den.affine) {
        auto it = sub.affine.find(d);
        const int keep = m - (it == sub.affine.end() ? 0 : it->second);
        GPF_ASSERT(keep >= 0, "denominator quotient underflow");
        if (keep > 0) q.affine[d] = keep;
    }
    return q.expand();
}

}  // namespace

WxFrac WxFrac::operator+(const WxFrac& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // least common denominator: per-factor maximum multiplicity
    FactoredDen common;
    common.x_pow = std::max(den_.x_pow, o.den_.x_pow);
    common.xm1_pow = std::max(den_.xm1_pow, o.den_.xm1_pow);
    common.affine = den_.affine;
    for (const auto& [d, m] : o.den_.affine) {
        int& cur = common.affine[d];
        cur = std::max(cur, m);
    }
    const WxPoly n = num_ * expand_quotient(common, den_) + o.num_ * expand_quotient(common, o.den_);
    return WxFrac(n, common);
}

WxFrac WxFrac::operator-(const WxFrac& o) const { return *this + (-o); }

WxFrac WxFrac::operator*(const WxFrac& o) const {
    if (is_zero() || o.is_zero()) return WxFrac();
    return WxFrac(num_ * o.num_, den_.times(o.den_));
}

WxFrac WxFrac::mul_affine(const Rational& d) const {
    if (is_zero()) return *this;
    WxFrac out(*this);
    auto it = out.den_.affine.find(d);
    if (it != out.den_.affine.end()) {
        if (--it->second == 0) out.den_.affine.erase(it);
        return out;
    }
    out.num_ = out.num_ * WxPoly::affine_w(Rational(1), d);
    return out;
}

WxFrac WxFrac::div_affine(const Rational& scalar, const Rational& d) const {
    GPF_CHECK(scalar != 0, "division by a degenerate affine factor");
    WxFrac out(*this);
    out.num_ = out.num_.scaled(1 / scalar);
    if (out.is_zero()) return out;
    // try exact cancellation first
    auto [q, r] = out.num_.div_affine(d);
    if (r.is_zero()) {
        out.num_ = std::move(q);
        return out;
    }
    out.den_.affine[d] += 1;
    return out;
}

WxFrac WxFrac::mul_x_power(int k) const {
    if (is_zero() || k == 0) return *this;
    WxFrac out(*this);
    if (k > 0) {
        const int cancel = std::min(k, out.den_.x_pow);
        out.den_.x_pow -= cancel;
        k -= cancel;
        if (k > 0) out.num_ = out.num_.mul_x(UniPoly::monomial(static_cast<std::size_t>(k), Rational(1)));
    } else {
        out.den_.x_pow += -k;
        out.cancel_x_parts();
    }
    return out;
}

WxFrac WxFrac::mul_xm1_power(int k) const {
    if (is_zero() || k == 0) return *this;
    WxFrac out(*this);
    if (k > 0) {
        const int cancel = std::min(k, out.den_.xm1_pow);
        out.den_.xm1_pow -= cancel;
        k -= cancel;
        if (k > 0)
            out.num_ = out.num_.mul_x(UniPoly::affine(Rational(1), Rational(-1)).pow(static_cast<unsigned>(k)));
    } else {
        out.den_.xm1_pow += -k;
        out.cancel_x_parts();
    }
    return out;
}

WxFrac WxFrac::reduced() const {
    WxFrac out(*this);
    out.cancel_x_parts();
    if (out.is_zero()) return out;
    bool progress = true;
    while (progress && !out.den_.affine.empty()) {
        progress = false;
        for (auto it = out.den_.affine.begin(); it != out.den_.affine.end(); ++it) {
            auto [q, r] = out.num_.div_affine(it->first);
            if (r.is_zero()) {
                out.num_ = std::move(q);
                if (--it->second == 0) out.den_.affine.erase(it);
                progress = true;
                break;
            }
        }
    }
    return out;
}

bool WxFrac::equals(const WxFrac& o) const {
    return (num_ * o.den_.expand()) == (o.num_ * den_.expand());
}

bool WxFrac::equals_poly_over_x(const WxPoly& n, int xpow, int mpow) const {
    FactoredDen d;
    d.x_pow = xpow;
    d.xm1_pow = mpow;
    return equals(WxFrac(n, d));
}

BigFloat WxFrac::eval_numeric(const Rational& w, const BigFloat& x) const {
    const mpfr_prec_t p = x.prec();
    BigFloat nv = num_.eval_numeric(w, x);
    BigFloat dv = BigFloat::from(Rational(1), p);
    for (int i = 0; i < den_.x_pow; ++i) dv *= x;
    const BigFloat one = BigFloat::from(Rational(1), p);
    for (int i = 0; i < den_.xm1_pow; ++i) dv *= (x - one);
    for (const auto& [d0, m] : den_.affine)
        for (int i = 0; i < m; ++i) dv *= BigFloat::from(w + d0, p);
    return nv / dv;
}

std::string WxFrac::str() const {
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return Mat2{a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
}

std::vector<XRat> asymptotic_coeffs(const WxFrac& f, unsigned count) {
    if (f.is_zero()) return std::vector<XRat>(count, XRat{UniPoly(), UniPoly::constant(Rational(1))});
    const WxPoly den = f.den().expand();
    const WxPoly& num = f.num();
    const int dn = num.deg_w(), dd = den.deg_w();
    GPF_CHECK(dn <= dd, "asymptotic expansion requires deg_w num <= deg_w den");
    // reversed series: coefficient of u^j is the w-coefficient at degree (dd - j)
    auto rev = [&](const WxPoly& p, unsigned j) -> UniPoly {
        const int k = dd - static_cast<int>(j);
        return k < 0 ? UniPoly() : p.wcoeff(static_cast<std::size_t>(k));
    };
    const UniPoly d0 = rev(den, 0);
    GPF_ASSERT(!d0.is_zero(), "denominator leading coefficient vanished");
    std::vector<XRat> out;
    std::vector<UniPoly> cnum;  // numerators of series coefficients over d0^(j+1)
    for (unsigned j = 0; j < count; ++j) {
        // c_j = (n_j - sum_{i<j} c_i d_{j-i}) / d0, with c_i = cnum[i]/d0^(i+1)
        UniPoly acc = rev(num, j) * d0.pow(j);
        for (unsigned i = 0; i < j; ++i)
            acc -= cnum[i] * rev(den, j - i) * d0.pow(j - 1 - i);
        cnum.push_back(acc);
        out.push_back(XRat{acc, d0.pow(j + 1)});
    }
    return out;
}

}  // namespace gpf
