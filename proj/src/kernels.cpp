#include "gammaprod/kernels.hpp"

namespace gpf {

Rational pochhammer(const Rational& a, unsigned k) {
    Rational out(1);
    for (unsigned t = 0; t < k; ++t) out *= a + Rational(static_cast<long>(t));
    return out;
}

UniPoly pochhammer_affine(const Rational& c, const Rational& d, unsigned k) {
    UniPoly out = UniPoly::constant(Rational(1));
    for (unsigned t = 0; t < k; ++t)
        out *= UniPoly::affine(c, d + Rational(static_cast<long>(t)));
    return out;
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return Rational(out);
}

UniPoly terminating_sum(unsigned k, const Rational& beta, const Rational& gamma) {
    std::vector<Rational> coeffs(k + 1);
    for (unsigned j = 0; j <= k; ++j) {
        Rational c = binomial(k, j) * pochhammer(beta, j) *
                     pochhammer(gamma + Rational(static_cast<long>(j)), k - j);
        coeffs[j] = (j % 2 == 0) ? c : Rational(-c);
    }
    return UniPoly(std::move(coeffs));
}

bool terminating_sum_vanishes(unsigned k, const Rational& beta, const Rational& gamma) {
    bool criterion = false;
    if (is_integer(beta) && is_integer(gamma)) {
        const Rational mb = -beta, mg = -gamma;
        criterion = 0 <= mb && mb <= mg && mg <= Rational(static_cast<long>(k) - 1);
    }
    const bool constructed = terminating_sum(k, beta, gamma).is_zero();
    GPF_ASSERT(criterion == constructed,
               "terminating-sum vanishing criterion disagrees with the polynomial");
    return criterion;
}

namespace {

// Rational function of w over Q, reduced on construction.
struct WRat {
    UniPoly num;
    UniPoly den;

    static WRat of(UniPoly n) { return {std::move(n), UniPoly::constant(Rational(1))}; }
    static WRat ratio(UniPoly n, UniPoly d) {
        WRat f{std::move(n), std::move(d)};
        f.reduce();
        return f;
    }
    void reduce() {
        GPF_ASSERT(!den.is_zero(), "zero denominator in series coefficient");
        if (num.is_zero()) {
            den = UniPoly::constant(Rational(1));
            return;
        }
        const UniPoly g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = num.exact_div(g);
            den = den.exact_div(g);
        }
        const Rational lead = den.leading();
        num = num.scaled(1 / lead);
        den = den.scaled(1 / lead);
    }
    WRat operator+(const WRat& o) const { return ratio(num * o.den + o.num * den, den * o.den); }
    WRat operator*(const WRat& o) const { return ratio(num * o.num, den * o.den); }
};

struct AffinePair {
    Rational c, d;  // c*w + d
};

// Coefficients c_0..c_N of 2F1(a1, a2; a3; z) in z, as rational functions of w.
std::vector<WRat> series_coeffs(const AffinePair& a1, const AffinePair& a2,
                                const AffinePair& a3, unsigned N) {
    std::vector<WRat> out;
    out.reserve(N + 1);
    Rational factorial(1);
    for (unsigned n = 0; n <= N; ++n) {
        if (n > 0) factorial *= Rational(static_cast<long>(n));
        UniPoly num = pochhammer_affine(a1.c, a1.d, n) * pochhammer_affine(a2.c, a2.d, n);
        UniPoly den = pochhammer_affine(a3.c, a3.d, n).scaled(factorial);
        out.push_back(WRat::ratio(std::move(num), std::move(den)));
    }
    return out;
}

// (1 +- z)^e truncated: plain binomial coefficients as degree-0 rationals.
std::vector<Rational> binomial_coeffs_one_minus_z(unsigned e, unsigned N) {
    std::vector<Rational> out(N + 1, Rational(0));
    for (unsigned m = 0; m <= N && m <= e; ++m)
        out[m] = (m % 2 == 0) ? binomial(e, m) : Rational(-binomial(e, m));
    return out;
}

// Assemble clear * sum_n x^n conv_n where conv_n is a rational function of w;
// asserts every cleared coefficient is a true polynomial in w.
WxPoly assemble(const std::vector<WRat>& conv, const UniPoly& clear_factor) {
    std::vector<UniPoly> tn;  // per x-degree polynomials in w
    int wdeg = -1;
    for (const auto& s : conv) {
        WRat t = WRat::ratio(s.num * clear_factor, s.den);
        GPF_ASSERT(t.den.degree() == 0,
                   "truncated product coefficient failed to clear to a polynomial");
        tn.push_back(t.num.scaled(1 / t.den[0]));
        wdeg = std::max(wdeg, tn.back().degree());
    }
    // transpose: coefficient of w^k is a polynomial in x
    std::vector<UniPoly> wc;
    for (int k = 0; k <= wdeg; ++k) {
        std::vector<Rational> xc(tn.size(), Rational(0));
        for (std::size_t n = 0; n < tn.size(); ++n) xc[n] = tn[n][static_cast<std::size_t>(k)];
        wc.push_back(UniPoly(std::move(xc)));
    }
    return WxPoly(std::move(wc));
}

void check_kernel_pre(const HyperData& lambda) {
    GPF_CHECK(lambda.q == 0 && lambda.b == rat(1, 2),
              "truncated products need q = 0, b = 1/2");
    GPF_CHECK(0 < lambda.p && lambda.p < lambda.r,
              "truncated products need 0 < p < r");
}

// parameter triples used throughout this module
struct Triples {
    AffinePair first1, first2, first3;  // a*(w)
};

Triples star_params(const HyperData& lambda) {
    const Rational rp(lambda.r - lambda.p), r(lambda.r);
    return {{rp, -lambda.a}, {r, rat(-1, 2)}, {r, Rational(0)}};
}

}  // namespace

WxPoly phi_product(const HyperData& lambda) {
    check_kernel_pre(lambda);
    const long p = lambda.p, r = lambda.r;
    const unsigned N = static_cast<unsigned>(r - 1);
    const auto st = star_params(lambda);
    const auto A = series_coeffs(st.first1, st.first2, st.first3, N);
    // v - a*(w+1) with v = (1,1,2)
    const Rational rp(r - p), rr(r);
    const auto B = series_coeffs({-rp, Rational(1) - rp + lambda.a},
                                 {-rr, rat(3, 2) - rr}, {-rr, Rational(2) - rr}, N);
    std::vector<WRat> conv(N + 1, WRat::of(UniPoly()));
    for (unsigned n = 0; n <= N; ++n)
        for (unsigned i = 0; i <= n; ++i) conv[n] = conv[n] + A[i] * B[n - i];
    return assemble(conv, pochhammer_affine(rr, Rational(0), N));
}

WxPoly p_product(const HyperData& lambda) {
    check_kernel_pre(lambda);
    const long p = lambda.p, r = lambda.r;
    const unsigned N = static_cast<unsigned>(r - 1);
    const auto st = star_params(lambda);
    const auto A = series_coeffs(st.first1, st.first2, st.first3, N);
    const Rational rp(r - p), rr(r);
    const auto B = series_coeffs({-rp, Rational(1) - rp + lambda.a},
                                 {-rr, rat(3, 2) - rr}, {-rr, Rational(1) - rr}, N);
    std::vector<WRat> conv(N + 1, WRat::of(UniPoly()));
    for (unsigned n = 0; n <= N; ++n)
        for (unsigned i = 0; i <= n; ++i) conv[n] = conv[n] + A[i] * B[n - i];
    return assemble(conv, pochhammer_affine(rr, Rational(0), N + 1));
}

WxPoly phi_product_euler(const HyperData& lambda) {
    check_kernel_pre(lambda);
    const long p = lambda.p, r = lambda.r;
    const unsigned N = static_cast<unsigned>(r - 1);
    const Rational pp(p), rr(r);
    const auto A = series_coeffs({pp, lambda.a}, {Rational(0), rat(1, 2)}, {rr, Rational(0)}, N);
    const auto B = series_coeffs({-pp, Rational(1) - pp - lambda.a},
                                 {Rational(0), rat(1, 2)}, {-rr, Rational(2) - rr}, N);
    const auto E = binomial_coeffs_one_minus_z(static_cast<unsigned>(r - p), N);
    std::vector<WRat> conv(N + 1, WRat::of(UniPoly()));
    for (unsigned n = 0; n <= N; ++n)
        for (unsigned m = 0; m <= n; ++m) {
            if (E[m] == 0) continue;
            for (unsigned i = 0; m + i <= n; ++i) {
                WRat term = A[i] * B[n - m - i];
                term.num = term.num.scaled(E[m]);
                conv[n] = conv[n] + term;
            }
        }
    return assemble(conv, pochhammer_affine(rr, Rational(0), N));
}

WxPoly p_product_euler(const HyperData& lambda) {
    check_kernel_pre(lambda);
    const long p = lambda.p, r = lambda.r;
    const unsigned N = static_cast<unsigned>(r - 1);
    const Rational pp(p), rr(r);
    const auto A = series_coeffs({pp, lambda.a}, {Rational(0), rat(1, 2)}, {rr, Rational(0)}, N);
    const auto B = series_coeffs({-pp, -pp - lambda.a}, {Rational(0), rat(-1, 2)},
                                 {-rr, Rational(1) - rr}, N);
    const auto E = binomial_coeffs_one_minus_z(static_cast<unsigned>(r - p - 1), N);
    std::vector<WRat> conv(N + 1, WRat::of(UniPoly()));
    for (unsigned n = 0; n <= N; ++n)
        for (unsigned m = 0; m <= n; ++m) {
            if (E[m] == 0) continue;
            for (unsigned i = 0; m + i <= n; ++i) {
                WRat term = A[i] * B[n - m - i];
                term.num = term.num.scaled(E[m]);
                conv[n] = conv[n] + term;
            }
        }
    return assemble(conv, pochhammer_affine(rr, Rational(0), N + 1));
}

bool phi_vanishes(const HyperData& lambda) {
    const WxPoly phi = phi_product(lambda);
    for (const auto& coeff : phi.wcoeffs())
        if (!vanishes_at_x(coeff, lambda)) return false;
    return true;
}

Rational special_point(const HyperData& lambda, SpecialKind kind, unsigned index) {
    const long p = lambda.p, r = lambda.r;
    switch (kind) {
        case SpecialKind::Xi:
            GPF_CHECK(index < static_cast<unsigned>(r - p), "xi index out of range");
            return -(Rational(static_cast<long>(index)) - lambda.a) / Rational(r - p);
        case SpecialKind::Eta:
            GPF_CHECK(index < static_cast<unsigned>(r), "eta index out of range");
            return -(Rational(static_cast<long>(index)) - rat(1, 2)) / Rational(r);
        case SpecialKind::Zeta:
            GPF_CHECK(index < static_cast<unsigned>(p), "zeta index out of range");
            return -(lambda.a + Rational(static_cast<long>(index))) / Rational(p);
    }
    throw domain_error("unknown special point kind");
}

SpecialValues eval_special(const HyperData& lambda, SpecialKind kind, unsigned index) {
    check_kernel_pre(lambda);
    const long p = lambda.p, r = lambda.r;
    const Rational w0 = special_point(lambda, kind, index);
    const Rational rw0 = Rational(r) * w0;

    SpecialValues out;
    out.phi_direct = phi_product(lambda).eval_w(w0);
    out.p_direct = p_product(lambda).eval_w(w0);

    const long j = static_cast<long>(index);
    auto sign_pow = [](long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); };

    if (kind == SpecialKind::Xi) {
        GPF_CHECK(!is_integer(rw0), "formula inapplicable: r*xi is an integer");
        const Rational bj = Rational(2) - Rational(r) * (w0 + 1);
        const unsigned k2 = static_cast<unsigned>(r - p - 1 - j);
        const UniPoly f1 = terminating_sum(static_cast<unsigned>(j), rw0 - rat(1, 2), rw0);
        const Rational sg = sign_pow(r - p - 1 - j);
        out.phi_closed =
            (f1 * terminating_sum(k2, bj - rat(1, 2), bj))
                .scaled(sg * pochhammer(rw0 + Rational(j), static_cast<unsigned>(p)));
        out.p_closed =
            (f1 * terminating_sum(k2, bj - rat(1, 2), bj - 1))
                .scaled(sg * pochhammer(rw0 + Rational(j), static_cast<unsigned>(p + 1)));
    } else if (kind == SpecialKind::Eta) {
        const Rational cj = Rational(r - p) * w0 - lambda.a;
        const Rational dj = Rational(1) - Rational(r - p) * (w0 + 1) + lambda.a;
        const unsigned k2 = static_cast<unsigned>(r - 1 - j);
        const UniPoly f1 =
            terminating_sum(static_cast<unsigned>(j), cj, rat(1, 2) - Rational(j));
        const Rational sg = sign_pow(r - 1 - j);
        out.phi_closed =
            (f1 * terminating_sum(k2, dj, rat(3, 2) + Rational(j - r))).scaled(sg);
        out.p_closed =
            (f1 * terminating_sum(k2, dj, rat(1, 2) + Rational(j - r))).scaled(sg / 2);
    } else {
        GPF_CHECK(!is_integer(rw0), "formula inapplicable: r*zeta is an integer");
        const UniPoly onemx = UniPoly::affine(Rational(-1), Rational(1));
        const Rational poch_common = pochhammer(rw0 + Rational(j), static_cast<unsigned>(r - p));
        const UniPoly f1 = terminating_sum(static_cast<unsigned>(j), rat(1, 2), rw0);
        out.phi_closed = (f1 *
                          terminating_sum(static_cast<unsigned>(p - 1 - j), rat(1, 2),
                                          Rational(2) - Rational(r) * (w0 + 1)) *
                          onemx.pow(static_cast<unsigned>(r - p)))
                             .scaled(sign_pow(p - 1 - j) * poch_common);
        out.p_closed = (f1 *
                        terminating_sum(static_cast<unsigned>(p - j), rat(-1, 2),
                                        Rational(1) - Rational(r) * (w0 + 1)) *
                        onemx.pow(static_cast<unsigned>(r - p - 1)))
                           .scaled(sign_pow(p - j) * poch_common);
    }
    return out;
}

}  // namespace gpf
