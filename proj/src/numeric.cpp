#include "gammaprod/numeric.hpp"

#include <functional>
#include <mutex>
#include <random>

#include "gammaprod/certifier.hpp"
#include "gammaprod/contiguous.hpp"

namespace gpf {

BigComplex BigComplex::operator/(const BigComplex& o) const {
    const BigFloat d = o.re * o.re + o.im * o.im;
    GPF_CHECK(!d.is_zero(), "complex division by zero");
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

BigFloat BigComplex::abs() const {
    BigFloat out(prec());
    mpfr_hypot(out.raw(), re.raw(), im.raw(), MPFR_RNDN);
    return out;
}

std::string BigComplex::str(std::size_t digits) const {
    if (im.is_zero()) return re.str(digits);
    const BigFloat im_mag = im.sign() < 0 ? -im : im;
    return re.str(digits) + (im.sign() < 0 ? " - " : " + ") + im_mag.str(digits) + "i";
}

BigComplex c_exp(const BigComplex& z) {
    const BigFloat m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

BigComplex c_log(const BigComplex& z) {
    GPF_CHECK(!z.is_zero(), "log of zero");
    return {log(z.abs()), atan2(z.im, z.re)};
}

BigComplex c_sin(const BigComplex& z) {
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

BigComplex c_pow(const BigFloat& base, const BigComplex& expo) {
    GPF_CHECK(base.sign() > 0, "real power needs a positive base");
    const BigFloat lb = log(base);
    return c_exp({expo.re * lb, expo.im * lb});
}

namespace {

// Exact Bernoulli numbers B_{2n}, cached.
const Rational& bernoulli_even(unsigned n) {
    static std::vector<Rational> all{Rational(1), rat(-1, 2)};  // B_0, B_1
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (all.size() <= 2 * n) {
        const unsigned m = static_cast<unsigned>(all.size());
        Rational acc(0);
        Rational binom(1);  // C(m+1, k) built incrementally
        for (unsigned k = 0; k < m; ++k) {
            acc += binom * all[k];
            binom *= Rational(static_cast<long>(m + 1 - k));
            binom /= Rational(static_cast<long>(k + 1));
        }
        all.push_back(-acc / Rational(static_cast<long>(m) + 1));
    }
    static Rational out;
    out = all[2 * n];
    return out;
}

BigComplex inv(const BigComplex& z) {
    BigComplex one(z.prec());
    one.re = BigFloat::from(Rational(1), z.prec());
    return one / z;
}

// log Gamma by the asymptotic series; requires Re z comfortably large.
BigComplex lgamma_asymptotic(const BigComplex& z, mpfr_prec_t wp) {
    const BigComplex logz = c_log(z);
    const BigFloat half = BigFloat::from(rat(1, 2), wp);
    BigComplex acc = (z - BigComplex{half, BigFloat(wp)}) * logz - z;
    // + (1/2) log(2 pi)
    BigFloat l2pi = log(BigFloat::pi(wp) + BigFloat::pi(wp));
    acc.re = acc.re + half * l2pi;

    const BigComplex z2inv = inv(z * z);
    BigComplex zpow = inv(z);  // z^{1-2n} for n = 1
    const BigFloat eps = BigFloat::two_to(-static_cast<long>(wp) - 8, wp);
    BigFloat prev_mag(wp);
    for (unsigned n = 1; n < 4096; ++n) {
        const Rational coeff = bernoulli_even(n) / rat(static_cast<long>(2 * n) *
                                                       (static_cast<long>(2 * n) - 1));
        const BigComplex term{zpow.re * BigFloat::from(coeff, wp),
                              zpow.im * BigFloat::from(coeff, wp)};
        acc += term;
        const BigFloat mag = term.abs();
        if (mag < eps) return acc;
        GPF_ASSERT(n == 1 || mag < prev_mag,
                   "Stirling series diverging: argument shifted too little");
        prev_mag = mag;
        zpow = zpow * z2inv;
    }
    throw internal_error("Stirling series failed to converge");
}

}  // namespace

BigComplex gamma(const BigComplex& w, mpfr_prec_t precision) {
    const mpfr_prec_t wp = precision + 96;
    if (w.im.is_zero() && w.re.is_integer() && !(w.re.sign() > 0))
        throw domain_error("gamma pole at a nonpositive integer");

    // shift until the asymptotic series is accurate at wp bits
    const long target = static_cast<long>(wp) / 8 + 12;
    BigFloat im_mag = abs(w.im);
    BigFloat need = BigFloat::from(Rational(target), wp);
    if (need < im_mag) need = im_mag;

    BigComplex z{BigFloat(wp), BigFloat(wp)};
    z.re = z.re + w.re;
    z.im = z.im + w.im;
    BigComplex prod = BigComplex::real(Rational(1), wp);
    long guard = 0;
    while (z.re < need) {
        prod *= z;
        z.re = z.re + BigFloat::from(Rational(1), wp);
        GPF_ASSERT(++guard < 100000, "gamma shift failed to terminate");
    }
    const BigComplex g = c_exp(lgamma_asymptotic(z, wp));
    return g / prod;
}

BigComplex hyp2f1(const BigComplex& a, const BigComplex& b, const BigComplex& c,
                  const BigComplex& z, mpfr_prec_t precision) {
    const mpfr_prec_t wp = precision + 64;
    const BigFloat zmag = z.abs();
    GPF_CHECK(zmag < BigFloat::from(Rational(1), wp), "series argument outside |z| < 1");
    if (c.im.is_zero() && c.re.is_integer() && !(c.re.sign() > 0))
        throw domain_error("hypergeometric parameter pole: c a nonpositive integer");

    BigComplex sum = BigComplex::real(Rational(1), wp);
    BigComplex term = sum;
    const BigFloat one = BigFloat::from(Rational(1), wp);
    const BigFloat qstar = (one + zmag) / (one + one);
    const BigFloat eps = BigFloat::two_to(-static_cast<long>(wp) - 4, wp);
    for (unsigned long n = 0; n < 4000000; ++n) {
        const BigComplex nn = BigComplex::real(Rational(static_cast<long>(n)), wp);
        const BigComplex den = (c + nn) * (nn + BigComplex::real(Rational(1), wp));
        GPF_CHECK(!den.is_zero(), "hypergeometric series hit a parameter pole");
        const BigComplex factor = (a + nn) * (b + nn) * z / den;
        term = term * factor;
        sum += term;
        if (n > 4 && factor.abs() < qstar) {
            const BigFloat tail = term.abs() * qstar / (one - qstar);
            if (tail < eps * sum.abs()) return sum;
        }
    }
    throw internal_error("hypergeometric series failed to converge");
}

BigFloat x_value(const HyperData& lambda, mpfr_prec_t precision) {
    if (lambda.x_is_rational()) return BigFloat::from(lambda.x_rational(), precision + 16);
    AlgebraicReal a = std::get<AlgebraicReal>(lambda.x);
    refine(a, rat_pow(rat(1, 2), static_cast<long>(precision) + 8));
    return BigFloat::from(a.mid(), precision + 16);
}

namespace {

BigComplex f_at(const Rational& w, const HyperData& lambda, const BigFloat& x,
                mpfr_prec_t wp) {
    return hyp2f1(BigComplex::real(Rational(lambda.p) * w + lambda.a, wp),
                  BigComplex::real(Rational(lambda.q) * w + lambda.b, wp),
                  BigComplex::real(Rational(lambda.r) * w, wp), BigComplex::real(x), wp);
}

BigFloat pow_rat_exp(const BigFloat& base, const Rational& e, mpfr_prec_t wp) {
    return pow(base, BigFloat::from(e, wp));
}

}  // namespace

BigComplex f_val(const Rational& w, const HyperData& lambda, mpfr_prec_t precision) {
    return f_at(w, lambda, x_value(lambda, precision), precision);
}

BigComplex f_tilde_val(const Rational& w, const HyperData& lambda, mpfr_prec_t precision) {
    const BigFloat x = x_value(lambda, precision);
    return hyp2f1(BigComplex::real(Rational(lambda.p) * w + lambda.a + 1, precision),
                  BigComplex::real(Rational(lambda.q) * w + lambda.b + 1, precision),
                  BigComplex::real(Rational(lambda.r) * w + 1, precision),
                  BigComplex::real(x), precision);
}

BigFloat TwoRoutes::relative_gap() const {
    return (direct - via_transform).abs() / direct.abs();
}

TwoRoutes g_val(const Rational& w, const HyperData& lambda, mpfr_prec_t precision) {
    GPF_CHECK(lambda.q == 0 && lambda.b == rat(1, 2), "g routes need q = 0, b = 1/2");
    const mpfr_prec_t wp = precision + 32;
    const BigFloat x = x_value(lambda, wp);
    const BigFloat one = BigFloat::from(Rational(1), wp);
    const Rational alpha = Rational(lambda.p) * w + lambda.a;
    const Rational gam = Rational(lambda.r) * w;
    const BigFloat pref = pow_rat_exp(x, 1 - gam, wp) *
                          pow_rat_exp(one - x, gam - alpha - rat(1, 2), wp);

    TwoRoutes out{BigComplex(wp), BigComplex(wp)};
    out.direct = hyp2f1(BigComplex::real(1 - alpha, wp), BigComplex::real(rat(1, 2), wp),
                        BigComplex::real(2 - gam, wp), BigComplex::real(x), wp);
    out.direct = BigComplex{out.direct.re * pref, out.direct.im * pref};

    const HyperData lam_d = dual(lambda);
    const Rational w_shift = rat(2, 1) / Rational(lambda.r) - w;  // w' + 1
    out.via_transform = f_at(w_shift, lam_d, x, wp);
    out.via_transform =
        BigComplex{out.via_transform.re * pref, out.via_transform.im * pref};
    return out;
}

TwoRoutes h_val(const Rational& w, const HyperData& lambda, mpfr_prec_t precision) {
    GPF_CHECK(lambda.q == 0 && lambda.b == rat(1, 2), "h routes need q = 0, b = 1/2");
    const mpfr_prec_t wp = precision + 32;
    const BigFloat x = x_value(lambda, wp);
    const BigFloat one = BigFloat::from(Rational(1), wp);
    const Rational alpha = Rational(lambda.p) * w + lambda.a;
    const Rational gam = Rational(lambda.r) * w;
    const BigFloat pref = pow_rat_exp(x, 1 - gam, wp) *
                          pow_rat_exp(one - x, gam - alpha - rat(1, 2), wp);

    TwoRoutes out{BigComplex(wp), BigComplex(wp)};
    out.direct = hyp2f1(BigComplex::real(1 - alpha, wp), BigComplex::real(rat(1, 2), wp),
                        BigComplex::real(gam - alpha + rat(1, 2), wp),
                        BigComplex{one - x, BigFloat(wp)}, wp);
    out.direct = BigComplex{out.direct.re * pref, out.direct.im * pref};

    const HyperData lam_r = reciprocal(lambda);
    const Rational c = (rat(1, 2) - lambda.a) / Rational(lambda.r - lambda.p);
    out.via_transform = f_val(w + c, lam_r, wp);
    out.via_transform =
        BigComplex{out.via_transform.re * pref, out.via_transform.im * pref};
    return out;
}

BigFloat residual_tolerance(mpfr_prec_t precision) {
    const long digits = static_cast<long>(static_cast<double>(precision) * 0.30103);
    BigFloat ten = BigFloat::from(Rational(10), 64);
    return pow(ten, BigFloat::from(Rational(-digits / 2), 64));
}

std::vector<Rational> sample_points(const std::vector<AffineForm>& conflicts,
                                    unsigned seed, unsigned extra) {
    auto conflicted = [&](const Rational& w) {
        const Rational margin = rat(1, 20);
        for (const auto& f : conflicts) {
            const Rational t = f.mu * w + f.nu;
            const Rational d = f.sine ? dist_to_integer(t) : dist_to_nonpositive_integer(t);
            if (d < margin) return true;
        }
        return false;
    };
    std::vector<Rational> raw;
    for (long k = 0; k <= 6; ++k) raw.push_back(rat(1, 5) + rat(k, 7));
    std::mt19937_64 rng(seed);
    for (unsigned i = 0; i < extra; ++i)
        raw.push_back(rat(1 + static_cast<long>(rng() % 287), 96));
    std::vector<Rational> out;
    for (Rational w : raw) {
        int guard = 0;
        while (conflicted(w) && guard++ < 400) w += rat(3, 100);
        if (conflicted(w)) continue;
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
    return out;
}

namespace {

struct Family {
    std::string tag;
    std::function<BigComplex(const Rational&)> lhs;
    std::function<BigComplex(const Rational&)> shape;  // right side up to a constant
    std::optional<BigComplex> fixed_constant;
};

VerificationReport run_family(const Family& fam, const std::vector<Rational>& samples,
                              mpfr_prec_t precision, BigComplex* fitted = nullptr) {
    GPF_CHECK(samples.size() >= 2, "verification needs at least two samples");
    VerificationReport rep;
    rep.identity = fam.tag;
    rep.precision_bits = static_cast<long>(precision);
    const std::size_t digits =
        static_cast<std::size_t>(static_cast<double>(precision) * 0.30103) + 2;

    BigComplex C(precision);
    std::size_t first_checked = 0;
    if (fam.fixed_constant) {
        C = *fam.fixed_constant;
    } else {
        C = fam.lhs(samples[0]) / fam.shape(samples[0]);
        first_checked = 1;
    }
    if (fitted) *fitted = C;
    rep.constant = C.str(digits);

    const BigFloat tol = residual_tolerance(precision);
    BigFloat worst(precision);
    rep.pass = true;
    for (std::size_t i = first_checked; i < samples.size(); ++i) {
        const BigComplex lhs = fam.lhs(samples[i]);
        const BigComplex rhs = C * fam.shape(samples[i]);
        const BigFloat res = (lhs - rhs).abs() / lhs.abs();
        rep.samples.push_back(samples[i]);
        rep.residuals.push_back(res.str(8));
        if (res > worst) worst = res;
        if (!(res < tol)) rep.pass = false;
    }
    rep.worst_residual = worst.str(8);
    return rep;
}

std::vector<Rational> index_shifts(long r) {
    std::vector<Rational> out;
    for (long i = 0; i < r; ++i) out.push_back(rat(i, r));
    return out;
}

}  // namespace

BigComplex gamma_quotient(const Rational& w, const std::vector<Rational>& numerator_shifts,
                          const std::vector<Rational>& denominator_shifts,
                          mpfr_prec_t precision) {
    BigComplex out = BigComplex::real(Rational(1), precision);
    for (const auto& u : numerator_shifts)
        out *= gamma(BigComplex::real(w + u, precision), precision);
    for (const auto& v : denominator_shifts)
        out = out / gamma(BigComplex::real(w + v, precision), precision);
    return out;
}

std::vector<Rational> certificate_samples(const GpfCertificate& cert, unsigned seed) {
    const long r = cert.lambda.r, p = cert.lambda.p;
    std::vector<AffineForm> forms;
    auto add_shift = [&](const Rational& q, bool sine = false) {
        forms.push_back({Rational(1), q, sine});
    };
    for (const auto& v : cert.v) add_shift(v);
    for (const auto& v : cert.v_prime) add_shift(v);
    for (const auto& v : cert.v_check) add_shift(v);
    for (long i = 0; i < r; ++i) add_shift(rat(i, r));
    for (long i = 0; i < r - p; ++i) add_shift(rat(i, r - p));
    const Rational c = (rat(1, 2) - cert.lambda.a) / Rational(r - p);
    for (long i = 0; i < r - p; ++i) add_shift(c + rat(i, r - p));
    for (const auto& v : cert.v_star) add_shift(v, true);
    for (long i = 0; i < r; ++i) forms.push_back({Rational(1), rat(i - 1, r), true});
    // series gamma-parameters: r w, 2 - r w, (r-p) w, (r-p) w + 1/2 - a
    forms.push_back({Rational(r), Rational(0), false});
    forms.push_back({Rational(-r), Rational(2), false});
    forms.push_back({Rational(r - p), Rational(0), false});
    forms.push_back({Rational(r - p), rat(1, 2) - cert.lambda.a, false});
    return sample_points(forms, seed);
}

std::vector<VerificationReport> verify_gpf(const GpfCertificate& cert,
                                           const std::vector<Rational>& samples,
                                           mpfr_prec_t precision) {
    const mpfr_prec_t wp = precision + 32;
    const HyperData& lam = cert.lambda;
    const long r = lam.r, p = lam.p;
    std::vector<VerificationReport> out;

    // main
    Family main_fam{"gpf-main",
                    [&](const Rational& w) { return f_val(w, lam, wp); },
                    [&](const Rational& w) {
                        return gamma_quotient(w, index_shifts(r), cert.v, wp);
                    },
                    std::nullopt};
    BigComplex C(wp);
    out.push_back(run_family(main_fam, samples, precision, &C));

    // dual
    const HyperData lam_d = dual(lam);
    Family dual_fam{"gpf-dual",
                    [&](const Rational& w) { return f_val(w, lam_d, wp); },
                    [&](const Rational& w) {
                        return gamma_quotient(w, index_shifts(r), cert.v_prime, wp);
                    },
                    std::nullopt};
    BigComplex Cp(wp);
    out.push_back(run_family(dual_fam, samples, precision, &Cp));

    // reciprocal
    const HyperData lam_r = reciprocal(lam);
    Family rec_fam{"gpf-reciprocal",
                   [&](const Rational& w) { return f_val(w, lam_r, wp); },
                   [&](const Rational& w) {
                       return gamma_quotient(w, index_shifts(r - p), cert.v_check, wp);
                   },
                   std::nullopt};
    out.push_back(run_family(rec_fam, samples, precision));

    // sine-product representation of g; D derived from C', not fitted
    const BigFloat x = x_value(lam, wp);
    const BigFloat one = BigFloat::from(Rational(1), wp);
    const BigFloat dval =
        pow_rat_exp(x, Rational(1), wp) *
        pow_rat_exp(one - x, -lam.a - rat(1, 2), wp);
    const BigComplex D{Cp.re * dval, Cp.im * dval};
    const BigFloat delta = BigFloat::from(cert.delta, wp);
    Family g_fam{
        "gpf-sine-g",
        [&](const Rational& w) { return g_val(w, lam, wp).direct; },
        [&](const Rational& w) {
            BigComplex shape = c_pow(delta, BigComplex::real(w, wp));
            const BigFloat pi = BigFloat::pi(wp);
            for (const auto& v : cert.v_star) {
                shape *= c_sin({BigFloat::from(w + v, wp) * pi, BigFloat(wp)});
                shape *= gamma(BigComplex::real(w + v, wp), wp);
            }
            for (long i = 0; i < r; ++i) {
                const Rational q = w + rat(i - 1, r);
                shape = shape / c_sin({BigFloat::from(q, wp) * pi, BigFloat(wp)});
                shape = shape / gamma(BigComplex::real(q, wp), wp);
            }
            return shape;
        },
        D};
    out.push_back(run_family(g_fam, samples, precision));

    // h against the dilated quotient: delta^w prod G(w + c + i/(r-p)) / prod G(w + v_i)
    const Rational c = (rat(1, 2) - lam.a) / Rational(r - p);
    std::vector<Rational> h_nums;
    for (long i = 0; i < r - p; ++i) h_nums.push_back(c + rat(i, r - p));
    std::vector<Rational> h_dens(cert.v_arranged.begin(),
                                 cert.v_arranged.begin() + (r - p));
    Family h_fam{"gpf-h",
                 [&](const Rational& w) { return h_val(w, lam, wp).direct; },
                 [&](const Rational& w) {
                     return c_pow(delta, BigComplex::real(w, wp)) *
                            gamma_quotient(w, h_nums, h_dens, wp);
                 },
                 std::nullopt};
    out.push_back(run_family(h_fam, samples, precision));

    // route agreements for g and h
    for (int which = 0; which < 2; ++which) {
        VerificationReport rep;
        rep.identity = which == 0 ? "g-route-agreement" : "h-route-agreement";
        rep.precision_bits = static_cast<long>(precision);
        const BigFloat tol = residual_tolerance(precision);
        BigFloat worst(wp);
        rep.pass = true;
        for (const auto& w : samples) {
            const TwoRoutes tr = which == 0 ? g_val(w, lam, wp) : h_val(w, lam, wp);
            const BigFloat res = tr.relative_gap();
            rep.samples.push_back(w);
            rep.residuals.push_back(res.str(8));
            if (res > worst) worst = res;
            if (!(res < tol)) rep.pass = false;
        }
        rep.worst_residual = worst.str(8);
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<VerificationReport> verify_three_term(const HyperData& lambda,
                                                  const std::vector<Rational>& samples,
                                                  mpfr_prec_t precision,
                                                  const GpfCertificate* cert) {
    const mpfr_prec_t wp = precision + 32;
    const Mat2 A = contig_matrix(lambda);
    const RQ rq = extract_rq(A);
    const BigFloat x = x_value(lambda, wp);
    const BigFloat tol = residual_tolerance(precision);

    std::vector<VerificationReport> out;
    VerificationReport rep;
    rep.identity = "three-term";
    rep.precision_bits = static_cast<long>(precision);
    rep.pass = true;
    BigFloat worst(wp);
    for (const auto& w : samples) {
        const BigComplex lhs = f_val(w + 1, lambda, wp);
        const BigFloat Rv = rq.R.eval_numeric(w, x);
        const BigFloat Qv = rq.Q.eval_numeric(w, x);
        const BigComplex f0 = f_val(w, lambda, wp);
        const BigComplex f1 = f_tilde_val(w, lambda, wp);
        const BigComplex rhs{Rv * f0.re + Qv * f1.re, Rv * f0.im + Qv * f1.im};
        const BigFloat res = (lhs - rhs).abs() / lhs.abs();
        rep.samples.push_back(w);
        rep.residuals.push_back(res.str(8));
        if (res > worst) worst = res;
        if (!(res < tol)) rep.pass = false;
    }
    rep.worst_residual = worst.str(8);
    out.push_back(std::move(rep));

    if (cert) {
        VerificationReport two;
        two.identity = "two-term-ratio";
        two.precision_bits = static_cast<long>(precision);
        two.pass = true;
        BigFloat worst2(wp);
        for (const auto& w : samples) {
            const BigComplex ratio = f_val(w + 1, lambda, wp) / f_val(w, lambda, wp);
            BigComplex shape = BigComplex::real(Rational(1), wp);
            for (long i = 0; i < lambda.r; ++i)
                shape *= BigComplex::real(w + rat(i, lambda.r), wp);
            for (const auto& v : cert->v)
                shape = shape / BigComplex::real(w + v, wp);
            const BigFloat res = (ratio - shape).abs() / ratio.abs();
            two.samples.push_back(w);
            two.residuals.push_back(res.str(8));
            if (res > worst2) worst2 = res;
            if (!(res < tol)) two.pass = false;
        }
        two.worst_residual = worst2.str(8);
        out.push_back(std::move(two));
    }
    return out;
}

}  // namespace gpf
