#include "gammaprod/algargs.hpp"

#include <algorithm>

namespace gpf {
namespace {

Rational exact_rational(const BigFloat& x) {
    if (x.is_zero()) return Rational(0);
    BigInt m;
    const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.raw());
    Rational q(m);
    if (e >= 0) {
        mpz_mul_2exp(q.get_num().get_mpz_t(), q.get_num().get_mpz_t(),
                     static_cast<mp_bitcnt_t>(e));
    } else {
        q /= Rational(BigInt(1) << static_cast<mp_bitcnt_t>(-e));
    }
    q.canonicalize();
    return q;
}

// Enclosure of sin(pi * c) for rational c in [lo, hi] (tiny width), with the
// argument reduced modulo 2 exactly before any rounding happens.
FloatInterval sin_pi_range(const Rational& lo, const Rational& hi, mpfr_prec_t wp) {
    const BigInt k = 2 * floor_rat(lo / 2);
    const Rational rlo = lo - Rational(k), rhi = hi - Rational(k);
    const FloatInterval c(BigFloat::from(rlo, wp, MPFR_RNDD), BigFloat::from(rhi, wp, MPFR_RNDU));
    return (c * FloatInterval::pi(wp)).sin_enclosure();
}

FloatInterval sin_pi_at(const Rational& c, mpfr_prec_t wp) { return sin_pi_range(c, c, wp); }

// G_s(theta) with theta = c * pi:
//   sin(theta) s^s (-1)^{s-1} sin^{s-1}((s-1) theta) - (s-1)^{s-1} sin^s(s theta)
FloatInterval angular_eval(long s, const Rational& c, mpfr_prec_t wp) {
    const FloatInterval s1 = sin_pi_at(c, wp);
    const FloatInterval s2 = sin_pi_at(c * Rational(s - 1), wp);
    const FloatInterval s3 = sin_pi_at(c * Rational(s), wp);
    Rational ss(int_pow(BigInt(s), static_cast<unsigned long>(s)));
    if (s % 2 == 0) ss = -ss;  // (-1)^{s-1}
    const Rational s1s1(int_pow(BigInt(s - 1), static_cast<unsigned long>(s - 1)));
    const FloatInterval t1 =
        (s1 * s2.pow_ui(static_cast<unsigned long>(s - 1))).scaled(ss, wp);
    const FloatInterval t2 = s3.pow_ui(static_cast<unsigned long>(s)).scaled(s1s1, wp);
    return t1 - t2;
}

int certified_sign(long s, const Rational& c, mpfr_prec_t wp_start) {
    for (mpfr_prec_t wp = wp_start; wp <= wp_start * 16; wp *= 2) {
        const int sg = angular_eval(s, c, wp).sign();
        if (sg != 0) return sg;
    }
    throw internal_error("angular bisection: sign undecidable at available precision");
}

FloatInterval interval_div(const FloatInterval& a, const FloatInterval& b) {
    GPF_CHECK(b.sign() != 0, "interval division by an enclosure straddling zero");
    const mpfr_prec_t p = std::max(a.prec(), b.prec());
    BigFloat rl(p), rh(p);
    mpfr_ui_div(rl.raw(), 1, b.hi.raw(), MPFR_RNDD);
    mpfr_ui_div(rh.raw(), 1, b.lo.raw(), MPFR_RNDU);
    return a * FloatInterval(rl, rh);
}

BigFloat midpoint(const FloatInterval& iv) {
    BigFloat m = iv.lo + iv.hi;
    mpfr_div_ui(m.raw(), m.raw(), 2, MPFR_RNDN);
    return m;
}

FloatInterval from_alg(const AlgebraicReal& a, mpfr_prec_t wp) {
    if (a.exact) return FloatInterval::exact(*a.exact, wp);
    return {BigFloat::from(a.lo, wp, MPFR_RNDD), BigFloat::from(a.hi, wp, MPFR_RNDU)};
}

}  // namespace

UniPoly phi_poly(long s) {
    GPF_CHECK(s >= 2, "phi_s needs s >= 2");
    const Rational lead(int_pow(BigInt(s - 1), static_cast<unsigned long>(s - 1)));
    const Rational ss(int_pow(BigInt(s), static_cast<unsigned long>(s)));
    UniPoly out = UniPoly::monomial(static_cast<std::size_t>(s), lead);
    out -= UniPoly::affine(Rational(-1), Rational(1)).pow(static_cast<unsigned>(s - 1)).scaled(ss);
    return out;
}

UniPoly psi_poly(long s) {
    GPF_CHECK(s >= 2, "psi_s needs s >= 2");
    UniPoly z = UniPoly::affine(Rational(1), Rational(0));
    UniPoly out = z.pow(static_cast<unsigned>(s - 1)) * UniPoly::affine(Rational(1), Rational(s));
    out -= UniPoly::constant(Rational(int_pow(BigInt(s - 1), static_cast<unsigned long>(s - 1))));
    return out;
}

UniPoly nontrivial_factor(long s) {
    const UniPoly psi = psi_poly(s);
    if (s % 2 == 0) return psi;
    const UniPoly sq = UniPoly::affine(Rational(1), Rational(s - 1)).pow(2);
    const auto [q, rem] = psi.divrem(sq);
    GPF_ASSERT(rem.is_zero(), "trivial double root division left a remainder");
    return q;
}

AlgebraicReal y_of_s(long s) {
    return isolate_root(psi_poly(s), Interval(Rational(0), Rational(s - 1)));
}

AlgebraicReal x_of_s(long s) {
    // transport the nontrivial factor through y = s(1-z)/z:
    //   X(z) = z^d T(s(1-z)/z) = sum t_k s^k (1-z)^k z^{d-k}
    const UniPoly T = nontrivial_factor(s);
    const int d = T.degree();
    UniPoly X;
    const UniPoly onemz = UniPoly::affine(Rational(-1), Rational(1));
    for (int k = 0; k <= d; ++k) {
        const Rational& tk = T[static_cast<std::size_t>(k)];
        if (tk == 0) continue;
        const Rational c = tk * Rational(int_pow(BigInt(s), static_cast<unsigned long>(k)));
        X += (onemz.pow(static_cast<unsigned>(k)) *
              UniPoly::monomial(static_cast<std::size_t>(d - k), Rational(1)))
                 .scaled(c);
    }
    GPF_ASSERT(sturm_count(X, Interval(Rational(0), Rational(1))) == 1,
               "transported argument polynomial must have one unit-interval root");
    return isolate_root(X, Interval(Rational(0), Rational(1)));
}

long least_prime_factor(long n) {
    GPF_CHECK(n >= 2, "least prime factor needs n >= 2");
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

namespace {
DeltaBound delta_from_prime(long s, long prime) {
    const mpfr_prec_t wp = 128;
    BigFloat logp_lo(wp), logp_hi(wp), logs_lo(wp), logs_hi(wp);
    mpfr_set_si(logp_lo.raw(), prime, MPFR_RNDD);
    mpfr_log(logp_lo.raw(), logp_lo.raw(), MPFR_RNDD);
    mpfr_set_si(logp_hi.raw(), prime, MPFR_RNDU);
    mpfr_log(logp_hi.raw(), logp_hi.raw(), MPFR_RNDU);
    mpfr_set_si(logs_lo.raw(), s - 1, MPFR_RNDD);
    mpfr_log(logs_lo.raw(), logs_lo.raw(), MPFR_RNDD);
    mpfr_set_si(logs_hi.raw(), s - 1, MPFR_RNDU);
    mpfr_log(logs_hi.raw(), logs_hi.raw(), MPFR_RNDU);
    BigFloat lo(wp), hi(wp);
    mpfr_mul_si(lo.raw(), logp_lo.raw(), s - 1, MPFR_RNDD);
    mpfr_add_ui(logs_hi.raw(), logs_hi.raw(), 1, MPFR_RNDU);
    mpfr_div(lo.raw(), lo.raw(), logs_hi.raw(), MPFR_RNDD);
    mpfr_mul_si(hi.raw(), logp_hi.raw(), s - 1, MPFR_RNDU);
    mpfr_add_ui(logs_lo.raw(), logs_lo.raw(), 1, MPFR_RNDD);
    mpfr_div(hi.raw(), hi.raw(), logs_lo.raw(), MPFR_RNDU);
    return {exact_rational(lo), exact_rational(hi)};
}
}  // namespace

DeltaBound delta_bound(long s) {
    GPF_CHECK(s >= 3, "delta(s) needs s >= 3");
    return delta_from_prime(s, least_prime_factor(s - 1));
}

DeltaBound delta_parity_bound(long s) {
    GPF_CHECK(s >= 3, "parity delta bound needs s >= 3");
    return delta_from_prime(s, s % 2 == 0 ? 3 : 2);
}

BigFloat c_of_s(long s, mpfr_prec_t precision) {
    GPF_CHECK(s >= 2, "c(s) needs s >= 2");
    const mpfr_prec_t wp = precision + 64;
    // u_s(t) = t ((s+t)/(s-1))^{s-1}, strictly increasing for t > -1
    auto sign_at = [&](const Rational& t) {
        for (mpfr_prec_t w = wp; w <= wp * 16; w *= 2) {
            const FloatInterval base =
                FloatInterval::exact((Rational(s) + t) / Rational(s - 1), w);
            const FloatInterval u =
                base.pow_ui(static_cast<unsigned long>(s - 1)).scaled(t, w) -
                FloatInterval::exact(Rational(1), w);
            if (u.sign() != 0) return u.sign();
        }
        throw internal_error("c(s) bisection: sign undecidable");
    };
    Rational lo(0), hi(1);
    const Rational target = rat_pow(rat(1, 2), static_cast<long>(precision));
    while (hi - lo > target) {
        const Rational mid = (lo + hi) / 2;
        (sign_at(mid) < 0 ? lo : hi) = mid;
    }
    return BigFloat::from((lo + hi) / 2, precision);
}

RootReport localize_roots(long s, mpfr_prec_t precision) {
    GPF_CHECK(s >= 2, "root localization needs s >= 2");
    const mpfr_prec_t wp = precision + 64;
    RootReport rep;
    rep.s = s;
    rep.precision = precision;
    const UniPoly psi = psi_poly(s);

    rep.positive_root = y_of_s(s);
    refine(rep.positive_root, rat_pow(rat(1, 2), static_cast<long>(precision)));
    if (s % 2 == 0) {
        rep.negative_root = isolate_root(psi, Interval(Rational(-s - 1), Rational(1 - s)));
        refine(*rep.negative_root, rat_pow(rat(1, 2), static_cast<long>(precision)));
    } else {
        const Rational t(1 - s);
        rep.trivial_double_root = psi.eval(t) == 0 && psi.derivative().eval(t) == 0 &&
                                  psi.derivative().derivative().eval(t) != 0;
        GPF_ASSERT(rep.trivial_double_root, "odd psi_s must have the double root at 1-s");
    }

    const long m = s / 2 - 1;
    std::vector<FloatInterval> r_iv, rho_iv;
    std::vector<Rational> c_mid;
    rep.checks.theta_brackets = true;
    for (long j = 1; j <= m; ++j) {
        Rational lo = rat(2 * j, s), hi = rat(2 * j, s - 1);
        const Rational wlo = lo, whi = hi;
        GPF_ASSERT(certified_sign(s, lo, wp) > 0 && certified_sign(s, hi, wp) < 0,
                   "angular window endpoint signs violated");
        const Rational target = rat_pow(rat(1, 2), static_cast<long>(precision + 8));
        while (hi - lo > target) {
            const Rational mid = (lo + hi) / 2;
            (certified_sign(s, mid, wp) > 0 ? lo : hi) = mid;
        }
        rep.checks.theta_brackets = rep.checks.theta_brackets && wlo < lo && hi < whi;
        c_mid.push_back((lo + hi) / 2);
        const FloatInterval sin1 = sin_pi_range(lo, hi, wp);
        const FloatInterval sin_s1 =
            sin_pi_range(lo * Rational(s - 1), hi * Rational(s - 1), wp);
        const FloatInterval sin_s = sin_pi_range(lo * Rational(s), hi * Rational(s), wp);
        const FloatInterval r = interval_div(-sin_s1.scaled(Rational(s), wp), sin_s);
        const FloatInterval rho = interval_div(sin1.scaled(Rational(s), wp), sin_s);
        rep.pairs.push_back(
            ComplexPair{midpoint(FloatInterval::exact(c_mid.back(), wp) * FloatInterval::pi(wp)),
                        midpoint(r), midpoint(rho)});
        r_iv.push_back(r);
        rho_iv.push_back(rho);
    }

    // ordering chain r0 < r1 < ... < rm < s-1 and rho decreasing, > 1
    const FloatInterval r0 = from_alg(rep.positive_root, wp);
    bool ordering = true;
    {
        FloatInterval prev = r0;
        for (const auto& ri : r_iv) {
            ordering = ordering && (prev.hi < ri.lo);
            prev = ri;
        }
        ordering = ordering && (prev.hi < BigFloat::from(Rational(s - 1), wp));
        FloatInterval prev_rho = r0 + FloatInterval::exact(Rational(s), wp);
        for (const auto& rho : rho_iv) {
            ordering = ordering && (rho.hi < prev_rho.lo);
            prev_rho = rho;
        }
        ordering = ordering && (prev_rho.lo > BigFloat::from(Rational(1), wp));
    }
    rep.checks.ordering_chain = ordering;

    bool modulus = alg_cmp(rep.positive_root, Rational(s - 1)) < 0;
    for (const auto& ri : r_iv)
        modulus = modulus && (ri.hi < BigFloat::from(Rational(s - 1), wp));
    rep.checks.modulus_bound = modulus;

    rep.checks.negative_bracket =
        s % 2 == 1 || (alg_cmp(*rep.negative_root, Rational(-s - 1)) > 0 &&
                       alg_cmp(*rep.negative_root, Rational(1 - s)) < 0);

    if (m >= 1) {
        const FloatInterval rho_m = rho_iv.back();
        if (s % 2 == 0) {
            const FloatInterval bound = sin_pi_at(rat(1, s - 1), wp).scaled(Rational(s), wp);
            rep.checks.rho_floor =
                (rho_m.lo > bound.hi) && (bound.lo > FloatInterval::pi(wp).hi);
        } else {
            const FloatInterval bound = sin_pi_at(rat(2, s - 1), wp).scaled(Rational(s), wp);
            rep.checks.rho_floor = rho_m.lo > bound.hi;
        }
    } else {
        rep.checks.rho_floor = true;
    }

    // census: rebuild psi_s from the localized roots and compare coefficients
    {
        std::vector<BigFloat> poly{BigFloat::from(Rational(1), wp)};
        auto mul_linear = [&](const BigFloat& root) {
            std::vector<BigFloat> out(poly.size() + 1, BigFloat(wp));
            for (std::size_t i = 0; i < poly.size(); ++i) {
                out[i + 1] = out[i + 1] + poly[i];
                out[i] = out[i] - root * poly[i];
            }
            poly = std::move(out);
        };
        auto mul_quadratic = [&](const BigFloat& b1, const BigFloat& b0) {
            // multiply by z^2 + b1 z + b0
            std::vector<BigFloat> out(poly.size() + 2, BigFloat(wp));
            for (std::size_t i = 0; i < poly.size(); ++i) {
                out[i + 2] = out[i + 2] + poly[i];
                out[i + 1] = out[i + 1] + b1 * poly[i];
                out[i] = out[i] + b0 * poly[i];
            }
            poly = std::move(out);
        };
        mul_linear(BigFloat::from(rep.positive_root.mid(), wp));
        if (s % 2 == 0) {
            mul_linear(BigFloat::from(rep.negative_root->mid(), wp));
        } else {
            mul_linear(BigFloat::from(Rational(1 - s), wp));
            mul_linear(BigFloat::from(Rational(1 - s), wp));
        }
        for (std::size_t idx = 0; idx < rep.pairs.size(); ++idx) {
            const BigFloat theta = BigFloat::from(c_mid[idx], wp) * BigFloat::pi(wp);
            const BigFloat& rj = rep.pairs[idx].r;
            mul_quadratic(-(rj + rj) * cos(theta), rj * rj);
        }
        const BigFloat tol =
            BigFloat::two_to(-static_cast<long>(precision) / 2, wp) *
            BigFloat::from(Rational(int_pow(BigInt(s), static_cast<unsigned long>(s))), wp);
        bool census = poly.size() == static_cast<std::size_t>(s) + 1;
        if (census)
            for (long k = 0; k <= s; ++k) {
                const BigFloat diff = poly[static_cast<std::size_t>(k)] -
                                      BigFloat::from(psi[static_cast<std::size_t>(k)], wp);
                census = census && (abs(diff) < tol);
            }
        rep.checks.census = census;
    }

    rep.checks.r0_above_one = s <= 3 || alg_cmp(rep.positive_root, Rational(1)) > 0;

    if (s >= 26) {
        // R = (s-1) / (1 + (1 + log(s-1))/(s-1)), upper-rounded
        BigFloat t(wp);
        mpfr_set_si(t.raw(), s - 1, MPFR_RNDD);
        mpfr_log(t.raw(), t.raw(), MPFR_RNDD);
        mpfr_add_ui(t.raw(), t.raw(), 1, MPFR_RNDD);
        mpfr_div_si(t.raw(), t.raw(), s - 1, MPFR_RNDD);
        mpfr_add_ui(t.raw(), t.raw(), 1, MPFR_RNDD);
        BigFloat R(wp);
        mpfr_si_div(R.raw(), s - 1, t.raw(), MPFR_RNDU);
        rep.checks.r0_above_R = BigFloat::from(rep.positive_root.lo, wp, MPFR_RNDD) > R;
    }

    return rep;
}

IntegerInvariants integer_invariants(long s) {
    GPF_CHECK(s >= 2, "integer invariants need s >= 2");
    IntegerInvariants out;
    out.s = s;
    if (s == 2) {
        out.d = 2;
        out.M = -1;
        out.N = -1;
        return out;
    }
    const UniPoly P = nontrivial_factor(s);
    out.d = P.degree();
    const Rational Mq = P.eval(Rational(-s)), Nq = P.eval(Rational(0));
    GPF_ASSERT(is_integer(Mq) && is_integer(Nq), "M, N must be rational integers");
    const int sign = out.d % 2 == 0 ? 1 : -1;
    out.M = sign * Mq.get_num();
    out.N = sign * Nq.get_num();
    const BigInt pw = int_pow(BigInt(s - 1), static_cast<unsigned long>(out.d));
    GPF_ASSERT(out.N != 0 && pw % out.N == 0, "n = (s-1)^d / N must be an integer");
    const BigInt n = pw / out.N;
    GPF_ASSERT(abs(n) >= 2, "|n| >= 2 violated");
    GPF_ASSERT(BigInt(s - 1) % n == 0, "n | s-1 violated");
    BigInt npow;
    mpz_pow_ui(npow.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(s - 1));
    GPF_ASSERT(npow == out.M, "M = n^{s-1} violated");
    GPF_ASSERT(n * out.N == pw, "n N = (s-1)^d violated");
    out.n = n;
    return out;
}

DegreeReport degree_report(long s) {
    GPF_CHECK(s >= 2, "degree report needs s >= 2");
    DegreeReport rep;
    rep.s = s;
    if (s >= 3) {
        rep.p_s = least_prime_factor(s - 1);
        rep.delta = delta_bound(s);
    } else {
        rep.p_s = 0;
        rep.delta = {Rational(0), Rational(0)};
    }
    const UniPoly T = nontrivial_factor(s);
    const auto irr = irreducibility_certify(T);
    rep.factor_verdict = irr.verdict;
    if (irr.verdict == Irreducibility::Composite)
        rep.factor_degrees = {irr.witness.degree(), T.degree() - irr.witness.degree()};
    else
        rep.factor_degrees = {T.degree()};
    rep.invariants = integer_invariants(s);
    return rep;
}

DegreeClassification degree_classify(int max_deg) {
    GPF_CHECK(max_deg >= 1, "degree classification needs max_deg >= 1");
    DegreeClassification out;
    if (max_deg >= 2) out.pre_refinement.push_back(2);
    for (long s = 3;; ++s) {
        const DeltaBound b = delta_parity_bound(s);
        if (b.lo < Rational(max_deg)) {
            out.pre_refinement.push_back(s);
        } else if (s >= 4 && delta_parity_bound(s - 1).lo >= Rational(max_deg)) {
            // both parity proxies increase in s, so nothing larger survives
            break;
        }
        GPF_ASSERT(s < 100000, "degree classification failed to terminate");
    }
    for (long s : out.pre_refinement) {
        int deg_x;
        if (s == 2) {
            deg_x = 2;
        } else if (s <= 25) {
            const UniPoly T = nontrivial_factor(s);
            const auto irr = irreducibility_certify(T);
            GPF_ASSERT(irr.verdict == Irreducibility::Irreducible,
                       "nontrivial factor expected irreducible at desk scale");
            deg_x = T.degree();
        } else {
            out.refined.push_back(s);  // bound-only regime beyond desk scale
            continue;
        }
        if (deg_x <= max_deg) out.refined.push_back(s);
    }
    return out;
}

}  // namespace gpf
