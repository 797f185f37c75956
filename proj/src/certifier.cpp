#include "gammaprod/certifier.hpp"

#include <algorithm>

#include "gammaprod/algargs.hpp"
#include "gammaprod/kernels.hpp"
#include "gammaprod/numeric.hpp"

namespace gpf {

Classification classify(const HyperData& lambda) {
    GPF_CHECK(lambda.in_region_I(), "classification needs 0 < p < r, q = 0, 0 < x < 1");
    if (is_nonpositive_integer(lambda.b)) return Classification::Elementary;
    if ((lambda.p - lambda.r) % 2 == 0 && lambda.b == rat(1, 2))
        return Classification::NonElementaryCandidate;
    return Classification::Excluded;
}

Rational chi_param(long j, long k, long s) {
    return -(Rational(j) + Rational(s - 1) * (Rational(k) - rat(1, 2))) / Rational(s);
}

CriterionOutcome solution_criterion_explain(long p, long s, long j, long j_prime) {
    GPF_CHECK(s >= 2, "criterion needs s >= 2");
    GPF_CHECK(p >= 1, "criterion needs p >= 1");
    GPF_CHECK(j >= 0 && j_prime >= 0 && j + j_prime == s - 2,
              "criterion needs j, j' >= 0 with j + j' = s - 2");
    if ((p * (s - 1)) % 2 != 0)
        return {false, "parity: p (s-1) = " + std::to_string(p * (s - 1)) + " is odd"};
    const AlgebraicReal x = x_of_s(s);
    const long r = p * s;
    for (long k = 0; k <= r - 1; ++k) {
        const long kp = r - 1 - k;
        const UniPoly prod =
            terminating_sum(static_cast<unsigned>(k), chi_param(j, k, s), rat(1, 2) - Rational(k)) *
            terminating_sum(static_cast<unsigned>(kp), chi_param(j_prime, kp, s),
                            rat(1, 2) - Rational(kp));
        if (!alg_is_root(prod, x))
            return {false, "terminating-sum product nonzero at split (k, k') = (" +
                               std::to_string(k) + ", " + std::to_string(kp) + ")"};
    }
    return {true, ""};
}

bool solution_criterion(long p, long s, long j, long j_prime) {
    return solution_criterion_explain(p, s, j, j_prime).ok;
}

HyperData make_solution_data(long p, long s, long j) {
    HyperData lam;
    lam.p = p;
    lam.q = 0;
    lam.r = p * s;
    lam.a = rat(j, s);
    lam.b = rat(1, 2);
    const AlgebraicReal x = x_of_s(s);
    if (x.is_rational())
        lam.x = *x.exact;
    else
        lam.x = x;
    return lam;
}

HyperData dual(const HyperData& lambda) {
    HyperData out = lambda;
    out.a = 1 - rat(2 * lambda.p, lambda.r) - lambda.a;
    out.b = 1 - rat(2 * lambda.q, lambda.r) - lambda.b;
    return out;
}

namespace {
std::variant<Rational, AlgebraicReal> one_minus_x(const HyperData& lambda) {
    if (lambda.x_is_rational()) return Rational(1 - lambda.x_rational());
    const AlgebraicReal& a = std::get<AlgebraicReal>(lambda.x);
    // defining(1 - z), interval reflected
    UniPoly comp;
    const UniPoly onemz = UniPoly::affine(Rational(-1), Rational(1));
    for (int k = 0; k <= a.defining.degree(); ++k)
        comp += onemz.pow(static_cast<unsigned>(k))
                    .scaled(a.defining[static_cast<std::size_t>(k)]);
    AlgebraicReal out{comp.primitive(), 1 - a.hi, 1 - a.lo, std::nullopt};
    return out;
}
}  // namespace

HyperData reciprocal(const HyperData& lambda) {
    const long denom = lambda.r - lambda.p - lambda.q;
    GPF_CHECK(denom != 0, "reciprocity undefined at r = p + q");
    HyperData out;
    out.p = -lambda.p;
    out.q = -lambda.q;
    out.r = denom;
    out.a = (Rational(lambda.r - lambda.q) * (1 - lambda.a) -
             Rational(lambda.p) * lambda.b) /
            Rational(denom);
    out.b = (Rational(lambda.r - lambda.p) * (1 - lambda.b) -
             Rational(lambda.q) * lambda.a) /
            Rational(denom);
    out.x = one_minus_x(lambda);
    return out;
}

HyperData multiple(const HyperData& lambda, long k) {
    GPF_CHECK(k >= 1, "multiple needs k >= 1");
    HyperData out = lambda;
    out.p *= k;
    out.q *= k;
    out.r *= k;
    return out;
}

HyperData square_symmetry(const HyperData& lambda, SquareSymmetry kind) {
    HyperData out = lambda;
    if (kind == SquareSymmetry::Swap) {
        std::swap(out.p, out.q);
        std::swap(out.a, out.b);
    } else {
        out.p = lambda.r - lambda.p;
        out.q = lambda.r - lambda.q;
        out.a = -lambda.a;
        out.b = -lambda.b;
    }
    return out;
}

std::vector<Rational> dual_v(const std::vector<Rational>& v_star, long r) {
    std::vector<Rational> out;
    out.reserve(v_star.size());
    for (const auto& v : v_star) out.push_back(1 - rat(2, r) - v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> reciprocal_v(const std::vector<Rational>& v_arranged,
                                   const HyperData& lambda) {
    const long rp = lambda.r - lambda.p;
    GPF_CHECK(static_cast<long>(v_arranged.size()) == lambda.r,
              "arranged v-multiset must have r entries");
    const Rational shift = (rat(1, 2) - lambda.a) / Rational(rp);
    std::vector<Rational> out;
    for (long i = 0; i < rp; ++i)
        out.push_back(v_arranged[static_cast<std::size_t>(i)] - shift);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> multiple_v(const std::vector<Rational>& v, long k) {
    GPF_CHECK(k >= 1, "multiple needs k >= 1");
    std::vector<Rational> out;
    for (const auto& vi : v)
        for (long m = 0; m < k; ++m) out.push_back((vi + Rational(m)) / Rational(k));
    std::sort(out.begin(), out.end());
    return out;
}

VSets assemble_v(const HyperData& lambda) {
    const long p = lambda.p, r = lambda.r;
    GPF_CHECK(lambda.in_region_I() && lambda.q == 0 && lambda.b == rat(1, 2),
              "v-assembly needs certified data in the south-side region");

    std::vector<Rational> candidates;
    for (long i = 0; i < p; ++i) candidates.push_back((Rational(i) + lambda.a) / Rational(p));
    for (long jj = 0; jj < r - p; ++jj)
        candidates.push_back((Rational(jj) - lambda.a) / Rational(r - p));
    for (long jj = 0; jj < r; ++jj) candidates.push_back((Rational(jj) - rat(1, 2)) / Rational(r));
    std::sort(candidates.begin(), candidates.end());

    WxPoly P = p_product(lambda);
    GPF_ASSERT(P.deg_w() == static_cast<int>(r),
               "P(w; lambda) must have degree r exactly for a certified solution");

    std::vector<Rational> v;
    WxPoly cur = P;
    std::size_t i = 0;
    while (i < candidates.size()) {
        std::size_t mult = 1;
        while (i + mult < candidates.size() && candidates[i + mult] == candidates[i]) ++mult;
        for (std::size_t t = 0; t < mult; ++t) {
            const auto [q, rem] = cur.div_affine(candidates[i]);
            if (!vanishes_at_x(rem, lambda)) break;
            cur = q;
            v.push_back(candidates[i]);
        }
        i += mult;
    }
    GPF_ASSERT(static_cast<long>(v.size()) == r,
               "trial division must extract exactly r roots from the candidate set");
    GPF_ASSERT(cur.deg_w() == 0 && !vanishes_at_x(cur.wcoeff(0), lambda),
               "leading constant of P must be nonzero");

    // sum rule and range
    Rational sum(0);
    for (const auto& vi : v) {
        sum += vi;
        GPF_ASSERT(vi >= 0 && vi < 1, "v-values must lie in [0, 1)");
    }
    GPF_ASSERT(sum == rat(r - 1, 2), "v-values must sum to (r-1)/2");

    VSets out;
    out.v = v;  // already ascending (candidates sorted)

    // complement within the candidate multiset
    {
        std::vector<Rational> rest;
        std::size_t a = 0;
        for (const auto& c : candidates) {
            if (a < v.size() && v[a] == c) {
                ++a;
                continue;
            }
            rest.push_back(c);
        }
        GPF_ASSERT(a == v.size() && static_cast<long>(rest.size()) == r,
                   "candidate complement must have r entries");
        out.v_star = std::move(rest);
    }

    // division relation: the p values (i+a)/p all occur in v; move them last
    {
        std::vector<Rational> principal;
        for (long ii = 0; ii < p; ++ii)
            principal.push_back((Rational(ii) + lambda.a) / Rational(p));
        std::sort(principal.begin(), principal.end());
        std::vector<Rational> head = v;
        for (const auto& c : principal) {
            auto it = std::find(head.begin(), head.end(), c);
            GPF_ASSERT(it != head.end(),
                       "division relation violated: principal value missing from v");
            head.erase(it);
        }
        out.v_arranged = std::move(head);
        out.v_arranged.insert(out.v_arranged.end(), principal.begin(), principal.end());
    }
    return out;
}

namespace {
std::string complex_real_str(const BigComplex& c, std::size_t digits) {
    // constants of these identities are real; imaginary dust is rounding noise
    return c.re.str(digits);
}
}  // namespace

GpfCertificate build_certificate(long p, long s, long j, mpfr_prec_t precision,
                                 unsigned seed) {
    const auto outcome = solution_criterion_explain(p, s, j, s - 2 - j);
    if (!outcome.ok) throw domain_error("not a solution: " + outcome.failure);

    GpfCertificate cert;
    cert.lambda = make_solution_data(p, s, j);
    cert.s = s;
    cert.j = j;
    cert.j_prime = s - 2 - j;
    cert.seed = seed;
    cert.precision_bits = static_cast<long>(precision);
    const long r = cert.lambda.r;

    const VSets vs = assemble_v(cert.lambda);
    cert.v = vs.v;
    cert.v_arranged = vs.v_arranged;
    cert.v_star = vs.v_star;
    cert.v_prime = dual_v(vs.v_star, r);
    cert.v_check = reciprocal_v(vs.v_arranged, cert.lambda);
    cert.sum_check = rat(r - 1, 2);
    {
        Rational sum_prime(0);
        for (const auto& vi : cert.v_prime) sum_prime += vi;
        GPF_ASSERT(sum_prime == cert.sum_check, "dual v-values must sum to (r-1)/2");
    }
    cert.delta = Rational(int_pow(BigInt(p), static_cast<unsigned long>(p)) *
                          int_pow(BigInt(r - p), static_cast<unsigned long>(r - p))) /
                 Rational(int_pow(BigInt(r), static_cast<unsigned long>(r)));
    cert.parity_ok = (p * (s - 1)) % 2 == 0;
    cert.r_minus_p_even = (r - p) % 2 == 0;
    GPF_ASSERT(cert.parity_ok && cert.r_minus_p_even, "parity facts violated");

    cert.multiple_of_p = p;
    for (long p0 = 1; p0 < p; ++p0)
        if (p % p0 == 0 && solution_criterion(p0, s, j, s - 2 - j)) {
            cert.multiple_of_p = p0;
            break;
        }
    cert.primitive = cert.multiple_of_p == p;

    // numeric constants, fixed from the first admissible sample
    const auto samples = certificate_samples(cert, seed);
    GPF_CHECK(!samples.empty(), "no admissible sample point");
    const Rational w0 = samples.front();
    const mpfr_prec_t wp = precision + 32;
    const std::size_t digits =
        static_cast<std::size_t>(static_cast<double>(precision) * 0.30103) + 2;
    std::vector<Rational> nums;
    for (long i = 0; i < r; ++i) nums.push_back(rat(i, r));
    cert.C = complex_real_str(f_val(w0, cert.lambda, wp) / gamma_quotient(w0, nums, cert.v, wp),
                              digits);
    cert.C_prime = complex_real_str(
        f_val(w0, dual(cert.lambda), wp) / gamma_quotient(w0, nums, cert.v_prime, wp), digits);
    std::vector<Rational> nums_check;
    for (long i = 0; i < r - p; ++i) nums_check.push_back(rat(i, r - p));
    cert.C_check = complex_real_str(f_val(w0, reciprocal(cert.lambda), wp) /
                                        gamma_quotient(w0, nums_check, cert.v_check, wp),
                                    digits);
    return cert;
}

std::vector<GpfCertificate> search_solutions(long s_max, long p_max,
                                             mpfr_prec_t precision, unsigned seed) {
    GPF_CHECK(s_max >= 2 && p_max >= 1, "search needs s_max >= 2, p_max >= 1");
    std::vector<GpfCertificate> out;
    for (long s = 2; s <= s_max; ++s)
        for (long p = 1; p <= p_max; ++p)
            for (long j = 0; j <= s - 2; ++j)
                if (solution_criterion(p, s, j, s - 2 - j))
                    out.push_back(build_certificate(p, s, j, precision, seed));
    return out;
}

}  // namespace gpf
