#include "gammaprod/contiguous.hpp"

namespace gpf {
namespace {

// numerator polynomial for z and z-1 (symbolic or numeric)
WxPoly z_poly(const ZArg& z) {
    return z.is_symbolic() ? WxPoly::x_monomial(1) : WxPoly::constant(*z.value);
}
WxPoly zm1_poly(const ZArg& z) {
    return z.is_symbolic() ? WxPoly(std::vector<UniPoly>{UniPoly::affine(Rational(1), Rational(-1))})
                           : WxPoly::constant(*z.value - 1);
}

// frac / (affine expression), rejecting identically-zero denominators
WxFrac div_affine_expr(const WxFrac& f, const WAffine& e) {
    if (e.c == 0) {
        GPF_CHECK(e.d != 0, "contiguous matrix denominator vanishes identically");
        return f.scaled(1 / e.d);
    }
    return f.div_affine(e.c, e.d / e.c);
}

WxFrac div_z(const WxFrac& f, const ZArg& z) {
    if (z.is_symbolic()) return f.mul_x_power(-1);
    GPF_CHECK(*z.value != 0, "z = 0 hit a denominator");
    return f.scaled(1 / *z.value);
}

WxFrac div_zm1(const WxFrac& f, const ZArg& z) {
    if (z.is_symbolic()) return f.mul_xm1_power(-1);
    GPF_CHECK(*z.value != 1, "z = 1 hit a denominator");
    return f.scaled(1 / (*z.value - 1));
}

WxFrac frac(const WxPoly& p) { return WxFrac(p); }

Mat2 matrix_a1(const AffineTriple& a, const ZArg& z) {
    const auto& [al, be, ga] = a;
    const WAffine alp1 = al.shifted(1);
    WxFrac e11 = WxFrac::constant(Rational(1));
    WxFrac e12 = div_affine_expr(frac(be.poly() * z_poly(z)), ga);
    WxFrac e21 = div_zm1(div_affine_expr(frac(-ga.poly()), alp1), z);
    WxPoly n22 = ga.poly() - al.poly() - WxPoly::constant(Rational(1)) - be.poly() * z_poly(z);
    WxFrac e22 = div_zm1(div_affine_expr(frac(n22), alp1), z);
    return {e11, e12, e21, e22};
}

Mat2 matrix_a3(const AffineTriple& a, const ZArg& z) {
    const auto& [al, be, ga] = a;
    const WAffine gma{ga.c - al.c, ga.d - al.d};
    const WAffine gmb{ga.c - be.c, ga.d - be.d};
    auto base = [&](const WxPoly& num) {
        return div_affine_expr(div_affine_expr(frac(num), gma), gmb);
    };
    WxFrac e11 = base(ga.poly() * (gma.poly() - be.poly()));
    WxFrac e12 = base(-(al.poly() * be.poly() * zm1_poly(z)));
    const WxPoly gg1 = ga.poly() * ga.shifted(1).poly();
    WxFrac e21 = div_z(base(gg1), z);
    WxFrac e22 = div_z(base(gg1 * zm1_poly(z)), z);
    return {e11, e12, e21, e22};
}

Mat2 matrix_a13(const AffineTriple& a, const ZArg& z) {
    const auto& [al, be, ga] = a;
    const WAffine gmb{ga.c - be.c, ga.d - be.d};
    const WAffine alp1 = al.shifted(1);
    const WAffine gap1 = ga.shifted(1);
    auto over_gmb = [&](const WxFrac& f) { return div_affine_expr(f, gmb); };
    WxFrac e11 = over_gmb(frac(ga.poly()));
    WxFrac e12 = over_gmb(frac(be.poly() * zm1_poly(z)));
    WxFrac e21 = over_gmb(div_z(div_affine_expr(frac(-(ga.poly() * gap1.poly())), alp1), z));
    WxPoly n22 = gap1.poly() * (ga.poly() - be.poly() * z_poly(z));
    WxFrac e22 = over_gmb(div_z(div_affine_expr(frac(n22), alp1), z));
    return {e11, e12, e21, e22};
}

AffineTriple shifted_triple(const AffineTriple& a, long dp, long dr) {
    return {a.alpha.shifted(dp), a.beta, a.gamma.shifted(dr)};
}

}  // namespace

Mat2 basic_matrix(BasicKind kind, const AffineTriple& a, const ZArg& z) {
    switch (kind) {
        case BasicKind::A1: return matrix_a1(a, z);
        case BasicKind::A3: return matrix_a3(a, z);
        case BasicKind::A13: return matrix_a13(a, z);
    }
    throw domain_error("unknown basic matrix kind");
}

Mat2 contig_product(const AffineTriple& a, const ShiftVector& shift,
                    const std::vector<int>& path, const ZArg& z) {
    long p = 0, r = 0;
    for (int s : path) {
        GPF_CHECK(s == 1 || s == 3, "path steps must be 1 or 3");
        (s == 1 ? p : r) += 1;
    }
    GPF_CHECK(p == shift.p && r == shift.r, "path does not realize the shift vector");
    GPF_CHECK(!path.empty(), "empty contiguous path");

    Mat2 acc;
    bool first = true;
    long dp = 0, dr = 0;
    for (int s : path) {
        const Mat2 m = basic_matrix(s == 1 ? BasicKind::A1 : BasicKind::A3,
                                    shifted_triple(a, dp, dr), z);
        acc = first ? m : m * acc;
        first = false;
        (s == 1 ? dp : dr) += 1;
    }
    return acc;
}

Mat2 contig_matrix(const HyperData& lambda) {
    GPF_CHECK(lambda.q == 0 && lambda.b == rat(1, 2), "contiguous matrix needs q = 0, b = 1/2");
    GPF_CHECK(1 <= lambda.p && lambda.p <= lambda.r, "contiguous matrix needs 1 <= p <= r");
    const AffineTriple base{{Rational(lambda.p), lambda.a},
                            {Rational(0), rat(1, 2)},
                            {Rational(lambda.r), Rational(0)}};
    const ZArg z = ZArg::symbolic();
    Mat2 acc;
    bool first = true;
    for (long j = 0; j < lambda.p; ++j) {
        const Mat2 m = matrix_a13(shifted_triple(base, j, j), z);
        acc = first ? m : m * acc;
        first = false;
    }
    for (long i = 0; i < lambda.r - lambda.p; ++i) {
        const Mat2 m = matrix_a3(shifted_triple(base, lambda.p, lambda.p + i), z);
        acc = first ? m : m * acc;
        first = false;
    }
    return acc;
}

PochFactors poch_factors(const Rational& c, const Rational& d, unsigned k) {
    GPF_CHECK(c != 0, "poch_factors needs a nonconstant affine base");
    PochFactors out{rat_pow(c, static_cast<long>(k)), {}};
    for (unsigned t = 0; t < k; ++t) out.monic_roots.push_back((d + Rational(static_cast<long>(t))) / c);
    return out;
}

namespace {

WxFrac mul_poch(WxFrac f, const PochFactors& pf) {
    f = f.scaled(pf.scalar);
    for (const auto& root : pf.monic_roots) f = f.mul_affine(root);
    return f;
}

WxFrac div_poch(WxFrac f, const PochFactors& pf) {
    f = f.scaled(1 / pf.scalar);
    for (const auto& root : pf.monic_roots) f = f.div_affine(Rational(1), root);
    return f;
}

WxFrac finish_extraction(WxFrac f, const char* which) {
    f = f.reduced();
    GPF_ASSERT(f.den().w_free(),
               std::string("phi extraction left a w-dependent denominator in ") + which);
    return f;
}

}  // namespace

PhiPolys extract_phi(const Mat2& A, const HyperData& lambda) {
    const long p = lambda.p, r = lambda.r;
    const Rational& a = lambda.a;
    const unsigned up = static_cast<unsigned>(p), ur = static_cast<unsigned>(r);

    // common prefactor 1 / [((r-p)w - a)_{r-p} (rw - 1/2)_r]
    std::vector<PochFactors> common;
    if (r - p > 0) common.push_back(poch_factors(Rational(r - p), -a, ur - up));
    common.push_back(poch_factors(Rational(r), rat(-1, 2), ur));

    auto extract = [&](const WxFrac& entry, bool second_row, bool second_col,
                       const char* which) {
        WxFrac f = entry;
        for (const auto& pf : common) f = mul_poch(f, pf);
        const unsigned alpha_len = second_row ? up : up - 1;  // (pw+a+1)_p or _{p-1}
        if (alpha_len > 0) f = mul_poch(f, poch_factors(Rational(p), a + 1, alpha_len));
        // numerator prefactors: (rw)_r / (rw+1)_{r-1} on the first row,
        // (rw)_{r+1} / (rw+1)_r on the second
        const PochFactors pf =
            second_col ? poch_factors(Rational(r), Rational(1), second_row ? ur : ur - 1)
                       : poch_factors(Rational(r), Rational(0), second_row ? ur + 1 : ur);
        f = div_poch(f, pf);
        return finish_extraction(f, which);
    };

    PhiPolys out;
    out.phi11 = extract(A.a11, false, false, "phi11");
    out.phi12 = extract(A.a12, false, true, "phi12");
    out.phi21 = extract(A.a21, true, false, "phi21");
    out.phi22 = extract(A.a22, true, true, "phi22");
    return out;
}

RQ extract_rq(const Mat2& A) { return {A.a11, A.a12}; }

bool q_vanishes(const Mat2& A, const HyperData& lambda) {
    const WxPoly& num = A.a12.num();
    for (const auto& coeff : num.wcoeffs())
        if (!vanishes_at_x(coeff, lambda)) return false;
    return true;
}

UniPoly leading_y_poly(const ShiftVector& shift) {
    const long p = shift.p, r = shift.r;
    GPF_CHECK(0 < p && p < r, "Y polynomial needs 0 < p < r");
    const Rational lead = Rational(int_pow(BigInt(p), static_cast<unsigned long>(p)) *
                                   int_pow(BigInt(r - p), static_cast<unsigned long>(r - p)));
    const Rational rr = Rational(int_pow(BigInt(r), static_cast<unsigned long>(r)));
    UniPoly y = UniPoly::monomial(static_cast<std::size_t>(r), lead);
    const UniPoly onemz = UniPoly::affine(Rational(-1), Rational(1));
    y -= onemz.pow(static_cast<unsigned>(r - p)).scaled(rr);
    return y;
}

LeadingY leading_y(const HyperData& lambda) {
    LeadingY out{leading_y_poly({lambda.p, lambda.r}), std::nullopt, false};
    if (lambda.x_is_rational()) {
        out.value = out.poly.eval(lambda.x_rational());
        out.vanishes_at_x = (*out.value == 0);
    } else {
        out.vanishes_at_x = vanishes_at_x(out.poly, lambda);
    }
    return out;
}

}  // namespace gpf
