#include <random>
#include <algorithm>

#include "doctest.h"
#include "gammaprod/algebraic.hpp"

using namespace gpf;

namespace {

UniPoly psi(long s) {
    // z^{s-1} (z + s) - (s-1)^{s-1}
    UniPoly z = UniPoly::affine(Rational(1), Rational(0));
    UniPoly out = z.pow(static_cast<unsigned>(s - 1)) * UniPoly::affine(Rational(1), Rational(s));
    out -= UniPoly::constant(Rational(int_pow(BigInt(s - 1), static_cast<unsigned long>(s - 1))));
    return out;
}

UniPoly random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> degd(0, max_deg);
    std::uniform_int_distribution<long> cd(-6, 6);
    const int d = degd(rng);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (auto& q : c) q = Rational(cd(rng));
    UniPoly f{std::move(c)};
    return f.is_zero() ? UniPoly::constant(Rational(1)) : f;
}

}  // namespace

TEST_CASE("rational parsing and normalization") {
    CHECK(rat(6, 8) == rat(3, 4));
    CHECK(parse_rational("3/4") == rat(3, 4));
    CHECK(parse_rational("-12") == rat(-12));
    CHECK(rational_str(rat(-3, 4)) == "-3/4");
    CHECK(rational_str(rat(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), domain_error);
    CHECK_THROWS_AS(parse_rational("a/b"), domain_error);
    CHECK(rat_pow(rat(2, 3), -2) == rat(9, 4));
    CHECK(dist_to_integer(rat(7, 3)) == rat(1, 3));
    CHECK(dist_to_nonpositive_integer(rat(3, 2)) == rat(3, 2));
    CHECK(dist_to_nonpositive_integer(rat(-5, 2)) == rat(1, 2));
}

TEST_CASE("polynomial arithmetic basics") {
    const UniPoly f{rat(-1), rat(2), rat(1)};  // z^2 + 2z - 1
    CHECK(f.degree() == 2);
    CHECK(f.eval(rat(1)) == rat(2));
    const auto [q, r] = f.divrem(UniPoly::affine(rat(1), rat(-1)));
    CHECK(q == UniPoly{rat(3), rat(1)});
    CHECK(r == UniPoly::constant(rat(2)));
    CHECK(f.derivative() == UniPoly{rat(2), rat(2)});
    const UniPoly g{rat(2, 3), rat(-4, 3)};
    CHECK(g.primitive() == UniPoly{rat(-1), rat(2)});
    CHECK(g.content() == rat(-2, 3));
}

TEST_CASE("poly_gcd on the spec triples") {
    const UniPoly f{rat(-1), rat(2), rat(1)};        // z^2 + 2z - 1
    const UniPoly lin{rat(-1), rat(1)};              // z - 1
    CHECK(poly_gcd(f, lin) == UniPoly::constant(rat(1)));

    // psi_3 = z^3 + 3z^2 - 4 = (z-1)(z+2)^2
    const UniPoly p3 = psi(3);
    CHECK(p3 == UniPoly{rat(-4), rat(0), rat(3), rat(1)});
    CHECK(poly_gcd(p3, UniPoly{rat(2), rat(1)}) == UniPoly{rat(2), rat(1)});

    const UniPoly h{rat(6), rat(-5), rat(1)};
    CHECK(poly_gcd(h, h) == h.monic());
}

TEST_CASE("poly_gcd divides both inputs exactly") {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 200; ++it) {
        const UniPoly a = random_poly(rng, 5), b = random_poly(rng, 5);
        const UniPoly g = poly_gcd(a, b);
        if (g.degree() >= 1) {
            CHECK(a.divrem(g).second.is_zero());
            CHECK(b.divrem(g).second.is_zero());
        }
    }
}

TEST_CASE("sturm_count on the spec intervals") {
    const UniPoly psi2{rat(-1), rat(2), rat(1)};
    CHECK(sturm_count(psi2, Interval(rat(0), rat(1))) == 1);

    // phi_3 = 4z^3 - 27(1-z)^2 has the single (0,1)-root 3/4
    const UniPoly phi3{rat(-27), rat(54), rat(-27), rat(4)};
    CHECK(sturm_count(phi3, Interval(rat(0), rat(1))) == 1);

    CHECK(sturm_count(psi(4), Interval(rat(0), rat(3))) == 1);
    CHECK_THROWS_AS(sturm_count(UniPoly(), Interval(rat(0), rat(1))), domain_error);
}

TEST_CASE("sturm_count agrees with known root multisets") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> num(-10, 10);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<int> nroots(1, 5);
    for (int it = 0; it < 120; ++it) {
        const int k = nroots(rng);
        std::vector<Rational> roots;
        UniPoly f = UniPoly::constant(rat(1));
        for (int i = 0; i < k; ++i) {
            roots.push_back(rat(num(rng), den(rng)));
            f *= UniPoly::affine(rat(1), -roots.back());
        }
        const Rational a = rat(num(rng), den(rng)), b = a + rat(den(rng));
        unsigned expect = 0;
        std::vector<Rational> seen;
        for (const auto& r0 : roots) {
            if (a < r0 && r0 <= b &&
                std::find(seen.begin(), seen.end(), r0) == seen.end()) {
                ++expect;
                seen.push_back(r0);
            }
        }
        CHECK(sturm_count(f, Interval(a, b)) == expect);
    }
}

TEST_CASE("sturm_count is additive over adjacent intervals") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> pt(-8, 8);
    int done = 0;
    while (done < 100) {
        const UniPoly f = random_poly(rng, 6);
        if (f.degree() < 1) continue;
        Rational a(pt(rng)), b(pt(rng)), c(pt(rng));
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        if (f.eval(b) == 0) continue;
        CHECK(sturm_count(f, Interval(a, b)) + sturm_count(f, Interval(b, c)) ==
              sturm_count(f, Interval(a, c)));
        ++done;
    }
}

TEST_CASE("isolate_root finds and refines") {
    // x2 = 2*sqrt(2) - 2, the (0,1)-root of z^2 + 4z - 4
    const UniPoly phi2{rat(-4), rat(4), rat(1)};
    const AlgebraicReal x2 = isolate_root(phi2, Interval(rat(0), rat(1)));
    CHECK(!x2.is_rational());
    CHECK(x2.hi - x2.lo <= rat_pow(rat(1, 2), 32));
    // 0.828427 is within the final interval
    CHECK(x2.lo < rat(828428, 1000000));
    CHECK(x2.hi > rat(828427, 1000000));

    // phi_3's (0,1)-root collapses onto the rational 3/4
    const UniPoly phi3{rat(-27), rat(54), rat(-27), rat(4)};
    const AlgebraicReal x3 = isolate_root(phi3, Interval(rat(0), rat(1)));
    CHECK(x3.is_rational());
    CHECK(*x3.exact == rat(3, 4));

    const AlgebraicReal five = isolate_root(UniPoly{rat(-5), rat(1)}, Interval(rat(0), rat(10)));
    CHECK(five.is_rational());
    CHECK(*five.exact == rat(5));

    CHECK_THROWS_AS(isolate_root(phi2, Interval(rat(2), rat(3))), domain_error);
}

TEST_CASE("refinement brackets and halves monotonically") {
    const UniPoly phi2{rat(-4), rat(4), rat(1)};
    AlgebraicReal a = isolate_root(phi2, Interval(rat(0), rat(1)));
    Rational w = a.hi - a.lo;
    for (int k = 0; k < 12; ++k) {
        refine(a, w / 2);
        if (a.exact) break;
        CHECK(a.hi - a.lo <= w / 2);
        CHECK(sgn(a.defining.eval(a.lo)) * sgn(a.defining.eval(a.hi)) < 0);
        w = a.hi - a.lo;
    }
}

TEST_CASE("alg_is_root decides exactly") {
    const UniPoly phi3{rat(-27), rat(54), rat(-27), rat(4)};
    const AlgebraicReal x3 = isolate_root(phi3, Interval(rat(0), rat(1)));
    CHECK(alg_is_root(UniPoly{rat(-3, 4), rat(1)}, x3));
    CHECK(!alg_is_root(UniPoly{rat(-1, 2), rat(1)}, x3));

    const UniPoly phi2{rat(-4), rat(4), rat(1)};
    const AlgebraicReal x2 = isolate_root(phi2, Interval(rat(0), rat(1)));
    CHECK(alg_is_root(phi2, x2));
    CHECK(!alg_is_root(UniPoly{rat(-4), rat(3), rat(1)}, x2));
    // scaled defining polynomial still vanishes
    CHECK(alg_is_root(phi2.scaled(rat(7, 3)), x2));
}

TEST_CASE("alg_sign and comparisons") {
    const UniPoly phi2{rat(-4), rat(4), rat(1)};
    const AlgebraicReal x2 = isolate_root(phi2, Interval(rat(0), rat(1)));
    CHECK(alg_cmp(x2, rat(0)) > 0);
    CHECK(alg_cmp(x2, rat(1)) < 0);
    CHECK(alg_cmp(x2, rat(828427, 1000000)) > 0);
    CHECK(alg_cmp(x2, rat(828428, 1000000)) < 0);
    CHECK(in_open_unit_interval(x2));
    CHECK(alg_sign(UniPoly{rat(-1), rat(1)}, x2) < 0);   // x2 - 1 < 0
    CHECK(alg_sign(UniPoly{rat(0), rat(3)}, x2) > 0);    // 3 x2 > 0
    CHECK(alg_sign(phi2, x2) == 0);
}

TEST_CASE("irreducibility certificates") {
    // psi_4 = z^4 + 4z^3 - 27 is irreducible
    const auto r4 = irreducibility_certify(psi(4));
    CHECK(r4.verdict == Irreducibility::Irreducible);

    // psi_3 factors; the witness must divide exactly
    const auto r3 = irreducibility_certify(psi(3));
    REQUIRE(r3.verdict == Irreducibility::Composite);
    CHECK(psi(3).divrem(r3.witness).second.is_zero());
    CHECK(r3.witness.degree() == 1);

    const auto rz = irreducibility_certify(UniPoly{rat(-1), rat(0), rat(1)});
    REQUIRE(rz.verdict == Irreducibility::Composite);
    CHECK(rz.witness.degree() == 1);

    // quadratics without rational roots
    CHECK(irreducibility_certify(UniPoly{rat(-4), rat(4), rat(1)}).verdict ==
          Irreducibility::Irreducible);
}
