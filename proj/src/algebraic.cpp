#include "gammaprod/algebraic.hpp"

#include <algorithm>
#include <cstdint>

namespace gpf {
namespace {

std::vector<UniPoly> sturm_chain(const UniPoly& squarefree) {
    std::vector<UniPoly> chain;
    chain.push_back(squarefree);
    if (squarefree.degree() >= 1) {
        chain.push_back(squarefree.derivative());
        while (chain.back().degree() >= 1) {
            UniPoly r = chain[chain.size() - 2].divrem(chain.back()).second;
            if (r.is_zero()) break;
            r = -r;
            // normalize only by a positive scalar; sign flips would destroy
            // the variation count
            chain.push_back(r.scaled(1 / rat_abs(r.content())));
        }
    }
    return chain;
}

// Sign variations at t, zeros dropped. With zeros dropped the count
// V(lo) - V(hi) is the number of roots in the half-open interval (lo, hi].
unsigned variations_at(const std::vector<UniPoly>& chain, const Rational& t) {
    unsigned v = 0;
    int prev = 0;
    for (const auto& p : chain) {
        const int s = sgn(p.eval(t));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

unsigned count_on_chain(const std::vector<UniPoly>& chain, const Rational& lo,
                        const Rational& hi) {
    const unsigned va = variations_at(chain, lo);
    const unsigned vb = variations_at(chain, hi);
    GPF_ASSERT(va >= vb, "Sturm variation count decreased the wrong way");
    return va - vb;
}

// Minimal polynomial of the rational p/q as a primitive integer polynomial.
UniPoly linear_min_poly(const Rational& root) {
    return UniPoly::affine(Rational(root.get_den()), Rational(-root.get_num()));
}

}  // namespace

AlgebraicReal AlgebraicReal::from_rational(const Rational& q) {
    return AlgebraicReal{linear_min_poly(q), q, q, q};
}

unsigned sturm_count(const UniPoly& f, const Interval& iv) {
    GPF_CHECK(!f.is_zero(), "sturm_count of the zero polynomial");
    if (iv.lo == iv.hi) return 0;
    const UniPoly g = squarefree_part(f);
    if (g.degree() < 1) return 0;
    return count_on_chain(sturm_chain(g), iv.lo, iv.hi);
}

AlgebraicReal isolate_root(const UniPoly& f, const Interval& iv) {
    GPF_CHECK(sturm_count(f, iv) == 1,
              "isolate_root needs an interval containing exactly one root");
    UniPoly g = squarefree_part(f);
    Rational lo = iv.lo, hi = iv.hi;

    if (g.eval(hi) == 0) return AlgebraicReal::from_rational(hi);
    // A root exactly at lo is not the one counted by (lo, hi]; remove it.
    while (g.eval(lo) == 0) g = g.exact_div(UniPoly::affine(Rational(1), -lo)).primitive();
    if (g.degree() == 1) return AlgebraicReal::from_rational(-g[0] / g[1]);

    GPF_ASSERT(sgn(g.eval(lo)) * sgn(g.eval(hi)) < 0,
               "isolated interval must bracket a sign change");
    AlgebraicReal a{g, lo, hi, std::nullopt};
    refine(a, rat_pow(rat(1, 2), 32));
    return a;
}

void refine(AlgebraicReal& a, const Rational& target_width) {
    if (a.exact) return;
    const int lo_sign = sgn(a.defining.eval(a.lo));
    while (a.hi - a.lo > target_width) {
        const Rational mid = (a.lo + a.hi) / 2;
        const int sm = sgn(a.defining.eval(mid));
        if (sm == 0) {
            const UniPoly m = linear_min_poly(mid);
            a = AlgebraicReal{m, mid, mid, mid};
            return;
        }
        if (sm == lo_sign)
            a.lo = mid;
        else
            a.hi = mid;
    }
}

bool alg_is_root(const UniPoly& g, const AlgebraicReal& a) {
    if (g.is_zero()) return true;
    if (a.exact) return g.eval(*a.exact) == 0;
    const UniPoly h = poly_gcd(g, a.defining);
    if (h.degree() < 1) return false;
    return sturm_count(h, Interval(a.lo, a.hi)) == 1;
}

int alg_sign(const UniPoly& g, const AlgebraicReal& a) {
    if (g.is_zero()) return 0;
    if (a.exact) return sgn(g.eval(*a.exact));
    if (alg_is_root(g, a)) return 0;
    // g has no root at a; shrink the interval until g has no root inside it,
    // then the sign at any interior point is the sign at a.
    AlgebraicReal b = a;
    const UniPoly gs = squarefree_part(g);
    while (sturm_count(gs, Interval(b.lo, b.hi)) > 0 ||
           gs.eval(b.lo) == 0 || gs.eval(b.hi) == 0) {
        refine(b, (b.hi - b.lo) / 4);
        if (b.exact) return sgn(g.eval(*b.exact));
    }
    return sgn(g.eval(b.mid()));
}

int alg_cmp(const AlgebraicReal& a, const Rational& q) {
    if (a.exact) return *a.exact < q ? -1 : (*a.exact == q ? 0 : 1);
    if (q <= a.lo) return a.defining.eval(q) == 0 && q == a.lo ? 0 : 1;
    if (q >= a.hi) return -1;
    if (a.defining.eval(q) == 0) return 0;  // q inside the interval: it is the root
    return sturm_count(a.defining, Interval(a.lo, q)) == 1 ? -1 : 1;
}

bool in_open_unit_interval(const AlgebraicReal& a) {
    return alg_cmp(a, Rational(0)) > 0 && alg_cmp(a, Rational(1)) < 0;
}

// ---------------------------------------------------------------------------
// Irreducibility certification
// ---------------------------------------------------------------------------
namespace {

using ModPoly = std::vector<std::uint64_t>;  // ascending coefficients mod p

void mp_trim(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly mp_rem(ModPoly a, const ModPoly& b, std::uint64_t p) {
    const std::size_t db = b.size() - 1;
    const std::uint64_t inv_lead = [&] {
        // Fermat inverse; p is prime and b's leading coefficient is nonzero.
        std::uint64_t base = b.back(), e = p - 2, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return acc;
    }();
    while (a.size() > db) {
        const std::uint64_t f = a.back() * inv_lead % p;
        const std::size_t shift = a.size() - 1 - db;
        if (f != 0)
            for (std::size_t i = 0; i <= db; ++i)
                a[shift + i] = (a[shift + i] + p - f * b[i] % p) % p;
        a.pop_back();
        mp_trim(a);
        if (a.size() <= db) break;
    }
    mp_trim(a);
    return a;
}

ModPoly mp_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    mp_trim(c);
    return mp_rem(std::move(c), m, p);
}

ModPoly mp_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
    while (!b.empty()) {
        ModPoly r = mp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

ModPoly mp_derivative(const ModPoly& f, std::uint64_t p) {
    ModPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * (i % p) % p);
    mp_trim(d);
    return d;
}

// Degrees of irreducible factors of f mod p (with multiplicity 1; caller
// guarantees squarefreeness) via distinct-degree factorization.
std::vector<unsigned> ddf_degrees(ModPoly f, std::uint64_t p) {
    std::vector<unsigned> degs;
    ModPoly h{0, 1};  // x
    h = mp_rem(h, f, p);
    unsigned d = 0;
    while (f.size() >= 2 * (d + 1) + 1) {
        ++d;
        // h <- h^p mod f  ==  x^(p^d) mod f
        ModPoly hp{1};
        {
            std::uint64_t e = p;
            ModPoly base = h;
            while (e) {
                if (e & 1) hp = mp_mulmod(hp, base, f, p);
                base = mp_mulmod(base, base, f, p);
                e >>= 1;
            }
        }
        h = std::move(hp);
        ModPoly diff = h;
        // diff - x
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        mp_trim(diff);
        ModPoly g = mp_gcd(f, diff, p);
        if (g.size() > 1) {
            const unsigned total = static_cast<unsigned>(g.size() - 1);
            GPF_ASSERT(total % d == 0, "distinct-degree factorization degree mismatch");
            for (unsigned i = 0; i < total / d; ++i) degs.push_back(d);
            // divide f by g
            ModPoly q;
            {
                // long division exact
                ModPoly rem = f;
                const std::size_t dg = g.size() - 1;
                std::uint64_t inv = 1;
                {
                    std::uint64_t base = g.back(), e = p - 2;
                    std::uint64_t acc = 1;
                    while (e) {
                        if (e & 1) acc = acc * base % p;
                        base = base * base % p;
                        e >>= 1;
                    }
                    inv = acc;
                }
                q.assign(rem.size() - dg, 0);
                while (rem.size() > dg) {
                    const std::uint64_t fac = rem.back() * inv % p;
                    const std::size_t shift = rem.size() - 1 - dg;
                    q[shift] = fac;
                    for (std::size_t i = 0; i <= dg; ++i)
                        rem[shift + i] = (rem[shift + i] + p - fac * g[i] % p) % p;
                    mp_trim(rem);
                    if (rem.size() <= dg) break;
                }
            }
            f = std::move(q);
            mp_trim(f);
            h = mp_rem(h, f, p);
        }
    }
    if (f.size() > 1) degs.push_back(static_cast<unsigned>(f.size() - 1));
    return degs;
}

// All achievable proper factor degrees as a bitmask over 1..n-1.
std::vector<bool> subset_sums(const std::vector<unsigned>& degs, unsigned n) {
    std::vector<bool> reach(n + 1, false);
    reach[0] = true;
    for (unsigned d : degs)
        for (unsigned s = n; s + 1 > d; --s)
            if (reach[s - d]) reach[s] = true;
    return reach;
}

std::vector<BigInt> bounded_divisors(const BigInt& n0, unsigned long limit) {
    BigInt n = abs(n0);
    std::vector<BigInt> divs{BigInt(1)};
    BigInt rest = n;
    for (unsigned long d = 2; d <= limit && rest > 1; ++d) {
        if (BigInt(rest % d) != 0) continue;
        unsigned mult = 0;
        while (BigInt(rest % d) == 0) {
            rest /= d;
            ++mult;
        }
        const std::size_t base = divs.size();
        BigInt dp(1);
        for (unsigned e = 1; e <= mult; ++e) {
            dp *= d;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * dp);
        }
    }
    if (rest > 1) {
        // leftover factor (possibly composite); include it so monic-style
        // candidates are not missed when it is the whole thing
        const std::size_t base = divs.size();
        for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * rest);
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

// Exhaustive rational-root search for an integer-primitive polynomial.
// Roots are p/q with q | leading and p | constant; real-root isolation
// narrows each candidate to at most one numerator per denominator.
std::optional<Rational> find_rational_root(const UniPoly& f) {
    if (f[0] == 0) return Rational(0);
    const std::vector<BigInt> dens = bounded_divisors(f.leading().get_num(), 100000);
    // Cauchy bound on |roots|
    Rational bound(1);
    for (int i = 0; i < f.degree(); ++i) {
        Rational b = rat_abs(f[static_cast<std::size_t>(i)] / f.leading());
        if (b > bound) bound = b;
    }
    bound += 1;
    const UniPoly g = squarefree_part(f);
    const auto chain = sturm_chain(g);
    // isolate all real roots by repeated bisection
    std::vector<Interval> stack{Interval(-bound, bound)};
    std::vector<Interval> roots;
    while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        const unsigned n = count_on_chain(chain, iv.lo, iv.hi);
        if (n == 0) continue;
        if (n == 1) {
            roots.push_back(iv);
            continue;
        }
        const Rational mid = iv.mid();
        stack.emplace_back(iv.lo, mid);
        stack.emplace_back(mid, iv.hi);
    }
    for (auto& iv : roots) {
        // shrink until at most one candidate p/q per denominator fits
        for (int step = 0; step < 80 && iv.width() > 0; ++step) {
            const Rational mid = iv.mid();
            if (g.eval(mid) == 0) return mid;
            if (count_on_chain(chain, iv.lo, mid) == 1)
                iv = Interval(iv.lo, mid);
            else
                iv = Interval(mid, iv.hi);
        }
        for (const auto& q : dens) {
            // candidate numerator: nearest integer to q * midpoint
            const Rational scaled = iv.mid() * Rational(q);
            const BigInt fl = floor_rat(scaled);
            for (const BigInt& num : {fl, BigInt(fl + 1)}) {
                const Rational cand = rat(num, q);
                if (f.eval(cand) == 0) return cand;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

IrredResult irreducibility_certify(const UniPoly& f0) {
    const UniPoly f = f0.primitive();
    GPF_CHECK(f.degree() >= 1, "irreducibility of a constant polynomial");
    const unsigned n = static_cast<unsigned>(f.degree());
    if (n == 1) return {Irreducibility::Irreducible, {}, "degree 1"};

    if (auto root = find_rational_root(f)) {
        UniPoly witness = UniPoly::affine(Rational(root->get_den()), Rational(-root->get_num()));
        return {Irreducibility::Composite, witness, "rational root"};
    }
    if (n <= 3)
        return {Irreducibility::Irreducible, {}, "rational-root exclusion, degree <= 3"};

    // factor-degree patterns modulo several primes where f stays squarefree
    static const std::uint64_t kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                            37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
    std::vector<bool> possible(n + 1, true);
    int good_primes = 0;
    for (std::uint64_t p : kPrimes) {
        if (good_primes >= 5) break;
        if (BigInt(f.leading().get_num() % static_cast<long>(p)) == 0) continue;
        ModPoly fp(n + 1, 0);
        for (unsigned i = 0; i <= n; ++i) {
            BigInt c = f[i].get_num() % static_cast<long>(p);
            if (c < 0) c += static_cast<long>(p);
            fp[i] = c.get_ui();
        }
        mp_trim(fp);
        if (fp.size() != n + 1) continue;
        if (mp_gcd(fp, mp_derivative(fp, p), p).size() > 1) continue;  // not squarefree mod p
        const auto degs = ddf_degrees(fp, p);
        const auto reach = subset_sums(degs, n);
        for (unsigned d = 0; d <= n; ++d)
            if (!reach[d]) possible[d] = false;
        ++good_primes;
        bool any_proper = false;
        for (unsigned d = 1; d < n; ++d) any_proper = any_proper || possible[d];
        if (!any_proper && good_primes >= 3)
            return {Irreducibility::Irreducible, {},
                    "factor-degree patterns mod " + std::to_string(good_primes) + " primes"};
    }
    return {Irreducibility::Unknown, {}, "patterns inconclusive"};
}

}  // namespace gpf
