#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellpic/fq_poly.hpp"
#include "ellpic/numbers.hpp"

using namespace ellpic;

namespace {

FqPoly random_poly(const FqField* F, int maxdeg, std::mt19937& rng) {
    std::uniform_int_distribution<long> cdist(0, F->q() - 1);
    std::uniform_int_distribution<int> ddist(-1, maxdeg);
    int d = ddist(rng);
    std::vector<Fq> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(F, cdist(rng));
    return FqPoly(std::move(c));
}

}  // namespace

TEST_CASE("degree law and normalization") {
    const FqField* F = FqField::get(5, 1);
    FqPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    FqPoly x = FqPoly::x(Fq(F, 1));
    FqPoly f = x * x + x;  // x^2 + x
    CHECK(f.degree() == 2);
    CHECK((f - f).is_zero());
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        FqPoly a = random_poly(F, 5, rng), b = random_poly(F, 5, rng);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("divmod and gcd: monic, divides both, Bezout") {
    std::mt19937 rng(99);
    for (long q : {3L, 9L, 13L}) {
        long p = q == 9 ? 3 : q;
        const FqField* F = FqField::get(p, q == 9 ? 2 : 1);
        for (int i = 0; i < 150; ++i) {
            FqPoly a = random_poly(F, 6, rng), b = random_poly(F, 6, rng);
            if (!b.is_zero()) {
                auto [quo, rem] = a.divmod(b);
                CHECK(quo * b + rem == a);
                CHECK(rem.degree() < b.degree());
            }
            FqPoly g = poly_gcd(a, b);
            if (!g.is_zero()) {
                CHECK(g.is_monic());
                CHECK(g.divides(a));
                CHECK(g.divides(b));
            }
            auto e = poly_ext_gcd(a, b);
            CHECK(e.s * a + e.t * b == e.g);
        }
    }
}

TEST_CASE("irreducible enumeration counts") {
    // #monic irreducibles of degree d over F_q: (q^2 - q)/2 for d = 2,
    // (q^3 - q)/3 for d = 3
    const FqField* F5 = FqField::get(5, 1);
    CHECK(monic_irreducibles(F5, 1).size() == 5);
    CHECK(monic_irreducibles(F5, 2).size() == 10);
    CHECK(monic_irreducibles(F5, 3).size() == 40);
    const FqField* F2 = FqField::get(2, 1);
    CHECK(monic_irreducibles(F2, 4).size() == 3);
    for (const auto& m : monic_irreducibles(F5, 2)) CHECK(fq_poly_irreducible(m));
}

TEST_CASE("roots agree with factorization") {
    const FqField* F = FqField::get(7, 1);
    Fq one(F, 1);
    // (x-1)(x-2)^2
    FqPoly f = (FqPoly::x(one) - FqPoly::constant(one)) *
               (FqPoly::x(one) - FqPoly::constant(one.from_int(2))) *
               (FqPoly::x(one) - FqPoly::constant(one.from_int(2)));
    auto roots = fq_poly_roots(f, F);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].index() == 1);
    CHECK(roots[1].index() == 2);
    auto fac = fq_poly_factor_bounded(f, 1);
    REQUIRE(fac.has_value());
    CHECK(fac->factors.size() == 2);
    CHECK(fac->factors[0].second + fac->factors[1].second == 3);
}

TEST_CASE("factor_bounded reports out-of-range factors") {
    const FqField* F = FqField::get(5, 1);
    const auto& irr3 = monic_irreducibles(F, 3);
    FqPoly f = irr3[0] * FqPoly::x(Fq(F, 1));
    CHECK(!fq_poly_factor_bounded(f, 2).has_value());
    auto ok = fq_poly_factor_bounded(f, 3);
    REQUIRE(ok.has_value());
    // reassemble
    FqPoly prod = FqPoly::constant(ok->unit);
    for (auto& [m, e] : ok->factors) prod = prod * m.pow(e);
    CHECK(prod == f);
}

TEST_CASE("poly sqrt round trip") {
    std::mt19937 rng(4242);
    const FqField* F = FqField::get(13, 1);
    for (int i = 0; i < 100; ++i) {
        FqPoly g = random_poly(F, 4, rng);
        if (g.is_zero()) continue;
        auto r = fq_poly_sqrt(g * g);
        REQUIRE(r.has_value());
        CHECK(*r * *r == g * g);
        FqPoly x = FqPoly::x(Fq(F, 1));
        CHECK(!fq_poly_sqrt(g * g * x).has_value());
    }
}

TEST_CASE("interpolation") {
    const FqField* F = FqField::get(11, 1);
    std::vector<std::pair<Fq, Fq>> pts{{Fq(F, 1), Fq(F, 5)}, {Fq(F, 2), Fq(F, 3)}, {Fq(F, 7), Fq(F, 0)}};
    FqPoly t = fq_poly_interpolate(pts);
    CHECK(t.degree() <= 2);
    for (auto& [x, y] : pts) CHECK(t.eval(x) == y);
}

TEST_CASE("rational coefficients work through the same template") {
    Rational one(1);
    Polynomial<Rational> x = Polynomial<Rational>::x(one);
    Polynomial<Rational> f = x * x - Polynomial<Rational>::constant(Rational(1, 4));
    auto [q, r] = f.divmod(x - Polynomial<Rational>::constant(Rational(1, 2)));
    CHECK(r.is_zero());
    CHECK(q == x + Polynomial<Rational>::constant(Rational(1, 2)));
}
