#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellpic/quadratic.hpp"
#include "test_util.hpp"

using namespace ellpic;

namespace {

FqRingElem random_elem(const FqField* F, int maxdeg, std::mt19937& rng) {
    std::uniform_int_distribution<long> cdist(0, F->q() - 1);
    auto rpoly = [&]() {
        std::vector<Fq> c;
        int d = static_cast<int>(rng() % (maxdeg + 2)) - 1;
        for (int i = 0; i <= d; ++i) c.emplace_back(F, cdist(rng));
        return FqPoly(std::move(c));
    };
    return FqRingElem{rpoly(), rpoly()};
}

}  // namespace

TEST_CASE("sigma: fixes x, is an involution, multiplies to the negated norm form") {
    FqCurve E = ellpic_test::e5();
    const FqField* F = E.a1().field();
    Fq one(F, 1);

    FqRingElem x = FqRingElem::from_poly(FqPoly::x(one));
    CHECK(sigma(E, x) == x);

    FqRingElem y = FqRingElem::y_times(FqPoly::constant(one));
    FqRingElem sy_y = ring_mul(E, sigma(E, y), y);
    CHECK(sy_y.b.is_zero());
    CHECK(sy_y.a == -curve_rhs_poly(E));

    std::mt19937 rng(2);
    for (int i = 0; i < 100; ++i) {
        FqRingElem f = random_elem(F, 3, rng), g = random_elem(F, 3, rng);
        CHECK(sigma(E, sigma(E, f)) == f);
        // ring homomorphism
        CHECK(sigma(E, ring_add(f, g)) == ring_add(sigma(E, f), sigma(E, g)));
        CHECK(sigma(E, ring_mul(E, f, g)) == ring_mul(E, sigma(E, f), sigma(E, g)));
    }
}

TEST_CASE("fixed ring is exactly the b = 0 part in odd characteristic") {
    FqCurve E = ellpic_test::e5();
    const FqField* F = E.a1().field();
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        FqRingElem f = random_elem(F, 3, rng);
        CHECK((sigma(E, f) == f) == f.b.is_zero());
    }
}

TEST_CASE("characteristic 2 rejected") {
    const FqField* F8 = FqField::get(2, 3);
    Fq z(F8, 0), o(F8, 1);
    FqCurve E2(z, z, o, z, z);
    CHECK_THROWS_AS(sigma(E2, FqRingElem::from_poly(FqPoly::x(o))), std::domain_error);
    CHECK_THROWS_AS(invariant_subring(make_overring(E2, {})), std::domain_error);
}

TEST_CASE("class of sigma(P) is the inverse class") {
    FqCurve E = ellpic_test::e5();
    for (int d = 1; d <= 2; ++d)
        for (const auto& cp : closed_points_of_degree(E, d)) {
            FqPoint c = closed_point_class(E, cp);
            FqPoint cs = closed_point_class(E, closed_point_sigma(E, cp));
            CHECK(E.add(c, cs).infinity);
        }
}

TEST_CASE("invariant subring: empty W gives k[x], conjugate pairs share one fiber") {
    FqCurve E = ellpic_test::e5();
    auto S0 = invariant_subring(make_overring(E, {}));
    CHECK(S0.inverted.empty());

    const auto& d1 = closed_points_of_degree(E, 1);
    for (const auto& cp : d1) {
        ClosedPoint scp = closed_point_sigma(E, cp);
        if (cp == scp) continue;  // 2-torsion fiber, a singleton already stable
        auto S = invariant_subring(make_overring(E, {cp, scp}));
        REQUIRE(S.inverted.size() == 1);
        CHECK(S.inverted[0] == cp.min_poly_x());
        // non-stable W rejected
        CHECK_THROWS_AS(invariant_subring(make_overring(E, {cp})), std::invalid_argument);
        break;
    }
}

TEST_CASE("PID verification exhibits monic generators for all surviving primes") {
    FqCurve E = ellpic_test::e5();
    const auto& d1 = closed_points_of_degree(E, 1);
    std::vector<ClosedPoint> W;
    for (const auto& cp : d1) {
        W.push_back(cp);
        ClosedPoint scp = closed_point_sigma(E, cp);
        if (!(scp == cp)) W.push_back(scp);
        if (W.size() >= 2) break;
    }
    auto S = invariant_subring(make_overring(E, W));
    PidReport rep = verify_invariant_subring_pid(S, 3);
    CHECK(rep.all_principal);
    // count: all monic irreducibles of degree <= 3 minus the inverted ones
    const FqField* F = E.a1().field();
    size_t total = monic_irreducibles(F, 1).size() + monic_irreducibles(F, 2).size() +
                   monic_irreducibles(F, 3).size();
    CHECK(rep.witnesses.size() == total - S.inverted.size());
    for (const auto& w : rep.witnesses) {
        CHECK(w.generator == w.prime);
        CHECK(fq_poly_irreducible(w.generator));
        CHECK(w.generator.is_monic());
    }
}

TEST_CASE("integral closure: trace and norm of the generators land in the subring") {
    FqCurve E = ellpic_test::e5();
    const auto& d1 = closed_points_of_degree(E, 1);
    std::vector<ClosedPoint> W;
    for (const auto& cp : d1) {
        ClosedPoint scp = closed_point_sigma(E, cp);
        if (scp == cp) continue;
        W = {cp, scp};
        break;
    }
    REQUIRE(!W.empty());
    auto S = invariant_subring(make_overring(E, W));
    IntegralClosureReport rep = integral_closure_certificate(S);
    CHECK(rep.all_pass);
    REQUIRE(rep.checks.size() == 4);  // 1, x, y, 1/p

    // pinned values: trace(y) = -a1 x - a3 = 0 on a short-form curve,
    // norm(y) = -(x^3 + x + 1)
    const auto& ycheck = rep.checks[2];
    CHECK(ycheck.element == "y");
    CHECK(ycheck.trace == "0");
    CHECK(ycheck.trace_in_subring);
    CHECK(ycheck.norm_in_subring);

    // x is sigma-fixed: trace 2x, norm x^2
    const auto& xcheck = rep.checks[1];
    CHECK(xcheck.trace == "2*x");
    CHECK(xcheck.norm == "x^2");
}

TEST_CASE("integral closure on a long-form curve (a1, a3 nonzero)") {
    const FqField* F = FqField::get(7, 1);
    Fq z(F, 0);
    FqCurve E(z.from_int(1), z.from_int(2), z.from_int(3), z.from_int(4), z.from_int(5));
    auto S = invariant_subring(make_overring(E, {}));
    IntegralClosureReport rep = integral_closure_certificate(S);
    CHECK(rep.all_pass);
    // trace(y) = -a1 x - a3, a polynomial (denominator 1)
    using FF = FnElem<Fq>;
    auto Eptr = std::make_shared<const FqCurve>(E);
    FF y = FF::y_function(Eptr);
    FF tr = y + y.sigma();
    CHECK(tr.in_rational_subfield());
    CHECK(tr.num_a() == -curve_ylin_poly(E));
}

TEST_CASE("denominators outside X are flagged") {
    FqCurve E = ellpic_test::e5();
    auto S = invariant_subring(make_overring(E, {}));  // X empty
    using FF = FnElem<Fq>;
    auto Eptr = std::make_shared<const FqCurve>(E);
    const FqField* F = E.a1().field();
    Fq one(F, 1);
    // 1/x has denominator (x), not in X
    FF f(Eptr, FqPoly::constant(one), FqPoly(), FqPoly::x(one));
    FF nm = f * f.sigma();
    CHECK(nm.in_rational_subfield());
    // helper visibility: norm of 1/x is 1/x^2, denominator unsupported => the
    // report path would reject it; verify through the public certificate by
    // checking a removed-prime cofactor IS accepted instead
    const auto& d1 = closed_points_of_degree(E, 1);
    for (const auto& cp : d1) {
        ClosedPoint scp = closed_point_sigma(E, cp);
        if (scp == cp) continue;
        auto S2 = invariant_subring(make_overring(E, {cp, scp}));
        auto rep = integral_closure_certificate(S2);
        CHECK(rep.all_pass);
        break;
    }
}
