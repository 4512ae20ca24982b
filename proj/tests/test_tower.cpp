#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellpic/curve_group.hpp"
#include "ellpic/tower.hpp"
#include "test_util.hpp"

using namespace ellpic;

TEST_CASE("generic point lies on the lifted curve; identity and inverse laws") {
    auto F = lift_to_function_field(rank_zero_base_curve());
    FnPoint<Rational> G = generic_point(F);
    CHECK(F.lifted.contains(G));
    CHECK(ff_add(F, G, FnPoint<Rational>::at_infinity()) == G);
    CHECK(ff_add(F, G, F.lifted.neg(G)).infinity);
}

TEST_CASE("constant points add exactly as on the base curve") {
    FqCurve E = ellpic_test::e5();
    auto F = lift_to_function_field(E);
    auto pts = enumerate_points(E);
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i; j < pts.size(); ++j) {
            FqPoint S = E.add(pts[i], pts[j]);
            FnPoint<Fq> Sf = ff_add(F, constant_point(F, pts[i]), constant_point(F, pts[j]));
            CHECK(Sf == constant_point(F, S));
        }
}

TEST_CASE("duplication: x-coordinate degrees 4 over 3") {
    auto F = lift_to_function_field(rank_zero_base_curve());
    FnPoint<Rational> G = generic_point(F);
    FnPoint<Rational> G2 = ff_add(F, G, G);
    REQUIRE(!G2.infinity);
    CHECK(G2.x.in_rational_subfield());
    CHECK(G2.x.num_a().degree() == 4);
    CHECK(G2.x.den().degree() == 3);
    CHECK(F.lifted.contains(G2));
}

TEST_CASE("multiplication-by-m degree law and torsion-freeness, m <= 4") {
    auto F = lift_to_function_field(rank_zero_base_curve());
    FnPoint<Rational> G = generic_point(F);
    FnPoint<Rational> acc = G;
    for (long m = 2; m <= 4; ++m) {
        acc = ff_add(F, acc, G);
        REQUIRE(!acc.infinity);  // the generic point has infinite order
        CHECK(acc.x.in_rational_subfield());
        CHECK(acc.x.num_a().degree() == m * m);
        CHECK(acc.x.den().degree() == m * m - 1);
        CHECK(F.lifted.contains(acc));
    }
}

TEST_CASE("decompose: generic point, multiples, constants") {
    auto F = lift_to_function_field(rank_zero_base_curve());
    FnPoint<Rational> G = generic_point(F);

    auto d1 = decompose(F, G, 4);
    CHECK(d1.constant.infinity);
    CHECK(d1.multiple == 1);

    FnPoint<Rational> acc = G;
    for (long m = 2; m <= 4; ++m) {
        acc = ff_add(F, acc, G);
        auto dm = decompose(F, acc, 4);
        CHECK(dm.constant.infinity);
        CHECK(dm.multiple == m);
    }

    auto dz = decompose(F, FnPoint<Rational>::at_infinity(), 4);
    CHECK(dz.constant.infinity);
    CHECK(dz.multiple == 0);
}

TEST_CASE("decompose over a finite base recovers constants and mixed sums") {
    FqCurve E = ellpic_test::e5();
    auto F = lift_to_function_field(E);
    FnPoint<Fq> G = generic_point(F);
    for (const auto& P : enumerate_points(E)) {
        auto d = decompose(F, constant_point(F, P), 3);
        CHECK(d.multiple == 0);
        CHECK(d.constant == P);
        // c + [2]G
        FnPoint<Fq> mixed = ff_add(F, constant_point(F, P), ff_add(F, G, G));
        auto dm = decompose(F, mixed, 3);
        CHECK(dm.multiple == 2);
        CHECK(dm.constant == P);
    }
}

TEST_CASE("decompose round trip is the identity on the tested range") {
    FqCurve E = ellpic_test::short_curve(7, 1, 6);
    auto F = lift_to_function_field(E);
    FnPoint<Fq> G = generic_point(F);
    auto pts = enumerate_points(E);
    for (size_t i = 0; i < pts.size(); i += 3)
        for (long m = -2; m <= 2; ++m) {
            FnPoint<Fq> P = ff_add(F, constant_point(F, pts[i]), F.lifted.scalar_mul(m, G));
            auto d = decompose(F, P, 2);
            CHECK(d.multiple == m);
            CHECK(d.constant == pts[i]);
        }
}

TEST_CASE("decompose: insufficient bound raises instead of guessing") {
    auto F = lift_to_function_field(rank_zero_base_curve());
    FnPoint<Rational> G = generic_point(F);
    FnPoint<Rational> G3 = F.lifted.scalar_mul(3, G);
    CHECK_THROWS_AS(decompose(F, G3, 2), budget_error);
}

TEST_CASE("characteristic 2 bases are rejected") {
    const FqField* F8 = FqField::get(2, 3);
    Fq z(F8, 0), o(F8, 1);
    FqCurve E2(z, z, o, z, z);
    CHECK_THROWS_AS(lift_to_function_field(E2), std::domain_error);
}

TEST_CASE("tower group: pinned heights") {
    Curve<Rational> E0 = rank_zero_base_curve();
    CHECK(tower_group(E0, 0).group.is_trivial());  // E0(Q) = 0
    TowerLevel l1 = tower_group(E0, 1);
    CHECK(l1.group == FgAbelianGroup{1, {}});
    CHECK(l1.generator_names == std::vector<std::string>{"Q1"});
    CHECK(tower_group(E0, 3).group == FgAbelianGroup{3, {}});

    // non-pinned base over Q rejected: the rank-zero fact is not available
    Rational z(0);
    Curve<Rational> other(z, z, z, Rational(1), Rational(1));
    CHECK_THROWS_AS(tower_group(other, 1), std::invalid_argument);
}

TEST_CASE("symbolic tower elements embed compatibly level to level") {
    TowerElement a = tower_add(tower_generator(2, 1), tower_neg(tower_generator(2, 2)));
    CHECK(a.coords == std::vector<Int>{1, -1});
    TowerElement lifted = tower_lift(a);
    CHECK(lifted.coords == std::vector<Int>{1, -1, 0});
    // the lift is the canonical inclusion: prefix preserved
    for (size_t i = 0; i < a.coords.size(); ++i) CHECK(lifted.coords[i] == a.coords[i]);
}

TEST_CASE("j-invariant of the pinned base is 110592/37") {
    CHECK(rank_zero_base_curve().j_invariant() == Rational(Int(110592), Int(37)));
}
