#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "ellpic/certificate.hpp"
#include "test_util.hpp"

using namespace ellpic;

TEST_CASE("realize: pinned shapes") {
    {
        Certificate c = realize(GroupSpec{0, {}});
        CHECK(c.tower_height == 0);
        CHECK(c.kill_generators.empty());
        CHECK(c.computed_group.is_trivial());
        CHECK(c.matches_target);
    }
    {
        Certificate c = realize(GroupSpec{0, {Int(5)}});
        CHECK(c.tower_height == 1);
        REQUIRE(c.kill_generators.size() == 1);
        CHECK(c.kill_generators[0] == std::vector<Int>{5});
        CHECK(c.removed_points[0].name == "5*Q1");
        CHECK(c.computed_group == FgAbelianGroup{0, {5}});
    }
    {
        // Z^2 (+) Z/2 (+) Z/4: height 4, kill generators 2e3 and 4e4
        Certificate c = realize(GroupSpec{2, {Int(2), Int(4)}});
        CHECK(c.tower_height == 4);
        REQUIRE(c.kill_generators.size() == 2);
        CHECK(c.kill_generators[0] == std::vector<Int>{0, 0, 2, 0});
        CHECK(c.kill_generators[1] == std::vector<Int>{0, 0, 0, 4});
        CHECK(c.computed_group == FgAbelianGroup{2, {2, 4}});
        CHECK(c.matches_target);
        CHECK(c.sigma_stable);
    }
}

TEST_CASE("realize respects normalization of non-chain torsion") {
    Certificate c = realize(GroupSpec{0, {Int(6), Int(15)}});
    CHECK(c.tower_height == 2);
    CHECK(c.computed_group == FgAbelianGroup{0, {3, 30}});
    CHECK(c.matches_target);
}

TEST_CASE("realize -> verify round trip") {
    for (GroupSpec spec : {GroupSpec{0, {}}, GroupSpec{0, {Int(12)}}, GroupSpec{1, {Int(3)}},
                           GroupSpec{3, {}}}) {
        RealizeOptions opts;
        opts.attach_demo = spec.free_rank == 0 && !spec.torsion.empty();
        Certificate c = realize(spec, opts);
        VerifyReport rep = verify_certificate(c);
        CHECK(rep.passed);
        if (!rep.passed) {
            for (const auto& s : rep.steps)
                if (!s.passed) MESSAGE(s.name, ": ", s.detail);
        }
    }
}

TEST_CASE("tampered certificate fails at the SNF comparison") {
    Certificate c = realize(GroupSpec{0, {Int(4)}}, RealizeOptions{64, false, 13});
    c.kill_generators[0] = std::vector<Int>{3};  // now presents Z/3, target Z/4
    VerifyReport rep = verify_certificate(c);
    CHECK(!rep.passed);
    CHECK(rep.first_failure == "snf-comparison");
}

TEST_CASE("tampered axioms or sigma stability are caught") {
    Certificate c = realize(GroupSpec{0, {Int(4)}}, RealizeOptions{64, false, 13});
    Certificate bad = c;
    bad.axioms[0].statement = "E0(Q) = Z";
    CHECK(verify_certificate(bad).first_failure == "axioms");

    bad = c;
    bad.removed_points[0].neg_vector = bad.removed_points[0].vector;
    CHECK(verify_certificate(bad).first_failure == "sigma-stability");
}

TEST_CASE("certificate JSON round trip, field order, version gate") {
    Certificate c = realize(GroupSpec{0, {Int(5)}});
    std::string text = certificate_to_json(c);
    // fixed leading field order
    CHECK(text.find("\"version\"") < text.find("\"base\""));
    CHECK(text.find("\"base\"") < text.find("\"tower_height\""));
    CHECK(text.find("\"tower_height\"") < text.find("\"kill_generators\""));
    CHECK(text.find("\"kill_generators\"") < text.find("\"removed_points\""));
    CHECK(text.find("\"removed_points\"") < text.find("\"sigma_stable\""));
    CHECK(text.find("\"sigma_stable\"") < text.find("\"target\""));
    CHECK(text.find("\"target\"") < text.find("\"axioms\""));
    CHECK(text.find("\"axioms\"") < text.find("\"transcript\""));

    Certificate c2 = certificate_from_json(text);
    CHECK(certificate_to_json(c2) == text);
    CHECK(verify_certificate(c2).passed);

    // unknown version rejected at parse time
    std::string v2 = text;
    v2.replace(v2.find("\"version\": 1"), 12, "\"version\": 2");
    CHECK_THROWS_AS(certificate_from_json(v2), std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_json("{"), std::invalid_argument);
}

TEST_CASE("finite demo: trivial group removes everything") {
    auto demo = realize_finite_demo(GroupSpec{0, {}}, 13);
    REQUIRE(demo.has_value());
    CHECK(demo->quotient.is_trivial());
    CHECK(demo->direct.is_trivial());
    // W is the full set of degree-1 points
    CHECK(demo->removed.size() == closed_points_of_degree(demo->curve, 1).size());
}

TEST_CASE("finite demo: Z/3 found, verified on both routes, sigma-stable") {
    auto demo = realize_finite_demo(GroupSpec{0, {Int(3)}}, 13);
    REQUIRE(demo.has_value());
    CHECK(demo->quotient == FgAbelianGroup{0, {3}});
    CHECK(is_isomorphic(demo->quotient, demo->direct));
    CHECK(demo->direct_stable);
    OverringSpec spec = make_overring(demo->curve, demo->removed);
    CHECK_NOTHROW(invariant_subring(spec));  // sigma-stability
}

TEST_CASE("finite demo: infinite or wide groups yield none") {
    CHECK(!realize_finite_demo(GroupSpec{1, {Int(2)}}, 13).has_value());
    CHECK(!realize_finite_demo(GroupSpec{0, {Int(2), Int(2), Int(2)}}, 13).has_value());
}

TEST_CASE("certificate with demo block replays end to end") {
    Certificate c = realize(GroupSpec{0, {Int(5)}});
    REQUIRE(c.demo.has_value());
    VerifyReport rep = verify_certificate(c);
    CHECK(rep.passed);
    // tamper with the demo: drop a removed point
    Certificate bad = c;
    bad.demo->removed_xy.pop_back();
    CHECK(!verify_certificate(bad).passed);
}

TEST_CASE("weak repleteness: degree-1 classes are all nonidentity elements") {
    for (auto [q, A, B] : {std::tuple<long, long, long>{5, 1, 1}, {7, 1, 6}, {9, 1, 1}}) {
        FqCurve E = ellpic_test::short_curve(q, A, B);
        WeakRepletenessReport rep = weak_repleteness_check(E);
        CHECK(rep.passed);
        CHECK(rep.class_to_prime.size() == enumerate_points(E).size() - 1);
    }
}

TEST_CASE("repleteness: unknown at degree 1, replete with witnesses at degree 2") {
    FqCurve E = ellpic_test::e5();
    RepletenessReport r1 = repleteness_check(E, 1);
    CHECK(r1.verdict == RepletenessVerdict::unknown_at_bound);
    CHECK(r1.classes_witnessed == r1.classes_total - 1);  // identity missing

    RepletenessReport r2 = repleteness_check(E, 2);
    CHECK(r2.verdict == RepletenessVerdict::replete_with_witnesses);
    for (const auto& w : r2.witnesses) CHECK(w.recomputed_class_matches);

    // the conjugate-pair witness x0 exists and its fiber has no rational point
    REQUIRE(r2.conjugate_pair_x0.has_value());
    Fq x0(E.a1().field(), *r2.conjugate_pair_x0);
    CHECK(y_solutions(E, x0).empty());
}

TEST_CASE("repleteness: algebraically-closed flag short-circuits") {
    FqCurve E = ellpic_test::e5();
    CHECK(repleteness_check(E, 2, true).verdict == RepletenessVerdict::not_replete);
}

TEST_CASE("conjugate-pair witness implies a degree-2 identity-class prime") {
    for (auto [q, A, B] : {std::tuple<long, long, long>{5, 1, 1}, {7, 2, 3}, {11, 3, 5}, {13, 2, 1}}) {
        FqCurve E = ellpic_test::short_curve(q, A, B);
        RepletenessReport rep = repleteness_check(E, 2);
        if (!rep.conjugate_pair_x0.has_value()) continue;
        // the pair (x0, +/- sqrt) over F_{q^2} is a degree-2 prime of class O
        const FqField* F = E.a1().field();
        const FqField* F2 = FqField::get(F->p(), F->k() * 2);
        Fq x0up = FqEmbedding::get(F, F2)->map(Fq(F, *rep.conjugate_pair_x0));
        auto ys = y_solutions(curve_over(E, F2), x0up);
        REQUIRE(ys.size() == 2);
        ClosedPoint cp = ClosedPoint::from_point(E, F2, FqPoint::affine(x0up, ys[0]));
        CHECK(cp.degree() == 2);
        CHECK(closed_point_class(E, cp).infinity);
        CHECK(rep.verdict == RepletenessVerdict::replete_with_witnesses);
    }
}
