#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ellpic/overring.hpp"
#include "test_util.hpp"

using namespace ellpic;

namespace {

struct Fixture {
    FqCurve E = ellpic_test::e5();
    MWGroup G = group_structure(E);
    RelationHarvest H = harvest_relations(E, 1, 8);
    std::vector<ClosedPoint> d1 = closed_points_of_degree(E, 1);
};

Fixture& fx() {
    static Fixture f;
    return f;
}

}  // namespace

TEST_CASE("empty W: Pic(S) = E(F_q) on both routes") {
    auto& f = fx();
    OverringSpec spec = make_overring(f.E, {});
    CHECK(picard_quotient(spec, f.G) == f.G.group);
    auto direct = picard_direct(spec, f.H);
    CHECK(direct.stable);
    CHECK(direct.group == f.G.group);
}

TEST_CASE("W = all degree-1 points: trivial class group") {
    auto& f = fx();
    OverringSpec spec = make_overring(f.E, f.d1);
    CHECK(picard_quotient(spec, f.G).is_trivial());
    CHECK(picard_direct(spec, f.H).group.is_trivial());
}

TEST_CASE("single removed point of order 3: quotient of order #E/3") {
    auto& f = fx();
    int seen = 0;
    for (const auto& cp : f.d1) {
        if (point_order(f.E, cp.representative(), f.G.point_count) != 3) continue;
        ++seen;
        OverringSpec spec = make_overring(f.E, {cp});
        FgAbelianGroup q = picard_quotient(spec, f.G);
        CHECK(q.torsion_order() == 3);  // 9 / 3
        auto direct = picard_direct(spec, f.H);
        CHECK(is_isomorphic(q, direct.group));
    }
    CHECK(seen == 2);  // Z/9 has two points of order 3
}

TEST_CASE("quotient and direct agree over random W, with the order identity") {
    auto& f = fx();
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<ClosedPoint> W;
        for (const auto& cp : f.d1)
            if (rng() % 3 == 0) W.push_back(cp);
        OverringSpec spec = make_overring(f.E, W);
        OverringPicardReport rep = overring_report(spec, f.H);
        CHECK(rep.isomorphic);
        CHECK(rep.direct_stable);
        CHECK(rep.order_identity);
    }
}

TEST_CASE("exactness witness: matrix-side kernel matches <Phi(W)>") {
    auto& f = fx();
    auto pic = picard_bruteforce(f.H);
    std::mt19937 rng(99);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<ClosedPoint> W;
        for (const auto& cp : f.d1)
            if (rng() % 2 == 0) W.push_back(cp);
        if (W.empty()) continue;
        OverringSpec spec = make_overring(f.E, W);
        // kernel inside the relation-matrix presentation
        std::vector<std::vector<Int>> imgs;
        for (const auto& P : W) imgs.push_back(pic.coords_of(P));
        FgAbelianGroup matrix_side = subgroup_structure(pic.group, imgs);
        // kernel through the group law
        FgAbelianGroup law_side = removed_class_subgroup(spec, f.G);
        CHECK(matrix_side == law_side);
        CHECK(picard_quotient(spec, f.G).torsion_order() * law_side.torsion_order() ==
              Int(f.G.point_count));
    }
}

TEST_CASE("monotonicity: larger W divides the class number") {
    auto& f = fx();
    std::mt19937 rng(7);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<ClosedPoint> W, W2;
        for (const auto& cp : f.d1) {
            bool in_small = rng() % 4 == 0;
            bool in_big = in_small || rng() % 3 == 0;
            if (in_small) W.push_back(cp);
            if (in_big) W2.push_back(cp);
        }
        Int big = picard_quotient(make_overring(f.E, W), f.G).torsion_order();
        Int small = picard_quotient(make_overring(f.E, W2), f.G).torsion_order();
        CHECK(big % small == 0);
    }
}

TEST_CASE("pushforward: surviving primes survive uniquely, removed ones error") {
    auto& f = fx();
    OverringSpec spec = make_overring(f.E, {f.d1[0], f.d1[3]});
    for (size_t i = 0; i < f.d1.size(); ++i) {
        if (i == 0 || i == 3) {
            CHECK_THROWS_AS(pushforward_check(spec, f.H, f.d1[i]), std::invalid_argument);
        } else {
            CHECK(pushforward_check(spec, f.H, f.d1[i]));
        }
    }
    // distinct surviving primes occupy distinct columns
    std::set<long> cols;
    for (size_t i = 1; i < f.d1.size(); ++i)
        if (i != 3) cols.insert(f.H.column_of(f.d1[i]));
    CHECK(cols.size() == f.d1.size() - 2);
}

TEST_CASE("degree-2 removed primes work through a degree-2 harvest") {
    auto& f = fx();
    RelationHarvest H2 = harvest_relations(f.E, 2, 10);
    const auto& d2 = closed_points_of_degree(f.E, 2);
    REQUIRE(!d2.empty());
    OverringSpec spec = make_overring(f.E, {d2.front()});
    OverringPicardReport rep = overring_report(spec, H2);
    CHECK(rep.isomorphic);
    CHECK(rep.order_identity);
    // a degree-2 prime against a degree-1 harvest is rejected
    CHECK_THROWS_AS(picard_direct(spec, f.H), std::invalid_argument);
}

TEST_CASE("duplicate removed primes rejected") {
    auto& f = fx();
    CHECK_THROWS_AS(make_overring(f.E, {f.d1[0], f.d1[0]}), std::invalid_argument);
}

TEST_CASE("weak repleteness propagates: every nonzero quotient element lifts") {
    auto& f = fx();
    std::mt19937 rng(5);
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<ClosedPoint> W;
        for (const auto& cp : f.d1)
            if (rng() % 3 == 0) W.push_back(cp);
        OverringSpec spec = make_overring(f.E, W);
        std::vector<std::vector<Int>> gens;
        for (const auto& P : W) gens.push_back(f.G.coords_of(closed_point_class(f.E, P)));
        Presentation pres = quotient_by_subgroup(f.G.group, gens);

        std::set<std::vector<Int>> images;
        for (const auto& cp : f.d1) {
            if (std::binary_search(spec.removed.begin(), spec.removed.end(), cp)) continue;
            images.insert(pres.image_of(f.G.coords_of(cp.representative())));
        }
        // enumerate the quotient
        std::set<std::vector<Int>> all;
        std::vector<std::vector<Int>> frontier{pres.reduce(
            std::vector<Int>(pres.group.invariant_factors.size() + pres.group.free_rank, 0))};
        all.insert(frontier[0]);
        while (!frontier.empty()) {
            std::vector<std::vector<Int>> next;
            for (auto& e : frontier)
                for (auto& g : pres.generator_images) {
                    auto s = pres.add(e, g);
                    if (all.insert(s).second) next.push_back(s);
                }
            frontier = std::move(next);
        }
        for (const auto& elem : all) {
            if (pres.is_zero(elem)) continue;
            CHECK(images.count(elem) == 1);
        }
    }
}
