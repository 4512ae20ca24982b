#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellpic/fq.hpp"

using namespace ellpic;

TEST_CASE("prime field arithmetic") {
    const FqField* F = FqField::get(7, 1);
    Fq a(F, 3), b(F, 5);
    CHECK((a + b).index() == 1);
    CHECK((a * b).index() == 1);
    CHECK((a - b).index() == 5);
    CHECK((a.inv() * a) == a.one());
    CHECK(a.pow(6) == a.one());
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(12345);
    for (long q_spec : {5L, 8L, 9L, 13L, 16L, 25L, 49L}) {
        long p = 2;
        while (q_spec % p) ++p;
        int k = 0;
        for (long t = q_spec; t > 1; t /= p) ++k;
        const FqField* F = FqField::get(p, k);
        REQUIRE(F->q() == q_spec);
        std::uniform_int_distribution<long> dist(0, F->q() - 1);
        for (int iter = 0; iter < 200; ++iter) {
            Fq a(F, dist(rng)), b(F, dist(rng)), c(F, dist(rng));
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == a.zero());
            if (!a.is_zero()) CHECK(a * a.inv() == a.one());
        }
    }
}

TEST_CASE("modulus is deterministic and irreducible") {
    const FqField* F9 = FqField::get(3, 2);
    // least monic irreducible of degree 2 over F_3 in the canonical order:
    // x^2 + 1 (codes 0 = x^2, 1 = x^2+1; x^2 is reducible)
    CHECK(F9->modulus() == std::vector<long>{1, 0, 1});
    const FqField* F4 = FqField::get(2, 2);
    CHECK(F4->modulus() == std::vector<long>{1, 1, 1});  // x^2 + x + 1
    // same pointer on repeated lookup
    CHECK(FqField::get(3, 2) == F9);
}

TEST_CASE("frobenius fixes exactly the prime field") {
    const FqField* F = FqField::get(3, 3);
    int fixed = 0;
    for (long i = 0; i < F->q(); ++i)
        if (F->frobenius(i) == i) ++fixed;
    CHECK(fixed == 3);
}

TEST_CASE("sqrt tables") {
    const FqField* F13 = FqField::get(13, 1);
    int squares = 0;
    for (long a = 1; a < 13; ++a)
        if (F13->sqrt(a)) {
            ++squares;
            long r = *F13->sqrt(a);
            CHECK(F13->mul(r, r) == a);
        }
    CHECK(squares == 6);

    const FqField* F16 = FqField::get(2, 4);
    for (long a = 0; a < 16; ++a) {
        long r = *F16->sqrt(a);  // squaring is a bijection in char 2
        CHECK(F16->mul(r, r) == a);
    }
}

TEST_CASE("embedding F_9 -> F_81 is a ring hom with inverse lookup") {
    const FqField* F9 = FqField::get(3, 2);
    const FqField* F81 = FqField::get(3, 4);
    const FqEmbedding* e = FqEmbedding::get(F9, F81);
    for (long a = 0; a < 9; ++a)
        for (long b = 0; b < 9; ++b) {
            Fq x(F9, a), y(F9, b);
            CHECK(e->map(x + y) == e->map(x) + e->map(y));
            CHECK(e->map(x * y) == e->map(x) * e->map(y));
        }
    CHECK(e->map(Fq(F9, 0).one()) == Fq(F81, 0).one());
    for (long a = 0; a < 9; ++a) {
        auto back = e->preimage(e->map(Fq(F9, a)));
        REQUIRE(back.has_value());
        CHECK(back->index() == a);
    }
    // elements outside the subfield have no preimage
    int inside = 0;
    for (long b = 0; b < 81; ++b)
        if (e->preimage(Fq(F81, b))) ++inside;
    CHECK(inside == 9);
}

TEST_CASE("field size bound enforced") {
    CHECK_THROWS_AS(FqField::get(2, 17), std::invalid_argument);
    CHECK_THROWS_AS(FqField::get(6, 1), std::invalid_argument);  // not prime
}
