#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellpic/zmatrix.hpp"

using namespace ellpic;

namespace {

IntMatrix mat(const std::vector<std::vector<long>>& rows) {
    IntMatrix M(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) M.at(i, j) = rows[i][j];
    return M;
}

bool is_diagonal_chain(const SmithResult& s) {
    for (size_t i = 0; i < s.D.rows(); ++i)
        for (size_t j = 0; j < s.D.cols(); ++j)
            if (i != j && s.D.at(i, j) != 0) return false;
    for (size_t i = 0; i + 1 < s.diagonal.size(); ++i)
        if (s.diagonal[i + 1] % s.diagonal[i] != 0) return false;
    return true;
}

void check_transform(const IntMatrix& M, const SmithResult& s) {
    CHECK(s.U * M * s.V == s.D);
    CHECK(abs_int(determinant(s.U)) == 1);
    CHECK(abs_int(determinant(s.V)) == 1);
}

}  // namespace

TEST_CASE("smith normal form: pinned examples") {
    {
        IntMatrix I = IntMatrix::identity(2);
        auto s = smith_normal_form(I);
        CHECK(s.D == I);
        check_transform(I, s);
    }
    {
        IntMatrix M = mat({{0, 1}, {1, 0}});
        auto s = smith_normal_form(M);
        CHECK(s.diagonal == std::vector<Int>{1, 1});
        check_transform(M, s);
    }
    {
        IntMatrix M = mat({{2, 0}, {0, 3}});
        auto s = smith_normal_form(M);
        CHECK(s.diagonal == std::vector<Int>{1, 6});
        check_transform(M, s);
    }
}

TEST_CASE("smith normal form: idempotence and determinant preservation") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> dist(-9, 9);
    for (int iter = 0; iter < 60; ++iter) {
        size_t n = 1 + iter % 5;
        IntMatrix M(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) M.at(i, j) = dist(rng);
        auto s = smith_normal_form(M);
        CHECK(is_diagonal_chain(s));
        check_transform(M, s);

        Int det = determinant(M);
        if (det != 0) {
            Int prod = 1;
            for (const auto& d : s.diagonal) prod *= d;
            CHECK(prod == abs_int(det));
        }
        // idempotence
        auto s2 = smith_normal_form(s.D);
        CHECK(s2.D == s.D);
    }
}

TEST_CASE("smith normal form: rectangular") {
    IntMatrix M = mat({{2, 4, 4}});
    auto s = smith_normal_form(M);
    CHECK(s.diagonal == std::vector<Int>{2});
    check_transform(M, s);

    IntMatrix N = mat({{2, 0}, {0, 2}, {1, 1}});
    auto t = smith_normal_form(N);
    CHECK(t.diagonal == std::vector<Int>{1, 2});
    check_transform(N, t);
}

TEST_CASE("row hermite basis is canonical for the row lattice") {
    IntMatrix A = mat({{2, 0}, {0, 3}, {2, 3}});
    IntMatrix B = mat({{2, 3}, {2, 0}, {4, 3}});
    CHECK(row_hermite_basis(A) == row_hermite_basis(B));
    IntMatrix H = row_hermite_basis(A);
    CHECK(H.rows() == 2);
}

TEST_CASE("left kernel") {
    IntMatrix B = mat({{1, 0}, {2, 0}, {0, 1}});
    IntMatrix K = left_kernel(B);
    REQUIRE(K.rows() == 1);
    // kernel row z satisfies z * B = 0
    IntMatrix prod = K * B;
    for (size_t j = 0; j < prod.cols(); ++j) CHECK(prod.at(0, j) == 0);
}

TEST_CASE("entries grow without overflow") {
    // alternating +/- large-ish values force big intermediates
    IntMatrix M(4, 4);
    long v = 1;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            M.at(i, j) = Int(v) * Int(1000000007LL);
            v = -v * 3;
        }
    auto s = smith_normal_form(M);
    check_transform(M, s);
}
