#pragma once

#include <cstddef>
#include <vector>

#include "ellpic/numbers.hpp"

namespace ellpic {

/// Dense matrix of exact integers. Plumbing type: presentations of class
/// groups as relation matrices, unimodular transforms, lattice bases.
class IntMatrix {
public:
    IntMatrix() : m_(0), n_(0) {}
    IntMatrix(size_t m, size_t n) : m_(m), n_(n), a_(m * n) {}
    static IntMatrix identity(size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, size_t n);

    size_t rows() const { return m_; }
    size_t cols() const { return n_; }
    Int& at(size_t i, size_t j) { return a_[i * n_ + j]; }
    const Int& at(size_t i, size_t j) const { return a_[i * n_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return m_ == o.m_ && n_ == o.n_ && a_ == o.a_; }

    std::vector<Int> row(size_t i) const;
    void append_row(const std::vector<Int>& r);
    IntMatrix vstack(const IntMatrix& below) const;

    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);
    void add_row_multiple(size_t dst, size_t src, const Int& c);   // row dst += c * row src
    void add_col_multiple(size_t dst, size_t src, const Int& c);
    void scale_row(size_t i, const Int& c);

private:
    size_t m_, n_;
    std::vector<Int> a_;
};

/// D = U * M * V with U, V unimodular, D diagonal, nonzero diagonal entries
/// positive and forming a divisibility chain d1 | d2 | ...
struct SmithResult {
    IntMatrix D, U, V;
    std::vector<Int> diagonal;  // nonzero diagonal entries, in chain order
};

SmithResult smith_normal_form(const IntMatrix& M);

/// Exact determinant of a square matrix (Bareiss). Independent of the Smith
/// machinery so the two can cross-check each other.
Int determinant(const IntMatrix& M);

/// Canonical basis of the row lattice: row-style Hermite normal form with
/// positive pivots and reduced entries above them; zero rows dropped.
IntMatrix row_hermite_basis(const IntMatrix& M);

/// Rows spanning the left kernel { z : z * B = 0 }.
IntMatrix left_kernel(const IntMatrix& B);

}  // namespace ellpic
