#include "ellpic/zmatrix.hpp"

#include <stdexcept>

namespace ellpic {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix I(n, n);
    for (size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, size_t n) {
    IntMatrix M(rows.size(), n);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("IntMatrix: ragged rows");
        for (size_t j = 0; j < n; ++j) M.at(i, j) = rows[i][j];
    }
    return M;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (n_ != o.m_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix r(m_, o.n_);
    for (size_t i = 0; i < m_; ++i)
        for (size_t k = 0; k < n_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (size_t j = 0; j < o.n_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

std::vector<Int> IntMatrix::row(size_t i) const {
    return std::vector<Int>(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
}

void IntMatrix::append_row(const std::vector<Int>& r) {
    if (n_ == 0 && m_ == 0) n_ = r.size();
    if (r.size() != n_) throw std::invalid_argument("IntMatrix: row width mismatch");
    a_.insert(a_.end(), r.begin(), r.end());
    ++m_;
}

IntMatrix IntMatrix::vstack(const IntMatrix& below) const {
    if (below.m_ == 0) return *this;
    if (m_ == 0) return below;
    if (n_ != below.n_) throw std::invalid_argument("IntMatrix: vstack width mismatch");
    IntMatrix r = *this;
    r.a_.insert(r.a_.end(), below.a_.begin(), below.a_.end());
    r.m_ += below.m_;
    return r;
}

void IntMatrix::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < n_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < m_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(size_t dst, size_t src, const Int& c) {
    if (c == 0) return;
    for (size_t j = 0; j < n_; ++j) at(dst, j) += c * at(src, j);
}

void IntMatrix::add_col_multiple(size_t dst, size_t src, const Int& c) {
    if (c == 0) return;
    for (size_t i = 0; i < m_; ++i) at(i, dst) += c * at(i, src);
}

void IntMatrix::scale_row(size_t i, const Int& c) {
    for (size_t j = 0; j < n_; ++j) at(i, j) *= c;
}

namespace {

// true if the only nonzero entry of row/col s in the trailing submatrix is (s, s)
bool pivot_isolated(const IntMatrix& D, size_t s) {
    for (size_t i = s + 1; i < D.rows(); ++i)
        if (D.at(i, s) != 0) return false;
    for (size_t j = s + 1; j < D.cols(); ++j)
        if (D.at(s, j) != 0) return false;
    return true;
}

bool find_min_pivot(const IntMatrix& D, size_t s, size_t& pi, size_t& pj) {
    bool found = false;
    Int best;
    for (size_t i = s; i < D.rows(); ++i)
        for (size_t j = s; j < D.cols(); ++j) {
            const Int& v = D.at(i, j);
            if (v == 0) continue;
            Int av = abs_int(v);
            if (!found || av < best) {
                found = true;
                best = av;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& M) {
    const size_t m = M.rows(), n = M.cols();
    SmithResult r{M, IntMatrix::identity(m), IntMatrix::identity(n), {}};
    IntMatrix& D = r.D;
    IntMatrix& U = r.U;
    IntMatrix& V = r.V;

    const size_t steps = std::min(m, n);
    for (size_t s = 0; s < steps; ++s) {
        for (;;) {
            size_t pi = s, pj = s;
            if (!find_min_pivot(D, s, pi, pj)) break;  // trailing block all zero
            // smallest-absolute-value pivot to (s, s); rows before columns
            D.swap_rows(s, pi);
            U.swap_rows(s, pi);
            D.swap_cols(s, pj);
            V.swap_cols(s, pj);

            for (size_t i = s + 1; i < m; ++i) {
                if (D.at(i, s) == 0) continue;
                Int c = D.at(i, s) / D.at(s, s);
                D.add_row_multiple(i, s, -c);
                U.add_row_multiple(i, s, -c);
            }
            for (size_t j = s + 1; j < n; ++j) {
                if (D.at(s, j) == 0) continue;
                Int c = D.at(s, j) / D.at(s, s);
                D.add_col_multiple(j, s, -c);
                V.add_col_multiple(j, s, -c);
            }
            if (!pivot_isolated(D, s)) continue;

            // divisibility sweep: the pivot must divide the whole trailing block
            bool fixed = true;
            for (size_t i = s + 1; i < m && fixed; ++i)
                for (size_t j = s + 1; j < n && fixed; ++j)
                    if (D.at(i, j) % D.at(s, s) != 0) {
                        D.add_row_multiple(s, i, 1);
                        U.add_row_multiple(s, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (D.at(s, s) < 0) {
            D.scale_row(s, -1);
            U.scale_row(s, -1);
        }
        if (D.at(s, s) == 0) break;  // the rest of the diagonal is zero too
    }
    for (size_t s = 0; s < steps; ++s)
        if (D.at(s, s) != 0) r.diagonal.push_back(D.at(s, s));
    return r;
}

Int determinant(const IntMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant: square matrix required");
    const size_t n = M.rows();
    if (n == 0) return 1;
    IntMatrix A = M;
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (A.at(k, k) == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && A.at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            A.swap_rows(k, swap_row);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                A.at(i, j) = (A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j)) / prev;
        prev = A.at(k, k);
    }
    return sign * A.at(n - 1, n - 1);
}

IntMatrix row_hermite_basis(const IntMatrix& M) {
    IntMatrix A = M;
    const size_t m = A.rows(), n = A.cols();
    size_t r = 0;  // current pivot row
    std::vector<size_t> pivot_col;
    for (size_t c = 0; c < n && r < m; ++c) {
        // euclid out column c below row r
        for (;;) {
            size_t best = m;
            for (size_t i = r; i < m; ++i) {
                if (A.at(i, c) == 0) continue;
                if (best == m || abs_int(A.at(i, c)) < abs_int(A.at(best, c))) best = i;
            }
            if (best == m) break;
            A.swap_rows(r, best);
            bool clean = true;
            for (size_t i = r + 1; i < m; ++i) {
                if (A.at(i, c) == 0) continue;
                Int q = A.at(i, c) / A.at(r, c);
                A.add_row_multiple(i, r, -q);
                if (A.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (A.at(r, c) == 0) continue;
        if (A.at(r, c) < 0) A.scale_row(r, -1);
        pivot_col.push_back(c);
        ++r;
    }
    // reduce entries above each pivot
    for (size_t k = 0; k < pivot_col.size(); ++k) {
        size_t c = pivot_col[k];
        for (size_t i = 0; i < k; ++i) {
            Int q = A.at(i, c) / A.at(k, c);
            if (A.at(i, c) % A.at(k, c) < 0) q -= 1;  // floor division for canonical 0 <= entry < pivot
            A.add_row_multiple(i, k, -q);
        }
    }
    IntMatrix out(0, n);
    for (size_t i = 0; i < r; ++i) out.append_row(A.row(i));
    return out;
}

IntMatrix left_kernel(const IntMatrix& B) {
    SmithResult s = smith_normal_form(B);
    const size_t m = B.rows();
    const size_t diag = s.diagonal.size();
    IntMatrix out(0, m);
    for (size_t i = diag; i < m; ++i) out.append_row(s.U.row(i));
    return out;
}

}  // namespace ellpic
