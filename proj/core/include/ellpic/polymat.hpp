#pragma once

#include <utility>
#include <vector>

#include "ellpic/fq_poly.hpp"

namespace ellpic {

/// 2x2 matrix over F_q[x], stored row-major: rows (a b) and (c d); the columns
/// (a, c), (b, d) are the generators when the matrix presents a module.
struct PolyMat22 {
    FqPoly a, b, c, d;
    bool operator==(const PolyMat22& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

/// Canonical column Hermite form of a rank-2 k[x]-submodule of k[x]^2 given by
/// generating columns: basis columns (u, 0) and (v, w) with u, w monic and
/// deg v < deg u. Throws if the columns do not span a rank-2 module.
struct HermiteCols {
    FqPoly u, v, w;
    bool operator==(const HermiteCols& o) const { return u == o.u && v == o.v && w == o.w; }
};

HermiteCols hermite_from_columns(const std::vector<std::pair<FqPoly, FqPoly>>& cols);

/// Canonical upper-triangular form of a nonsingular 2x2 matrix, column span
/// preserved. Throws std::domain_error on singular input.
PolyMat22 hermite_form(const PolyMat22& M);

}  // namespace ellpic
