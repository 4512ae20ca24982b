#include "ellpic/polymat.hpp"

#include <stdexcept>

namespace ellpic {

HermiteCols hermite_from_columns(const std::vector<std::pair<FqPoly, FqPoly>>& cols) {
    // Fold all columns into one with bottom entry gcd(bottoms) plus a set of
    // bottom-zero columns; each pairwise step is unimodular, so the module is
    // unchanged.
    std::pair<FqPoly, FqPoly> main;  // bottom entry will be the running gcd
    bool have_main = false;
    std::vector<FqPoly> zero_tops;
    for (const auto& col : cols) {
        if (col.first.is_zero() && col.second.is_zero()) continue;
        if (col.second.is_zero()) {
            zero_tops.push_back(col.first);
            continue;
        }
        if (!have_main) {
            main = col;
            have_main = true;
            continue;
        }
        auto e = poly_ext_gcd(main.second, col.second);
        FqPoly q1 = main.second / e.g;
        FqPoly q2 = col.second / e.g;
        // [s t; q2 -q1] has determinant -(s*b1 + t*b2)/g = -1
        FqPoly new_top = e.s * main.first + e.t * col.first;
        FqPoly zero_top = q2 * main.first - q1 * col.first;
        main = {new_top, e.g};
        zero_tops.push_back(zero_top);
    }
    if (!have_main) throw std::domain_error("hermite_from_columns: module misses the y-direction");

    FqPoly u;
    for (const auto& t : zero_tops) u = poly_gcd(u, t);
    if (u.is_zero()) throw std::domain_error("hermite_from_columns: module has rank < 2");

    FqPoly w = main.second.monic();
    Fq scale = main.second.lead().inv();
    FqPoly v = (main.first * scale) % u;
    return HermiteCols{u, v, w};
}

PolyMat22 hermite_form(const PolyMat22& M) {
    FqPoly det = M.a * M.d - M.b * M.c;
    if (det.is_zero()) throw std::domain_error("hermite_form: singular matrix");
    HermiteCols h = hermite_from_columns({{M.a, M.c}, {M.b, M.d}});
    return PolyMat22{h.u, h.v, FqPoly(), h.w};
}

}  // namespace ellpic
