#pragma once

#include <unordered_map>
#include <vector>

#include "ellpic/abelian.hpp"
#include "ellpic/curve.hpp"
#include "ellpic/fq.hpp"

namespace ellpic {

using FqCurve = Curve<Fq>;
using FqPoint = Point<Fq>;

/// Stable 64-bit key for hashing points of a fixed curve (field size <= 2^16).
inline uint64_t point_key(const FqPoint& P) {
    if (P.infinity) return 0;
    return (static_cast<uint64_t>(P.x.index()) << 17) | (static_cast<uint64_t>(P.y.index()) << 1) | 1u;
}

/// Solutions y of y^2 + (a1 x + a3) y = rhs(x) for a fixed x, in index order
/// (0, 1 or 2 of them; both characteristics).
std::vector<Fq> y_solutions(const FqCurve& E, const Fq& x);

/// All F_q-rational points: the point at infinity first, then affine points in
/// lexicographic (x, y) index order. Deterministic by contract.
std::vector<FqPoint> enumerate_points(const FqCurve& E);

long frobenius_trace(const FqCurve& E);  // q + 1 - #E(F_q)

/// E(F_q) with explicit generators and a discrete-log table. Coordinates
/// follow the invariant factors: for Z/d1 (+) Z/d2 a point has coordinates
/// (i, j) meaning i*G1 + j*G2.
struct MWGroup {
    FqCurve curve;
    FgAbelianGroup group;
    std::vector<FqPoint> generators;
    std::unordered_map<uint64_t, std::vector<Int>> dlog;
    long point_count = 0;

    const std::vector<Int>& coords_of(const FqPoint& P) const;
    FqPoint point_of(const std::vector<Int>& coords) const;
};

/// Brute-force structure computation (orders plus a two-generator search);
/// valid because enumeration is capped by the field-size bound.
MWGroup group_structure(const FqCurve& E);

/// Order of a point (exact divisor search over the group order).
long point_order(const FqCurve& E, const FqPoint& P, long group_order);

}  // namespace ellpic
