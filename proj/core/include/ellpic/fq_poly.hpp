#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ellpic/fq.hpp"
#include "ellpic/poly.hpp"

namespace ellpic {

using FqPoly = Polynomial<Fq>;

FqPoly fq_poly_from_indices(const FqField* F, const std::vector<long>& idx);

/// All monic irreducibles of degree d over F, in index order (cached; the
/// order is the canonical enumeration order used by factorizations).
const std::vector<FqPoly>& monic_irreducibles(const FqField* F, int d);

bool fq_poly_irreducible(const FqPoly& f);

/// Roots in the given field (which may be an extension of the coefficient
/// field via the canonical embedding), in index order.
std::vector<Fq> fq_poly_roots(const FqPoly& f, const FqField* in_field);

/// Square root of f in F_q[x] for odd characteristic; nullopt if f is not a
/// perfect square.
std::optional<FqPoly> fq_poly_sqrt(const FqPoly& f);

/// Factor a nonzero f into monic irreducibles with all factors of degree
/// <= max_degree, plus the unit leading coefficient. Returns nullopt if an
/// irreducible factor of higher degree remains.
struct FqFactorization {
    Fq unit;
    std::vector<std::pair<FqPoly, int>> factors;  // (monic irreducible, multiplicity)
};
std::optional<FqFactorization> fq_poly_factor_bounded(const FqPoly& f, int max_degree);

/// Unique interpolating polynomial of degree < points.size() through distinct
/// x-values; coefficients live in the points' field.
FqPoly fq_poly_interpolate(const std::vector<std::pair<Fq, Fq>>& points);

/// Map a polynomial's coefficients through an embedding.
FqPoly fq_poly_map(const FqPoly& f, const FqEmbedding* emb);

/// Pull coefficients back through an embedding; nullopt if any coefficient
/// lies outside the embedded subfield.
std::optional<FqPoly> fq_poly_preimage(const FqPoly& f, const FqEmbedding* emb);

}  // namespace ellpic
