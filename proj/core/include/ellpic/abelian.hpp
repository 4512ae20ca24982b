#pragma once

#include <string>
#include <vector>

#include "ellpic/zmatrix.hpp"

namespace ellpic {

/// Finitely generated abelian group in normal form: free rank plus invariant
/// factors d1 | d2 | ... with every d_i >= 2. Trivial group: rank 0, no
/// factors.
struct FgAbelianGroup {
    long free_rank = 0;
    std::vector<Int> invariant_factors;

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    bool is_finite() const { return free_rank == 0; }
    /// Order of the torsion part (the full order when finite).
    Int torsion_order() const {
        Int o = 1;
        for (const auto& d : invariant_factors) o *= d;
        return o;
    }
    bool operator==(const FgAbelianGroup& o) const {
        return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
    }
    std::string str() const;
};

inline bool is_isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b) { return a == b; }

/// Normalize an arbitrary list of torsion orders (each >= 2, any order) plus a
/// free rank into the canonical invariant-factor chain.
FgAbelianGroup normalized_group(long free_rank, const std::vector<Int>& torsion_orders);

/// Z^n modulo the row span of `relations`, together with where each standard
/// basis vector lands. Coordinates of the quotient: one coordinate per
/// invariant factor (in chain order), then one per free Z summand.
struct Presentation {
    FgAbelianGroup group;
    std::vector<std::vector<Int>> generator_images;  // n rows of length (t + free_rank)

    std::vector<Int> reduce(std::vector<Int> coords) const;
    std::vector<Int> image_of(const std::vector<Int>& vector_in_Zn) const;
    bool is_zero(const std::vector<Int>& coords) const;
    std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const;
    std::vector<Int> negate(const std::vector<Int>& a) const;
};

Presentation group_from_presentation(size_t n, const IntMatrix& relations);

/// Structure of the subgroup of G generated by elements given in G's
/// normalized coordinates (G finite or not; generators with free coordinates
/// allowed).
FgAbelianGroup subgroup_structure(const FgAbelianGroup& G,
                                  const std::vector<std::vector<Int>>& generators);

/// Quotient of G by the subgroup generated by the given elements, with the
/// projection of G's coordinate basis.
Presentation quotient_by_subgroup(const FgAbelianGroup& G,
                                  const std::vector<std::vector<Int>>& generators);

}  // namespace ellpic
