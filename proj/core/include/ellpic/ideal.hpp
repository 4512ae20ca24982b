#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ellpic/abelian.hpp"
#include "ellpic/curve_ring.hpp"
#include "ellpic/errors.hpp"
#include "ellpic/polymat.hpp"

namespace ellpic {

/// Fractional ideal of k[E], held as a Hermite-canonical k[x]-module basis
/// relative to {1, y} plus a monic polynomial denominator. The basis columns
/// are (u, 0) and (v, w); closure under multiplication by y is verified at
/// construction, and the common polynomial content is cancelled against the
/// denominator so equal ideals compare equal.
class FractionalIdeal {
public:
    static FractionalIdeal unit_ideal(const FqCurve& E);
    /// Integral ideal generated by ring elements (as an ideal, not merely a
    /// module: y-multiples are included automatically).
    static FractionalIdeal from_generators(const FqCurve& E, const std::vector<FqRingElem>& gens);
    static FractionalIdeal principal(const FqCurve& E, const FqRingElem& f);
    static FractionalIdeal from_module_basis(const FqCurve& E, HermiteCols h, FqPoly den);

    const FqCurve& curve() const { return E_; }
    const HermiteCols& basis() const { return h_; }
    const FqPoly& denominator() const { return den_; }
    bool is_integral() const { return den_.degree() == 0; }

    /// Ideal norm of the numerator module: det of the basis = u * w, monic.
    FqPoly norm_numerator() const { return h_.u * h_.w; }

    /// Membership of a ring element in the numerator module (for integral
    /// ideals this is ideal membership).
    bool contains(const FqRingElem& f) const;

    FractionalIdeal conjugate() const;  // image under the involution

    bool operator==(const FractionalIdeal& o) const {
        return E_ == o.E_ && h_ == o.h_ && den_ == o.den_;
    }

    friend FractionalIdeal ideal_mul(const FractionalIdeal& I, const FractionalIdeal& J);

private:
    FractionalIdeal(FqCurve E, HermiteCols h, FqPoly den)
        : E_(std::move(E)), h_(std::move(h)), den_(std::move(den)) {}
    FqCurve E_;
    HermiteCols h_;
    FqPoly den_;
};

FractionalIdeal ideal_mul(const FractionalIdeal& I, const FractionalIdeal& J);

/// The prime ideal attached to a closed point: (m(x), y - t(x)) when the
/// x-coordinate generates the residue field, (m(x)) for the inert points.
FractionalIdeal ideal_from_closed_point(const FqCurve& E, const ClosedPoint& P);

/// The closed points lying over a monic irreducible m, with the ramification
/// index of each (1 for split and inert, 2 for the ramified fiber).
std::vector<std::pair<ClosedPoint, int>> primes_above(const FqCurve& E, const FqPoly& m);

struct PrincipalitySearchOptions {
    long long max_candidates = 10'000'000;
};

/// Exhaustive principality test for an integral ideal. Complete: a generator
/// f = a + b y must have deg N(f) = deg N(I), and the norm-degree law
/// max(2 deg a, 2 deg b + 3) pins (deg a, deg b) to a finite set which is
/// searched in full. Returns a generator or nullopt; throws budget_error when
/// q^(deg N / 2) outgrows the candidate budget.
std::optional<FqRingElem> is_principal(const FractionalIdeal& I,
                                       const PrincipalitySearchOptions& opts = {});

/// Unique factorization into closed-point primes with multiplicities. Throws
/// budget_error when the norm has an irreducible factor whose primes exceed
/// max_point_degree.
std::vector<std::pair<ClosedPoint, int>> factor_ideal(const FractionalIdeal& I,
                                                      int max_point_degree = 4);

struct HarvestOptions {
    long long max_candidates = 400'000'000;
};

/// Relation harvest for the ideal-theoretic class-group computation: columns
/// are the closed points of degree <= degree_bound, rows span the lattice of
/// factorization vectors of the principal ideals (f) over all f with
/// deg N(f) <= norm_budget whose prime factors stay inside the generator set.
/// Elements are enumerated in increasing norm degree; snapshots of the lattice
/// are kept at norm levels B-4, B-2, B so stability can be judged.
struct RelationHarvest {
    FqCurve curve;
    int degree_bound;
    int norm_budget;
    std::vector<ClosedPoint> generators;
    IntMatrix lattice;                // canonical row basis after the full run
    std::vector<IntMatrix> snapshots; // lattices at B-4, B-2, B (empty if B < 6)
    long long candidates = 0;
    long long relations = 0;

    long column_of(const ClosedPoint& P) const;  // -1 if absent
};

RelationHarvest harvest_relations(const FqCurve& E, int degree_bound, int norm_budget,
                                  const HarvestOptions& opts = {});

/// Ideal-theoretic presentation of Pic(k[E]): generators, invariant factors,
/// and the discrete-log data. Built without the chord-tangent law anywhere in
/// the path, so it can serve as the independent oracle against the
/// Mordell-Weil computation.
struct IdealClassGroupResult {
    FqCurve curve;
    FgAbelianGroup group;
    std::vector<ClosedPoint> generators;
    std::vector<std::vector<Int>> generator_coords;  // aligned with generators
    bool stable = false;
    long long relations = 0;

    const std::vector<Int>& coords_of(const ClosedPoint& P) const;
};

IdealClassGroupResult picard_bruteforce(const FqCurve& E, int degree_bound, int norm_budget,
                                        const HarvestOptions& opts = {});
IdealClassGroupResult picard_bruteforce(const RelationHarvest& harvest);

}  // namespace ellpic
