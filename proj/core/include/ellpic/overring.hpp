#pragma once

#include <vector>

#include "ellpic/ideal.hpp"

namespace ellpic {

/// An overring of k[E] described by the finite set W of primes that become
/// trivial in it. Never materialized as a ring: every fact about it is
/// derived through ideal data of k[E].
struct OverringSpec {
    FqCurve curve;
    std::vector<ClosedPoint> removed;  // W, duplicate-free and sorted
};

OverringSpec make_overring(const FqCurve& E, std::vector<ClosedPoint> removed);

/// Pic of the overring through the exact sequence: E(F_q) modulo the subgroup
/// generated by the classes of the removed primes.
FgAbelianGroup picard_quotient(const OverringSpec& spec);
FgAbelianGroup picard_quotient(const OverringSpec& spec, const MWGroup& G);

/// The subgroup generated by the classes of the removed primes, as an
/// abstract group.
FgAbelianGroup removed_class_subgroup(const OverringSpec& spec, const MWGroup& G);

/// Pic of the overring computed on the other side of the exact sequence:
/// relation-matrix surgery on the raw ideal-theoretic harvest (unit relations
/// appended for the removed primes), never touching the finished Pic(k[E])
/// group or the chord-tangent law.
struct DirectPicardResult {
    FgAbelianGroup group;
    bool stable = false;
    /// images of the surviving generators in the pruned presentation,
    /// aligned with the harvest generator list (removed columns present but
    /// mapped to zero)
    std::vector<std::vector<Int>> generator_images;
};

DirectPicardResult picard_direct(const OverringSpec& spec, const RelationHarvest& harvest);
DirectPicardResult picard_direct(const OverringSpec& spec, int degree_bound, int norm_budget,
                                 const HarvestOptions& opts = {});

/// Lemma-level bookkeeping check for a surviving prime: P is not removed, is
/// representable in the harvest generator set, appears there exactly once,
/// and received no unit relation. Throws std::invalid_argument when P is in W.
bool pushforward_check(const OverringSpec& spec, const RelationHarvest& harvest,
                       const ClosedPoint& P);

/// Both computations side by side plus the exact-sequence bookkeeping.
struct OverringPicardReport {
    FgAbelianGroup quotient;
    FgAbelianGroup direct;
    bool direct_stable = false;
    bool isomorphic = false;
    FgAbelianGroup kernel;   // <Phi(W)> inside E(F_q)
    Int kernel_order = 1;
    Int curve_order = 0;     // #E(F_q)
    bool order_identity = false;  // |Pic(S)| * |<Phi(W)>| == #E(F_q)
};

OverringPicardReport overring_report(const OverringSpec& spec, const RelationHarvest& harvest);

}  // namespace ellpic
