#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellpic/overring.hpp"
#include "ellpic/quadratic.hpp"
#include "ellpic/tower.hpp"

namespace ellpic {

/// Target group for the realization engine: free rank plus torsion orders
/// (not necessarily a divisibility chain; normalized internally).
struct GroupSpec {
    long free_rank = 0;
    std::vector<Int> torsion;

    FgAbelianGroup normalized() const { return normalized_group(free_rank, torsion); }
    std::string str() const;
};

struct CertificateAxiom {
    std::string statement;
    std::string citation;
};

/// Finite-field witness block: a curve, a sigma-stable set of removed
/// degree-1 primes, and both class-group computations agreeing with the
/// target. Everything in it is replayable.
struct FiniteDemo {
    long q = 0;
    std::vector<long> curve_coeffs;          // a1, a2, a3, a4, a6 as element indices
    FgAbelianGroup curve_group;
    std::vector<std::pair<long, long>> removed_xy;  // degree-1 removed points
    FgAbelianGroup quotient;
    FgAbelianGroup direct;
    bool agree = false;
    bool sigma_stable = false;
    bool pid_all_principal = false;
    bool integral_closure_pass = false;
};

/// Serialized witness of a realization Pic(R) ~ A through the function-field
/// tower: the base curve, the tower height, the kill subgroup H, the removed
/// points (with their negations, keeping the set involution-stable), the two
/// trusted axioms with citations, and a recomputable transcript.
struct Certificate {
    int version = 1;

    // base curve over Q (always the pinned rank-zero curve)
    std::vector<long> base_coeffs;  // 0, 0, 1, -49, -86
    std::string base_j;             // "110592/37"

    int tower_height = 0;
    std::vector<std::vector<Int>> kill_generators;

    struct RemovedPoint {
        std::string name;       // e.g. "5*Q1"
        std::string negation;   // e.g. "-5*Q1"
        std::vector<Int> vector;
        std::vector<Int> neg_vector;
    };
    std::vector<RemovedPoint> removed_points;
    bool sigma_stable = false;

    GroupSpec target;
    std::vector<CertificateAxiom> axioms;

    // transcript (everything below is recomputed by verify)
    std::vector<Int> snf_diagonal;
    FgAbelianGroup computed_group;
    bool matches_target = false;
    std::string trace_y;  // trace and norm of y over the base curve
    std::string norm_y;
    std::vector<std::string> tower_generators;

    std::optional<FiniteDemo> demo;
};

struct RealizeOptions {
    long max_rank_plus_torsion = 64;
    bool attach_demo = true;
    long demo_q_max = 13;
};

/// Build a certificate realizing the given group as the class group of an
/// overring of the coordinate ring along the function-field tower.
Certificate realize(const GroupSpec& spec, const RealizeOptions& opts = {});

/// Re-derivation of every claim in a certificate. Each step is named; the
/// report carries the first failing step.
struct VerifyStep {
    std::string name;
    bool passed = false;
    std::string detail;
};
struct VerifyReport {
    std::vector<VerifyStep> steps;
    bool passed = false;
    std::string first_failure;
};
VerifyReport verify_certificate(const Certificate& c);

/// Search result of the finite shadow: a concrete curve and removed set whose
/// overring has the requested class group, with both computations run.
struct FiniteDemoResult {
    FqCurve curve;
    long q;
    std::vector<ClosedPoint> removed;
    MWGroup group;
    FgAbelianGroup quotient;
    FgAbelianGroup direct;
    bool direct_stable;
};
std::optional<FiniteDemoResult> realize_finite_demo(const GroupSpec& spec, long q_max);

/// Every subgroup of the class group is generated by classes of primes; for
/// the coordinate ring this is checked by verifying that the degree-1 prime
/// classes are exactly the nonidentity group elements.
struct WeakRepletenessReport {
    bool passed = false;
    std::vector<std::pair<std::string, std::string>> class_to_prime;  // class, prime
};
WeakRepletenessReport weak_repleteness_check(const FqCurve& E);

enum class RepletenessVerdict { replete_with_witnesses, unknown_at_bound, not_replete };

struct RepletenessWitness {
    std::string group_element;  // rendered class
    std::string prime;          // rendered closed point
    int degree;
    bool recomputed_class_matches;
};
struct RepletenessReport {
    RepletenessVerdict verdict = RepletenessVerdict::unknown_at_bound;
    int degree_bound = 0;
    std::vector<RepletenessWitness> witnesses;
    long classes_total = 0;
    long classes_witnessed = 0;
    /// x0 with no rational point above it: the fiber there is a conjugate
    /// pair whose class is the identity (odd characteristic only).
    std::optional<long> conjugate_pair_x0;
};
RepletenessReport repleteness_check(const FqCurve& E, int max_degree,
                                    bool assume_algebraically_closed = false);

}  // namespace ellpic
