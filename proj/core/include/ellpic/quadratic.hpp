#pragma once

#include <string>
#include <vector>

#include "ellpic/function_field.hpp"
#include "ellpic/overring.hpp"

namespace ellpic {

/// Hyperelliptic involution on ring elements, restricted to odd
/// characteristic (the fixed ring degenerates in characteristic 2).
FqRingElem sigma(const FqCurve& E, const FqRingElem& f);

/// The sigma-invariant subring of an overring R^W: an overring of k[x]
/// described by the finite set X of monic irreducibles inverted in it (the
/// x-coordinate minimal polynomials of the removed primes). Only defined when
/// W is stable under the involution.
struct InvariantSubringDescriptor {
    OverringSpec base;
    std::vector<FqPoly> inverted;  // X, sorted by coefficient order, duplicate-free
};

InvariantSubringDescriptor invariant_subring(const OverringSpec& spec);

/// Triviality of the class group of the invariant subring, checked by
/// exhibiting a monic irreducible generator for every surviving prime of
/// degree <= degree_bound. For an overring of a PID this must always succeed;
/// the report carries the witnesses.
struct PidWitness {
    FqPoly prime;      // the surviving monic irreducible
    FqPoly generator;  // exhibited generator (the prime itself)
    bool principal;
};
struct PidReport {
    std::vector<PidWitness> witnesses;
    int degree_bound = 0;
    bool all_principal = false;
};
PidReport verify_invariant_subring_pid(const InvariantSubringDescriptor& S, int degree_bound = 3);

/// Trace/norm membership checks witnessing that R^W is integral over its
/// sigma-invariant subring: each generator f of R^W over S satisfies
/// (t - f)(t - sigma f), whose coefficients f + sigma(f) and f * sigma(f)
/// must land in S (polynomials in x with denominators supported in X).
struct TraceNormCheck {
    std::string element;
    std::string trace;
    std::string norm;
    bool trace_in_subring = false;
    bool norm_in_subring = false;
};
struct IntegralClosureReport {
    std::vector<TraceNormCheck> checks;
    bool all_pass = false;
};
IntegralClosureReport integral_closure_certificate(const InvariantSubringDescriptor& S);

}  // namespace ellpic
