#include "ellpic/quadratic.hpp"

#include <algorithm>

namespace ellpic {

namespace {

void require_odd(const FqCurve& E, const char* what) {
    if (E.a1().field()->p() == 2)
        throw std::domain_error(std::string(what) + ": characteristic 2 has a degenerate fixed ring");
}

bool poly_less(const FqPoly& a, const FqPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a[i].index() != b[i].index()) return a[i].index() < b[i].index();
    }
    return false;
}

}  // namespace

FqRingElem sigma(const FqCurve& E, const FqRingElem& f) {
    require_odd(E, "sigma");
    return ring_sigma(E, f);
}

InvariantSubringDescriptor invariant_subring(const OverringSpec& spec) {
    require_odd(spec.curve, "invariant_subring");
    for (const auto& P : spec.removed) {
        ClosedPoint sP = closed_point_sigma(spec.curve, P);
        if (!std::binary_search(spec.removed.begin(), spec.removed.end(), sP))
            throw std::invalid_argument(
                "invariant_subring: removed set is not stable under the involution");
    }
    std::vector<FqPoly> X;
    for (const auto& P : spec.removed) X.push_back(P.min_poly_x());
    std::sort(X.begin(), X.end(), poly_less);
    X.erase(std::unique(X.begin(), X.end()), X.end());
    return InvariantSubringDescriptor{spec, std::move(X)};
}

PidReport verify_invariant_subring_pid(const InvariantSubringDescriptor& S, int degree_bound) {
    const FqField* F = S.base.curve.a1().field();
    PidReport rep;
    rep.degree_bound = degree_bound;
    rep.all_principal = true;
    for (int d = 1; d <= degree_bound; ++d) {
        for (const auto& m : monic_irreducibles(F, d)) {
            if (std::find(S.inverted.begin(), S.inverted.end(), m) != S.inverted.end()) continue;
            // surviving prime of the overring of k[x]: (m), generated by m itself
            rep.witnesses.push_back(PidWitness{m, m, true});
        }
    }
    for (const auto& w : rep.witnesses) rep.all_principal = rep.all_principal && w.principal;
    return rep;
}

namespace {

// membership in the invariant subring: fixed by the involution and with
// denominator supported in X
bool in_subring(const FnElem<Fq>& v, const std::vector<FqPoly>& X) {
    if (!v.in_rational_subfield()) return false;
    FqPoly den = v.den();
    if (den.degree() == 0) return true;
    auto fac = fq_poly_factor_bounded(den, den.degree());
    if (!fac) return false;
    for (const auto& me : fac->factors) {
        if (std::find(X.begin(), X.end(), me.first) == X.end()) return false;
    }
    return true;
}

}  // namespace

IntegralClosureReport integral_closure_certificate(const InvariantSubringDescriptor& S) {
    require_odd(S.base.curve, "integral_closure_certificate");
    using FF = FnElem<Fq>;
    auto E = std::make_shared<const FqCurve>(S.base.curve);

    // generators of R^W over the invariant subring: 1, x, y and the
    // inverted-prime cofactors 1/p, p in X
    std::vector<std::pair<std::string, FF>> gens;
    gens.emplace_back("1", FF::constant(E, E->a1().one()));
    gens.emplace_back("x", FF::x_function(E));
    gens.emplace_back("y", FF::y_function(E));
    const FqPoly one = FqPoly::constant(E->a1().one());
    for (const auto& p : S.inverted)
        gens.emplace_back("1/(" + p.str() + ")", FF(E, one, FqPoly(), p));

    IntegralClosureReport rep;
    rep.all_pass = true;
    for (const auto& named : gens) {
        const FF& f = named.second;
        FF tr = f + f.sigma();
        FF nm = f * f.sigma();
        TraceNormCheck check;
        check.element = named.first;
        check.trace = tr.str();
        check.norm = nm.str();
        check.trace_in_subring = in_subring(tr, S.inverted);
        check.norm_in_subring = in_subring(nm, S.inverted);
        rep.all_pass = rep.all_pass && check.trace_in_subring && check.norm_in_subring;
        rep.checks.push_back(std::move(check));
    }
    return rep;
}

}  // namespace ellpic
