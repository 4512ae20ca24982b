#include "ellpic/curve_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellpic {

std::vector<Fq> y_solutions(const FqCurve& E, const Fq& x) {
    const FqField* F = x.field();
    Fq c = E.ylin(x);
    Fq f = E.rhs(x);
    std::vector<long> ys;
    if (F->p() != 2) {
        // y^2 + c y = f  <=>  (y + c/2)^2 = f + c^2/4
        Fq half = x.from_int(2).inv();
        Fq shift = c * half;
        Fq s = f + shift * shift;
        if (s.is_zero()) {
            ys.push_back((-shift).index());
        } else if (auto r = F->sqrt(s.index())) {
            Fq root(F, *r);
            ys.push_back((root - shift).index());
            ys.push_back((-root - shift).index());
        }
    } else {
        if (c.is_zero()) {
            // y^2 = f has the single solution y = f^(q/2)
            ys.push_back(*F->sqrt(f.index()));
        } else {
            // substitute y = c z: z^2 + z = f / c^2
            Fq v = f * (c * c).inv();
            if (auto z = F->artin_schreier_root(v.index())) {
                Fq z0(F, *z);
                ys.push_back((c * z0).index());
                ys.push_back((c * (z0 + z0.one())).index());
            }
        }
    }
    std::sort(ys.begin(), ys.end());
    std::vector<Fq> out;
    for (long yi : ys) out.emplace_back(F, yi);
    return out;
}

std::vector<FqPoint> enumerate_points(const FqCurve& E) {
    const FqField* F = E.a1().field();
    std::vector<FqPoint> pts;
    pts.push_back(FqPoint::at_infinity());
    for (long xi = 0; xi < F->q(); ++xi) {
        Fq x(F, xi);
        for (const Fq& y : y_solutions(E, x)) pts.push_back(FqPoint::affine(x, y));
    }
    return pts;
}

long frobenius_trace(const FqCurve& E) {
    return E.a1().field()->q() + 1 - static_cast<long>(enumerate_points(E).size());
}

long point_order(const FqCurve& E, const FqPoint& P, long group_order) {
    if (P.infinity) return 1;
    long best = group_order;
    for (long d = 1; d * d <= group_order; ++d) {
        if (group_order % d) continue;
        if (d > 1 && d < best && E.scalar_mul(d, P).infinity) best = std::min(best, d);
        long e = group_order / d;
        if (e < best && E.scalar_mul(e, P).infinity) best = std::min(best, e);
    }
    return best;
}

const std::vector<Int>& MWGroup::coords_of(const FqPoint& P) const {
    auto it = dlog.find(point_key(P));
    if (it == dlog.end()) throw std::invalid_argument("MWGroup: point not on curve");
    return it->second;
}

FqPoint MWGroup::point_of(const std::vector<Int>& coords) const {
    if (coords.size() != generators.size()) throw std::invalid_argument("MWGroup: coordinate length");
    FqPoint acc = FqPoint::at_infinity();
    for (size_t i = 0; i < coords.size(); ++i) {
        long long c = coords[i].convert_to<long long>();
        acc = curve.add(acc, curve.scalar_mul(c, generators[i]));
    }
    return acc;
}

MWGroup group_structure(const FqCurve& E) {
    std::vector<FqPoint> pts = enumerate_points(E);
    const long N = static_cast<long>(pts.size());
    MWGroup out{E, {}, {}, {}, N};

    if (N == 1) {
        out.dlog.emplace(point_key(pts[0]), std::vector<Int>{});
        return out;
    }

    // exponent of the group = max point order
    long m = 1;
    FqPoint P = pts[0];
    for (const auto& pt : pts) {
        long o = point_order(E, pt, N);
        if (o > m) {
            m = o;
            P = pt;
        }
    }

    if (m == N) {
        out.group.invariant_factors = {Int(N)};
        out.generators = {P};
        FqPoint acc = FqPoint::at_infinity();
        for (long j = 0; j < N; ++j) {
            out.dlog.emplace(point_key(acc), std::vector<Int>{Int(j)});
            acc = E.add(acc, P);
        }
        return out;
    }

    const long d1 = N / m;
    // complement generator: first point of order d1 meeting <P> trivially
    std::unordered_map<uint64_t, long> cyclic;  // <P> with exponents
    {
        FqPoint acc = FqPoint::at_infinity();
        for (long j = 0; j < m; ++j) {
            cyclic.emplace(point_key(acc), j);
            acc = E.add(acc, P);
        }
    }
    FqPoint Q;
    bool found = false;
    for (const auto& cand : pts) {
        if (cand.infinity) continue;
        if (point_order(E, cand, N) != d1) continue;
        bool independent = true;
        FqPoint acc = cand;
        for (long k = 1; k < d1 && independent; ++k) {
            if (cyclic.count(point_key(acc))) independent = false;
            acc = E.add(acc, cand);
        }
        if (independent) {
            Q = cand;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("group_structure: no direct complement found");

    out.group.invariant_factors = {Int(d1), Int(m)};
    out.generators = {Q, P};
    FqPoint rowbase = FqPoint::at_infinity();
    for (long i = 0; i < d1; ++i) {
        FqPoint acc = rowbase;
        for (long j = 0; j < m; ++j) {
            out.dlog.emplace(point_key(acc), std::vector<Int>{Int(i), Int(j)});
            acc = E.add(acc, P);
        }
        rowbase = E.add(rowbase, Q);
    }
    if (out.dlog.size() != static_cast<size_t>(N))
        throw std::logic_error("group_structure: generators do not span");
    return out;
}

}  // namespace ellpic
