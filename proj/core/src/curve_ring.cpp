#include "ellpic/curve_ring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace ellpic {

namespace {

FqPoint frobenius_point(const FqField* F, long q, const FqPoint& P) {
    if (P.infinity) return P;
    return FqPoint::affine(Fq(F, F->pow(P.x.index(), q)), Fq(F, F->pow(P.y.index(), q)));
}

std::vector<FqPoint> frobenius_orbit(const FqField* F, long q, const FqPoint& P) {
    std::vector<FqPoint> orbit{P};
    FqPoint cur = frobenius_point(F, q, P);
    while (!(cur == P)) {
        orbit.push_back(cur);
        cur = frobenius_point(F, q, cur);
    }
    return orbit;
}

}  // namespace

FqCurve curve_over(const FqCurve& E, const FqField* ext) {
    const FqField* base = E.a1().field();
    if (base == ext) return E;
    const FqEmbedding* emb = FqEmbedding::get(base, ext);
    return FqCurve(emb->map(E.a1()), emb->map(E.a2()), emb->map(E.a3()), emb->map(E.a4()),
                   emb->map(E.a6()));
}

ClosedPoint ClosedPoint::from_point(const FqCurve& E, const FqField* field_of_coords,
                                    const FqPoint& P) {
    if (P.infinity) throw std::invalid_argument("ClosedPoint: affine points only");
    const FqField* base = E.a1().field();
    const long q = base->q();
    if (field_of_coords->p() != base->p() || field_of_coords->k() % base->k() != 0)
        throw std::invalid_argument("ClosedPoint: coordinate field is not an extension of F_q");
    if (!curve_over(E, field_of_coords).contains(P))
        throw std::invalid_argument("ClosedPoint: point not on curve");

    std::vector<FqPoint> orbit = frobenius_orbit(field_of_coords, q, P);
    const int d = static_cast<int>(orbit.size());
    const FqField* F = field_of_coords;

    if (F->k() != base->k() * d) {
        // point defined over a smaller field; re-express it there
        const FqField* Fd = FqField::get(base->p(), base->k() * d);
        const FqEmbedding* emb = FqEmbedding::get(Fd, F);
        auto px = emb->preimage(orbit[0].x);
        auto py = emb->preimage(orbit[0].y);
        if (!px || !py) throw std::logic_error("ClosedPoint: orbit size inconsistent with field");
        return from_point(E, Fd, FqPoint::affine(*px, *py));
    }

    auto least = std::min_element(orbit.begin(), orbit.end(),
                                  [](const FqPoint& a, const FqPoint& b) { return point_key(a) < point_key(b); });
    std::rotate(orbit.begin(), least, orbit.end());

    ClosedPoint cp;
    cp.field_ = F;
    cp.orbit_ = std::move(orbit);

    // minimal polynomial of the x-coordinate from its own Frobenius orbit
    std::vector<Fq> xconj;
    {
        Fq cx = cp.orbit_[0].x;
        do {
            xconj.push_back(cx);
            cx = Fq(F, F->pow(cx.index(), q));
        } while (!(cx == cp.orbit_[0].x));
    }
    const Fq one_big = Fq(F, F->from_int(1));
    FqPoly m = FqPoly::constant(one_big);
    for (const auto& xi : xconj) m = m * (FqPoly::x(one_big) - FqPoly::constant(xi));
    const FqEmbedding* emb = FqEmbedding::get(base, F);
    auto m_down = fq_poly_preimage(m, emb);
    if (!m_down) throw std::logic_error("ClosedPoint: minimal polynomial not Frobenius-invariant");
    cp.minpoly_x_ = *m_down;

    if (static_cast<int>(xconj.size()) == d) {
        // residue field F_q(x): interpolate y through the orbit
        std::vector<std::pair<Fq, Fq>> pts;
        for (const auto& pt : cp.orbit_) pts.emplace_back(pt.x, pt.y);
        FqPoly t = fq_poly_interpolate(pts);
        auto t_down = fq_poly_preimage(t, emb);
        if (!t_down) throw std::logic_error("ClosedPoint: y-expression not Frobenius-invariant");
        cp.y_expr_ = *t_down;
    }
    return cp;
}

std::string ClosedPoint::str() const {
    if (degree() == 1) {
        const FqPoint& P = representative();
        return "(" + P.x.str() + "," + P.y.str() + ")";
    }
    std::string s = "[" + minpoly_x_.str();
    if (y_expr_)
        s += "; y=" + y_expr_->str();
    else
        s += "; inert";
    return s + "]";
}

const std::vector<ClosedPoint>& closed_points_of_degree(const FqCurve& E, int d) {
    using Key = std::tuple<const FqField*, long, long, long, long, long, int>;
    static std::mutex mu;
    static std::map<Key, std::vector<ClosedPoint>> cache;
    const FqField* base = E.a1().field();
    Key key{base, E.a1().index(), E.a2().index(), E.a3().index(), E.a4().index(), E.a6().index(), d};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    const FqField* F = FqField::get(base->p(), base->k() * d);
    FqCurve Ed = curve_over(E, F);
    const long q = base->q();

    std::vector<ClosedPoint> out;
    std::unordered_set<uint64_t> seen;
    for (const auto& P : enumerate_points(Ed)) {
        if (P.infinity) continue;
        if (seen.count(point_key(P))) continue;
        std::vector<FqPoint> orbit = frobenius_orbit(F, q, P);
        for (const auto& pt : orbit) seen.insert(point_key(pt));
        if (static_cast<int>(orbit.size()) != d) continue;
        out.push_back(ClosedPoint::from_point(E, F, P));
    }
    std::sort(out.begin(), out.end());

    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(key, std::move(out));
    (void)inserted;
    return it->second;
}

std::vector<ClosedPoint> closed_points_up_to_degree(const FqCurve& E, int D) {
    std::vector<ClosedPoint> out;
    for (int d = 1; d <= D; ++d) {
        const auto& level = closed_points_of_degree(E, d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

FqPoint closed_point_class(const FqCurve& E, const ClosedPoint& P) {
    const FqField* base = E.a1().field();
    const FqField* F = P.point_field();
    FqCurve Ed = curve_over(E, F);
    FqPoint acc = FqPoint::at_infinity();
    for (const auto& pt : P.orbit()) acc = Ed.add(acc, pt);
    if (acc.infinity) return acc;
    if (F == base) return acc;
    const FqEmbedding* emb = FqEmbedding::get(base, F);
    auto x = emb->preimage(acc.x);
    auto y = emb->preimage(acc.y);
    if (!x || !y) throw std::logic_error("closed_point_class: orbit sum not Frobenius-invariant");
    return FqPoint::affine(*x, *y);
}

ClosedPoint closed_point_sigma(const FqCurve& E, const ClosedPoint& P) {
    const FqField* F = P.point_field();
    FqCurve Ed = curve_over(E, F);
    return ClosedPoint::from_point(E, F, Ed.neg(P.representative()));
}

}  // namespace ellpic
