#pragma once

#include <optional>
#include <vector>

#include "ellpic/curve_group.hpp"
#include "ellpic/fq_poly.hpp"
#include "ellpic/poly.hpp"

namespace ellpic {

/// Element a(x) + b(x)*y of the coordinate ring k[E] (functions regular away
/// from the point at infinity), in canonical form: y^2 already eliminated
/// through the curve equation.
template <class K>
struct RingElem {
    Polynomial<K> a, b;

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool operator==(const RingElem& o) const { return a == o.a && b == o.b; }
    bool operator!=(const RingElem& o) const { return !(*this == o); }

    static RingElem zero() { return {}; }
    static RingElem from_poly(Polynomial<K> p) { return {std::move(p), {}}; }
    static RingElem y_times(Polynomial<K> p) { return {{}, std::move(p)}; }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        if (!a.is_zero()) s = a.str();
        if (!b.is_zero()) {
            std::string t = b.is_constant() && b.lead() == b.lead().one() ? "y" : "(" + b.str() + ")*y";
            s = s.empty() ? t : s + "+" + t;
        }
        return s;
    }
};

/// a1 x + a3, the linear form multiplying y.
template <class K>
Polynomial<K> curve_ylin_poly(const Curve<K>& E) {
    return Polynomial<K>(std::vector<K>{E.a3(), E.a1()});
}

/// x^3 + a2 x^2 + a4 x + a6.
template <class K>
Polynomial<K> curve_rhs_poly(const Curve<K>& E) {
    return Polynomial<K>(std::vector<K>{E.a6(), E.a4(), E.a2(), E.a1().one()});
}

template <class K>
RingElem<K> ring_add(const RingElem<K>& f, const RingElem<K>& g) {
    return {f.a + g.a, f.b + g.b};
}

template <class K>
RingElem<K> ring_neg(const RingElem<K>& f) {
    return {-f.a, -f.b};
}

/// Product reduced by y^2 = rhs(x) - ylin(x)*y.
template <class K>
RingElem<K> ring_mul(const Curve<K>& E, const RingElem<K>& f, const RingElem<K>& g) {
    Polynomial<K> bb = f.b * g.b;
    Polynomial<K> a = f.a * g.a + bb * curve_rhs_poly(E);
    Polynomial<K> b = f.a * g.b + f.b * g.a - bb * curve_ylin_poly(E);
    return {std::move(a), std::move(b)};
}

/// Hyperelliptic involution y -> -y - a1 x - a3 on ring elements.
template <class K>
RingElem<K> ring_sigma(const Curve<K>& E, const RingElem<K>& f) {
    return {f.a - f.b * curve_ylin_poly(E), -f.b};
}

/// N(f) = f * sigma(f) = a^2 - a b (a1 x + a3) - b^2 (x^3 + a2 x^2 + a4 x + a6).
/// Pure polynomial in x; deg N(f) = max(2 deg a, 2 deg b + 3) with no
/// cancellation (the two candidates have opposite parity).
template <class K>
Polynomial<K> ring_norm(const Curve<K>& E, const RingElem<K>& f) {
    if (f.is_zero()) throw std::domain_error("ring_norm: zero element");
    return f.a * f.a - f.a * f.b * curve_ylin_poly(E) - f.b * f.b * curve_rhs_poly(E);
}

/// f + sigma(f) = 2a - b (a1 x + a3), again a polynomial in x.
template <class K>
Polynomial<K> ring_trace(const Curve<K>& E, const RingElem<K>& f) {
    return f.a + f.a - f.b * curve_ylin_poly(E);
}

/// Pole order at the point at infinity; equals deg N by the norm-degree law.
template <class K>
int pole_order(const RingElem<K>& f) {
    if (f.is_zero()) throw std::domain_error("pole_order: zero element");
    int da = f.a.is_zero() ? -1 : 2 * f.a.degree();
    int db = f.b.is_zero() ? -1 : 2 * f.b.degree() + 3;
    return std::max(da, db);
}

template <class K>
K ring_eval(const RingElem<K>& f, const K& x, const K& y) {
    return f.a.eval(x) + f.b.eval(x) * y;
}

using FqRingElem = RingElem<Fq>;

/// A closed point of the affine curve: a Frobenius orbit of geometric points,
/// i.e. a prime of k[E]. The representative is the least orbit member; the
/// orbit size is exactly the degree.
class ClosedPoint {
public:
    /// Build from any affine geometric point over F_{q^d}. The orbit is
    /// computed with the q-power Frobenius; if it is smaller than d, the point
    /// is re-expressed over its true field of definition.
    static ClosedPoint from_point(const FqCurve& E, const FqField* field_of_coords, const FqPoint& P);

    int degree() const { return static_cast<int>(orbit_.size()); }
    const FqField* point_field() const { return field_; }
    const FqPoint& representative() const { return orbit_.front(); }
    const std::vector<FqPoint>& orbit() const { return orbit_; }
    /// Minimal polynomial over F_q of the x-coordinate (degree d or d/2).
    const FqPoly& min_poly_x() const { return minpoly_x_; }
    /// t with y = t(x-coordinate) when the x-coordinate generates the residue
    /// field; absent exactly for the "inert" closed points.
    const std::optional<FqPoly>& y_expr() const { return y_expr_; }

    bool operator==(const ClosedPoint& o) const {
        return degree() == o.degree() && point_key(representative()) == point_key(o.representative());
    }
    bool operator<(const ClosedPoint& o) const {
        if (degree() != o.degree()) return degree() < o.degree();
        return point_key(representative()) < point_key(o.representative());
    }

    std::string str() const;

private:
    const FqField* field_ = nullptr;
    std::vector<FqPoint> orbit_;  // least member first, then Frobenius iterates
    FqPoly minpoly_x_;
    std::optional<FqPoly> y_expr_;
};

/// The curve base-changed to an extension field through the canonical
/// embedding.
FqCurve curve_over(const FqCurve& E, const FqField* ext);

/// All closed points of degree exactly d, sorted by representative. Cached.
const std::vector<ClosedPoint>& closed_points_of_degree(const FqCurve& E, int d);

/// All affine closed points of degree <= D (the point at infinity is not a
/// prime of k[E] and never appears), sorted by degree then representative.
std::vector<ClosedPoint> closed_points_up_to_degree(const FqCurve& E, int D);

/// The class of a closed point under the divisor-class isomorphism: the sum
/// of its orbit under the group law, computed over F_{q^d}; the result is
/// Frobenius-invariant and is returned as an F_q-point.
FqPoint closed_point_class(const FqCurve& E, const ClosedPoint& P);

/// Image of the closed point under the involution (x, y) -> (x, -y - a1x - a3).
ClosedPoint closed_point_sigma(const FqCurve& E, const ClosedPoint& P);

}  // namespace ellpic
