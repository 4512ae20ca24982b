#pragma once

#include <stdexcept>
#include <string>

namespace ellpic {

/// Projective point on a long Weierstrass curve: the distinguished point at
/// infinity or an affine pair.
template <class K>
struct Point {
    bool infinity = true;
    K x{}, y{};

    static Point at_infinity() { return Point{}; }
    static Point affine(const K& x, const K& y) { return Point{false, x, y}; }

    bool operator==(const Point& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

/// Long Weierstrass curve y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over
/// any coefficient field with exact arithmetic. Nonsingularity is checked at
/// construction; the long form keeps characteristic 2 and 3 representable.
template <class K>
class Curve {
public:
    Curve(const K& a1, const K& a2, const K& a3, const K& a4, const K& a6)
        : a1_(a1), a2_(a2), a3_(a3), a4_(a4), a6_(a6) {
        if (discriminant().is_zero()) throw std::domain_error("Curve: singular equation (zero discriminant)");
    }

    const K& a1() const { return a1_; }
    const K& a2() const { return a2_; }
    const K& a3() const { return a3_; }
    const K& a4() const { return a4_; }
    const K& a6() const { return a6_; }

    bool operator==(const Curve& o) const {
        return a1_ == o.a1_ && a2_ == o.a2_ && a3_ == o.a3_ && a4_ == o.a4_ && a6_ == o.a6_;
    }

    K b2() const { return a1_ * a1_ + cst(4) * a2_; }
    K b4() const { return cst(2) * a4_ + a1_ * a3_; }
    K b6() const { return a3_ * a3_ + cst(4) * a6_; }
    K b8() const {
        return a1_ * a1_ * a6_ + cst(4) * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
    }
    K c4() const { return b2() * b2() - cst(24) * b4(); }

    K discriminant() const {
        K B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
        return -(B2 * B2 * B8) - cst(8) * B4 * B4 * B4 - cst(27) * B6 * B6 + cst(9) * B2 * B4 * B6;
    }
    K j_invariant() const {
        K C4 = c4();
        return C4 * C4 * C4 * discriminant().inv();
    }

    /// Right-hand side x^3 + a2 x^2 + a4 x + a6.
    K rhs(const K& x) const { return ((x + a2_) * x + a4_) * x + a6_; }
    /// The linear form a1 x + a3 multiplying y on the left-hand side.
    K ylin(const K& x) const { return a1_ * x + a3_; }

    bool contains(const Point<K>& P) const {
        if (P.infinity) return true;
        return P.y * P.y + P.y * ylin(P.x) == rhs(P.x);
    }

    Point<K> neg(const Point<K>& P) const {
        if (P.infinity) return P;
        return Point<K>::affine(P.x, -P.y - ylin(P.x));
    }

    Point<K> add(const Point<K>& P, const Point<K>& Q) const {
        if (P.infinity) return Q;
        if (Q.infinity) return P;
        if (P.x == Q.x) {
            if (Q.y == -P.y - ylin(P.x)) return Point<K>::at_infinity();
            // two affine points with equal x are equal or negatives, so P == Q
            K den = cst(2) * P.y + ylin(P.x);
            K lam = (cst(3) * P.x * P.x + cst(2) * a2_ * P.x + a4_ - a1_ * P.y) * den.inv();
            K nu = (-(P.x * P.x * P.x) + a4_ * P.x + cst(2) * a6_ - a3_ * P.y) * den.inv();
            return chord(lam, nu, P.x, Q.x);
        }
        K den = (Q.x - P.x).inv();
        K lam = (Q.y - P.y) * den;
        K nu = (P.y * Q.x - Q.y * P.x) * den;
        return chord(lam, nu, P.x, Q.x);
    }

    Point<K> sub(const Point<K>& P, const Point<K>& Q) const { return add(P, neg(Q)); }

    Point<K> scalar_mul(long long m, const Point<K>& P) const {
        Point<K> base = m < 0 ? neg(P) : P;
        unsigned long long e = m < 0 ? static_cast<unsigned long long>(-m) : static_cast<unsigned long long>(m);
        Point<K> acc = Point<K>::at_infinity();
        while (e) {
            if (e & 1) acc = add(acc, base);
            base = add(base, base);
            e >>= 1;
        }
        return acc;
    }

private:
    K cst(long n) const { return a1_.from_int(n); }
    Point<K> chord(const K& lam, const K& nu, const K& x1, const K& x2) const {
        K x3 = lam * lam + a1_ * lam - a2_ - x1 - x2;
        K y3 = -(lam + a1_) * x3 - nu - a3_;
        return Point<K>::affine(x3, y3);
    }

    K a1_, a2_, a3_, a4_, a6_;
};

}  // namespace ellpic
