#pragma once

#include <memory>
#include <string>

#include "ellpic/curve.hpp"
#include "ellpic/curve_ring.hpp"

namespace ellpic {

/// Element of the function field k(E), held as (a(x) + b(x) y) / den(x) in
/// canonical form: den monic, gcd(a, b, den) = 1, y^2 eliminated. Any element
/// of k(E) can be written this way by rationalizing the denominator with its
/// conjugate. Implements the full field interface, so the generic curve
/// group law runs directly on these values (that is how E(K(E)) is computed).
template <class K>
class FnElem {
public:
    using CurvePtr = std::shared_ptr<const Curve<K>>;

    FnElem() = default;  // zero with no curve attached; usable only as a blank
    FnElem(CurvePtr E, Polynomial<K> a, Polynomial<K> b, Polynomial<K> den)
        : E_(std::move(E)), a_(std::move(a)), b_(std::move(b)), den_(std::move(den)) {
        if (!E_) throw std::invalid_argument("FnElem: null curve");
        if (den_.is_zero()) throw std::domain_error("FnElem: zero denominator");
        reduce();
    }

    static FnElem from_ring(CurvePtr E, RingElem<K> f) {
        Polynomial<K> one = Polynomial<K>::constant(E->a1().one());
        return FnElem(std::move(E), std::move(f.a), std::move(f.b), std::move(one));
    }
    static FnElem constant(CurvePtr E, const K& c) {
        return from_ring(std::move(E), RingElem<K>::from_poly(Polynomial<K>::constant(c)));
    }
    /// The coordinate functions: the generic point of E has coordinates (x, y).
    static FnElem x_function(CurvePtr E) {
        K one = E_one(E);
        return from_ring(std::move(E), RingElem<K>::from_poly(Polynomial<K>::x(one)));
    }
    static FnElem y_function(CurvePtr E) {
        K one = E_one(E);
        return from_ring(std::move(E), RingElem<K>::y_times(Polynomial<K>::constant(one)));
    }

    const CurvePtr& curve() const { return E_; }
    const Polynomial<K>& num_a() const { return a_; }
    const Polynomial<K>& num_b() const { return b_; }
    const Polynomial<K>& den() const { return den_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    /// Lies in the rational subfield k(x), i.e. is fixed by the involution.
    bool in_rational_subfield() const { return b_.is_zero(); }
    bool is_constant() const { return b_.is_zero() && a_.is_constant() && den_.is_constant(); }
    K constant_value() const {
        if (!is_constant()) throw std::domain_error("FnElem: not a constant");
        K one = E_->a1().one();
        if (a_.is_zero()) return one.zero();
        return a_[0] * den_[0].inv();
    }

    FnElem zero() const { return FnElem(E_, {}, {}, one_poly()); }
    FnElem one() const { return constant(E_, E_->a1().one()); }
    FnElem from_int(long n) const { return constant(E_, E_->a1().from_int(n)); }

    FnElem operator+(const FnElem& o) const {
        same(o);
        return FnElem(E_, a_ * o.den_ + o.a_ * den_, b_ * o.den_ + o.b_ * den_, den_ * o.den_);
    }
    FnElem operator-() const { return FnElem(E_, -a_, -b_, den_); }
    FnElem operator-(const FnElem& o) const { return *this + (-o); }
    FnElem operator*(const FnElem& o) const {
        same(o);
        RingElem<K> p = ring_mul(*E_, RingElem<K>{a_, b_}, RingElem<K>{o.a_, o.b_});
        return FnElem(E_, std::move(p.a), std::move(p.b), den_ * o.den_);
    }
    FnElem inv() const {
        if (is_zero()) throw std::domain_error("FnElem: inverse of zero");
        // 1 / ((a+by)/d) = d * sigma(a+by) / N(a+by)
        RingElem<K> conj = ring_sigma(*E_, RingElem<K>{a_, b_});
        Polynomial<K> n = ring_norm(*E_, RingElem<K>{a_, b_});
        return FnElem(E_, den_ * conj.a, den_ * conj.b, n);
    }
    FnElem operator/(const FnElem& o) const { return *this * o.inv(); }

    /// Image under the hyperelliptic involution y -> -y - a1 x - a3.
    FnElem sigma() const {
        RingElem<K> s = ring_sigma(*E_, RingElem<K>{a_, b_});
        return FnElem(E_, std::move(s.a), std::move(s.b), den_);
    }

    bool operator==(const FnElem& o) const {
        if (!E_ || !o.E_) return !E_ && !o.E_ && is_zero() == o.is_zero();
        return a_ == o.a_ && b_ == o.b_ && den_ == o.den_;
    }
    bool operator!=(const FnElem& o) const { return !(*this == o); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string num = RingElem<K>{a_, b_}.str();
        if (den_.is_constant()) return num;
        return "(" + num + ")/(" + den_.str() + ")";
    }

private:
    static K E_one(const CurvePtr& E) { return E->a1().one(); }
    Polynomial<K> one_poly() const { return Polynomial<K>::constant(E_->a1().one()); }
    void same(const FnElem& o) const {
        if (!o.E_ || !E_ || !(*E_ == *o.E_)) throw std::invalid_argument("FnElem: mixed curves");
    }
    void reduce() {
        if (a_.is_zero() && b_.is_zero()) {
            den_ = one_poly();
            return;
        }
        Polynomial<K> g = poly_gcd(poly_gcd(a_, b_), den_);
        if (g.degree() > 0) {
            a_ = a_ / g;
            b_ = b_ / g;
            den_ = den_ / g;
        }
        K lead_inv = den_.lead().inv();
        a_ = a_ * lead_inv;
        b_ = b_ * lead_inv;
        den_ = den_ * lead_inv;
    }

    CurvePtr E_;
    Polynomial<K> a_, b_, den_;
};

}  // namespace ellpic
