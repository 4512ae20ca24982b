#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ellpic {

/// Dense univariate polynomial over a coefficient field K (Fq or Rational, or
/// anything with the same value interface). Coefficients are stored low
/// degree first and kept normalized: the zero polynomial has an empty
/// coefficient list, everything else a nonzero leading coefficient.
template <class K>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(const K& v) {
        return v.is_zero() ? Polynomial() : Polynomial(std::vector<K>{v});
    }
    /// The monomial coeff * x^n.
    static Polynomial monomial(const K& coeff, int n) {
        if (coeff.is_zero()) return Polynomial();
        std::vector<K> c(static_cast<size_t>(n) + 1, coeff.zero());
        c.back() = coeff;
        return Polynomial(std::move(c));
    }
    static Polynomial x(const K& one_of_field) { return monomial(one_of_field.one(), 1); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    const K& operator[](size_t i) const { return c_[i]; }
    const K& lead() const {
        if (is_zero()) throw std::domain_error("Polynomial: leading coefficient of zero");
        return c_.back();
    }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !is_zero() && lead() == lead().one(); }

    K coeff(size_t i, const K& zero_hint) const { return i < c_.size() ? c_[i] : zero_hint.zero(); }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<K> r = c_.size() >= o.c_.size() ? c_ : o.c_;
        const std::vector<K>& s = c_.size() >= o.c_.size() ? o.c_ : c_;
        for (size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
        return Polynomial(std::move(r));
    }
    Polynomial operator-() const {
        std::vector<K> r = c_;
        for (auto& v : r) v = -v;
        return Polynomial(std::move(r));
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<K> r(c_.size() + o.c_.size() - 1, c_[0].zero());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return Polynomial(std::move(r));
    }
    Polynomial operator*(const K& s) const {
        std::vector<K> r = c_;
        for (auto& v : r) v = v * s;
        return Polynomial(std::move(r));
    }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw std::domain_error("Polynomial: division by zero");
        if (degree() < d.degree()) return {Polynomial(), *this};
        std::vector<K> rem = c_;
        std::vector<K> quo(static_cast<size_t>(degree() - d.degree()) + 1, d.lead().zero());
        K dlead_inv = d.lead().inv();
        for (int i = degree(); i >= d.degree(); --i) {
            K coef = rem[i] * dlead_inv;
            quo[i - d.degree()] = coef;
            if (coef.is_zero()) continue;
            for (int j = 0; j <= d.degree(); ++j)
                rem[i - d.degree() + j] = rem[i - d.degree() + j] - coef * d.c_[j];
        }
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }
    Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
    Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }
    bool divides(const Polynomial& other) const { return other.divmod(*this).second.is_zero(); }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return *this * lead().inv();
    }

    K eval(const K& x) const {
        K acc = x.zero();
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Polynomial pow(long e) const {
        if (e < 0) throw std::domain_error("Polynomial: negative exponent");
        if (is_zero()) return e == 0 ? Polynomial() : *this;  // 0^0 left undefined upstream
        Polynomial r = constant(c_[0].one());
        Polynomial base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            std::string coef = c_[i].str();
            bool needs_paren = coef.find('+') != std::string::npos || coef.find('-') != std::string::npos;
            std::string term;
            if (i == 0)
                term = needs_paren ? "(" + coef + ")" : coef;
            else {
                if (coef != "1") term = (needs_paren ? "(" + coef + ")" : coef) + "*";
                term += var;
                if (i > 1) term += "^" + std::to_string(i);
            }
            s = s.empty() ? term : s + "+" + term;
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

/// Monic gcd. gcd(0, 0) = 0.
template <class K>
Polynomial<K> poly_gcd(Polynomial<K> a, Polynomial<K> b) {
    while (!b.is_zero()) {
        Polynomial<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

class Rational;
/// Over Q the plain remainder sequence explodes coefficient sizes; this
/// overload routes through the primitive Euclidean algorithm on integer
/// polynomials instead.
Polynomial<Rational> poly_gcd(const Polynomial<Rational>& a, const Polynomial<Rational>& b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
template <class K>
struct PolyExtGcd {
    Polynomial<K> g, s, t;
};

template <class K>
PolyExtGcd<K> poly_ext_gcd(const Polynomial<K>& a, const Polynomial<K>& b) {
    if (a.is_zero() && b.is_zero()) return {a, a, a};
    const K one = (a.is_zero() ? b.lead() : a.lead()).one();
    Polynomial<K> r0 = a, r1 = b;
    Polynomial<K> s0 = Polynomial<K>::constant(one), s1;
    Polynomial<K> t0, t1 = Polynomial<K>::constant(one);
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        Polynomial<K> s2 = s0 - q * s1;
        Polynomial<K> t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    K lead_inv = r0.lead().inv();
    return {r0 * lead_inv, s0 * lead_inv, t0 * lead_inv};
}

}  // namespace ellpic
