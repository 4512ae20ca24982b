#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ellpic {

// Exact arbitrary-precision integer. Elimination intermediates in the Smith
// normal form grow past any fixed width, so this is a correctness requirement,
// not a tuning choice.
using Int = boost::multiprecision::cpp_int;

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

/// Exact rational number with the coefficient-field interface shared by Fq.
class Rational {
public:
    using rep = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(rep(num) / rep(den)) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
    }
    explicit Rational(rep v) : v_(std::move(v)) {}

    bool is_zero() const { return v_ == 0; }
    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational from_int(long n) const { return Rational(n); }

    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational operator-() const { return Rational(-v_); }
    Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(1 / v_);
    }
    Rational operator/(const Rational& o) const { return *this * o.inv(); }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    Int num() const { return Int(boost::multiprecision::numerator(v_)); }
    Int den() const { return Int(boost::multiprecision::denominator(v_)); }

    std::string str() const {
        std::string s = num().str();
        if (den() != 1) s += "/" + den().str();
        return s;
    }

private:
    rep v_{};
};

}  // namespace ellpic
