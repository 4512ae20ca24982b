#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ellpic {

/// Arithmetic context for F_q, q = p^k. Instances are interned and immutable:
/// FqField::get(p, k) returns the unique context for that (p, k), alive for
/// the whole process, so elements can hold plain pointers.
///
/// Elements are indices in [0, q). The base-p digits of the index are the
/// coordinates relative to the fixed modulus: digit i is the coefficient of
/// g^i where g is the image of x in F_p[x]/(m). The modulus m is the least
/// monic irreducible of degree k over F_p, "least" meaning smallest
/// non-leading coefficient vector read as a base-p integer (constant digit
/// least significant); this makes serialized elements reproducible.
class FqField {
public:
    static constexpr long max_field_size = 1L << 16;

    static const FqField* get(long p, int k);

    long p() const { return p_; }
    int k() const { return k_; }
    long q() const { return q_; }
    /// Modulus coefficients c_0..c_k (monic, c_k = 1). For k = 1 this is x.
    const std::vector<long>& modulus() const { return mod_; }

    long add(long a, long b) const;
    long sub(long a, long b) const;
    long neg(long a) const;
    long mul(long a, long b) const;
    long inv(long a) const;
    long pow(long a, long e) const;  // e >= 0
    long from_int(long n) const;     // n mod p, as a constant
    long frobenius(long a) const { return pow(a, p_); }

    /// One square root of a, or nullopt. In odd characteristic both roots are
    /// r and -r; in characteristic 2 the root is unique.
    std::optional<long> sqrt(long a) const;
    /// Characteristic 2 only: z with z^2 + z = a, or nullopt (the other
    /// solution is z + 1).
    std::optional<long> artin_schreier_root(long a) const;

    /// Full multiplication table (q*q entries, row-major), built when
    /// q <= 256; nullptr otherwise. Hot loops index it directly.
    const uint16_t* mul_table() const { return mul_tab_.empty() ? nullptr : mul_tab_.data(); }
    const uint16_t* add_table() const { return add_tab_.empty() ? nullptr : add_tab_.data(); }

    std::string element_str(long a) const;  // polynomial in g, e.g. "2g+1"

private:
    FqField(long p, int k);

    long p_;
    int k_;
    long q_;
    std::vector<long> mod_;
    std::vector<std::vector<long>> red_;  // x^(k+j) mod m, j = 0..k-2
    std::vector<int32_t> sqrt_tab_;       // odd char: one root per square, -1 otherwise
    std::vector<int32_t> frob_inv_tab_;   // char 2: inverse of z -> z^2
    std::vector<int32_t> as_tab_;         // char 2: preimage of z -> z^2 + z
    std::vector<uint16_t> mul_tab_, add_tab_;
};

/// Finite field element: interned context pointer plus index. Trivially
/// copyable; ordered by index (the canonical element order used everywhere a
/// deterministic choice is needed).
class Fq {
public:
    Fq() : F_(nullptr), ix_(0) {}
    Fq(const FqField* F, long ix) : F_(F), ix_(ix) {
        if (!F) throw std::invalid_argument("Fq: null field");
        if (ix < 0 || ix >= F->q()) throw std::invalid_argument("Fq: index out of range");
    }

    const FqField* field() const { return F_; }
    long index() const { return ix_; }

    bool is_zero() const { return ix_ == 0; }
    Fq zero() const { return Fq(F_, 0); }
    Fq one() const { return Fq(F_, F_->from_int(1)); }
    Fq from_int(long n) const { return Fq(F_, F_->from_int(n)); }

    Fq operator+(const Fq& o) const { return Fq(F_, same(o)->add(ix_, o.ix_)); }
    Fq operator-(const Fq& o) const { return Fq(F_, same(o)->sub(ix_, o.ix_)); }
    Fq operator*(const Fq& o) const { return Fq(F_, same(o)->mul(ix_, o.ix_)); }
    Fq operator-() const { return Fq(F_, F_->neg(ix_)); }
    Fq inv() const { return Fq(F_, F_->inv(ix_)); }
    Fq operator/(const Fq& o) const { return *this * o.inv(); }
    Fq pow(long e) const { return Fq(F_, F_->pow(ix_, e)); }
    Fq frobenius() const { return Fq(F_, F_->frobenius(ix_)); }

    bool operator==(const Fq& o) const { return F_ == o.F_ && ix_ == o.ix_; }
    bool operator!=(const Fq& o) const { return !(*this == o); }
    bool operator<(const Fq& o) const { return ix_ < o.ix_; }

    std::string str() const { return F_->element_str(ix_); }

private:
    const FqField* same(const Fq& o) const {
        if (F_ != o.F_) throw std::invalid_argument("Fq: mixed fields");
        return F_;
    }
    const FqField* F_;
    long ix_;
};

/// Field embedding F_{p^k} -> F_{p^(k*m)}, sending the source generator to the
/// least root of the source modulus in the target field. Interned per
/// (src, dst) pair; carries a full forward table and the inverse lookup.
class FqEmbedding {
public:
    static const FqEmbedding* get(const FqField* src, const FqField* dst);

    const FqField* src() const { return src_; }
    const FqField* dst() const { return dst_; }

    long map_index(long a) const { return fwd_[static_cast<size_t>(a)]; }
    Fq map(const Fq& a) const;
    /// Preimage in the source field, if the element lies in the embedded copy.
    std::optional<Fq> preimage(const Fq& b) const;

private:
    FqEmbedding(const FqField* src, const FqField* dst);
    const FqField* src_;
    const FqField* dst_;
    std::vector<long> fwd_;
    std::unordered_map<long, long> back_;
};

}  // namespace ellpic
