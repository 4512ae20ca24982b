#include "ellpic/numbers.hpp"
#include "ellpic/poly.hpp"

namespace ellpic {

namespace {

using ZPoly = std::vector<Int>;  // low degree first, no trailing zeros

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly clear_denominators(const Polynomial<Rational>& f) {
    Int scale = 1;
    for (const auto& c : f.coeffs()) scale = lcm_int(scale, c.den());
    ZPoly out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(c.num() * (scale / c.den()));
    return out;
}

Int content(const ZPoly& f) {
    Int g = 0;
    for (const auto& c : f) g = gcd_int(g, c);
    return g == 0 ? Int(1) : g;
}

void make_primitive(ZPoly& f) {
    Int c = content(f);
    if (c == 1) return;
    for (auto& v : f) v /= c;
}

// pseudo-remainder: lc(B)^(deg A - deg B + 1) * A reduced mod B, all in Z
ZPoly pseudo_rem(ZPoly A, const ZPoly& B) {
    const Int lead = B.back();
    int k = static_cast<int>(A.size()) - static_cast<int>(B.size()) + 1;
    if (k < 0) return A;
    while (static_cast<int>(A.size()) >= static_cast<int>(B.size()) && !A.empty()) {
        Int c = A.back();
        size_t shift = A.size() - B.size();
        for (size_t i = 0; i < A.size(); ++i) A[i] *= lead;
        for (size_t i = 0; i < B.size(); ++i) A[shift + i] -= c * B[i];
        ztrim(A);
        --k;
    }
    // keep the classical normalization so signs stay deterministic
    for (int i = 0; i < k; ++i)
        for (auto& v : A) v *= lead;
    return A;
}

}  // namespace

Polynomial<Rational> poly_gcd(const Polynomial<Rational>& a, const Polynomial<Rational>& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZPoly A = clear_denominators(a);
    ZPoly B = clear_denominators(b);
    make_primitive(A);
    make_primitive(B);
    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty()) {
        ZPoly R = pseudo_rem(A, B);
        make_primitive(R);
        A = std::move(B);
        B = std::move(R);
    }
    std::vector<Rational> c;
    c.reserve(A.size());
    Rational lead_inv = Rational(A.back()).inv();
    for (const auto& v : A) c.push_back(Rational(v) * lead_inv);
    return Polynomial<Rational>(std::move(c));
}

}  // namespace ellpic
