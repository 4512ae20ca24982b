#pragma once

#include <random>

#include "ellpic/curve.hpp"
#include "ellpic/fq.hpp"

namespace ellpic_test {

inline ellpic::FqCurve short_curve(long q, long A, long B) {
    const ellpic::FqField* F = nullptr;
    // q is a prime power <= 2^16; factor out the characteristic
    long p = 2;
    while (q % p) ++p;
    int k = 0;
    long t = q;
    while (t > 1) {
        t /= p;
        ++k;
    }
    F = ellpic::FqField::get(p, k);
    ellpic::Fq zero(F, 0);
    return ellpic::FqCurve(zero, zero, zero, zero.from_int(A), zero.from_int(B));
}

// y^2 = x^3 + x + 1 over F_5: the workhorse example (9 points, cyclic)
inline ellpic::FqCurve e5() { return short_curve(5, 1, 1); }

using Rng = std::mt19937;

}  // namespace ellpic_test
