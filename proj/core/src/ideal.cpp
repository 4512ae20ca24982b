#include "ellpic/ideal.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <unordered_map>

namespace ellpic {

namespace {

FqPoly one_poly(const FqField* F) { return FqPoly::constant(Fq(F, F->from_int(1))); }

int ord_at(const FqPoly& f, const FqPoly& m) {
    if (f.is_zero()) return INT_MAX;
    int ord = 0;
    FqPoly cur = f;
    for (;;) {
        auto [q, r] = cur.divmod(m);
        if (!r.is_zero()) return ord;
        cur = q;
        ++ord;
    }
}

}  // namespace

FractionalIdeal FractionalIdeal::unit_ideal(const FqCurve& E) {
    const FqField* F = E.a1().field();
    return FractionalIdeal(E, HermiteCols{one_poly(F), FqPoly(), one_poly(F)}, one_poly(F));
}

FractionalIdeal FractionalIdeal::from_module_basis(const FqCurve& E, HermiteCols h, FqPoly den) {
    if (h.u.is_zero() || h.w.is_zero() || den.is_zero())
        throw std::invalid_argument("FractionalIdeal: degenerate basis");
    den = den.monic();
    // cancel the polynomial content of the module against the denominator
    FqPoly content = poly_gcd(poly_gcd(h.u, h.v), h.w);
    FqPoly g = poly_gcd(content, den);
    if (g.degree() > 0) {
        h.u = h.u / g;
        h.v = h.v / g;
        h.w = h.w / g;
        den = den / g;
    }
    FractionalIdeal I(E, std::move(h), std::move(den));
    // the module must be an ideal: closed under multiplication by y
    FqRingElem g1{I.h_.u, FqPoly()};
    FqRingElem g2{I.h_.v, I.h_.w};
    const FqRingElem y = FqRingElem::y_times(one_poly(E.a1().field()));
    if (!I.contains(ring_mul(E, g1, y)) || !I.contains(ring_mul(E, g2, y)))
        throw std::invalid_argument("FractionalIdeal: module not closed under y");
    return I;
}

bool FractionalIdeal::contains(const FqRingElem& f) const {
    if (f.is_zero()) return true;
    auto [qb, rb] = f.b.divmod(h_.w);
    if (!rb.is_zero()) return false;
    FqPoly rest = f.a - qb * h_.v;
    return (rest % h_.u).is_zero();
}

FractionalIdeal FractionalIdeal::conjugate() const {
    FqPoly L = curve_ylin_poly(E_);
    HermiteCols h = hermite_from_columns({{h_.u, FqPoly()}, {h_.v - h_.w * L, -h_.w}});
    return from_module_basis(E_, std::move(h), den_);
}

FractionalIdeal FractionalIdeal::from_generators(const FqCurve& E,
                                                 const std::vector<FqRingElem>& gens) {
    const FqRingElem y = FqRingElem::y_times(one_poly(E.a1().field()));
    std::vector<std::pair<FqPoly, FqPoly>> cols;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        cols.emplace_back(g.a, g.b);
        FqRingElem gy = ring_mul(E, g, y);
        cols.emplace_back(gy.a, gy.b);
    }
    if (cols.empty()) throw std::invalid_argument("FractionalIdeal: zero ideal");
    return from_module_basis(E, hermite_from_columns(cols), one_poly(E.a1().field()));
}

FractionalIdeal FractionalIdeal::principal(const FqCurve& E, const FqRingElem& f) {
    return from_generators(E, {f});
}

FractionalIdeal ideal_mul(const FractionalIdeal& I, const FractionalIdeal& J) {
    if (!(I.E_ == J.E_)) throw std::invalid_argument("ideal_mul: different rings");
    const FqCurve& E = I.E_;
    FqRingElem i1{I.h_.u, FqPoly()}, i2{I.h_.v, I.h_.w};
    FqRingElem j1{J.h_.u, FqPoly()}, j2{J.h_.v, J.h_.w};
    std::vector<std::pair<FqPoly, FqPoly>> cols;
    for (const auto& a : {i1, i2})
        for (const auto& b : {j1, j2}) {
            FqRingElem p = ring_mul(E, a, b);
            cols.emplace_back(p.a, p.b);
        }
    return FractionalIdeal::from_module_basis(E, hermite_from_columns(cols), I.den_ * J.den_);
}

FractionalIdeal ideal_from_closed_point(const FqCurve& E, const ClosedPoint& P) {
    const FqField* F = E.a1().field();
    const FqPoly& m = P.min_poly_x();
    if (P.y_expr()) {
        // (m(x), y - t(x)): columns (m, 0) and (-t, 1)
        HermiteCols h = hermite_from_columns({{m, FqPoly()}, {-*P.y_expr(), one_poly(F)}});
        return FractionalIdeal::from_module_basis(E, std::move(h), one_poly(F));
    }
    // inert: the fiber polynomial itself generates the prime
    return FractionalIdeal::principal(E, FqRingElem::from_poly(m));
}

std::vector<std::pair<ClosedPoint, int>> primes_above(const FqCurve& E, const FqPoly& m) {
    if (!m.is_monic() || !fq_poly_irreducible(m))
        throw std::invalid_argument("primes_above: monic irreducible required");
    const FqField* F = E.a1().field();
    const int e = m.degree();
    const FqField* Fe = FqField::get(F->p(), F->k() * e);
    Fq xi = fq_poly_roots(m, Fe).front();
    FqCurve Ee = curve_over(E, Fe);
    std::vector<Fq> ys = y_solutions(Ee, xi);
    std::vector<std::pair<ClosedPoint, int>> out;
    if (ys.size() == 2) {
        out.emplace_back(ClosedPoint::from_point(E, Fe, FqPoint::affine(xi, ys[0])), 1);
        out.emplace_back(ClosedPoint::from_point(E, Fe, FqPoint::affine(xi, ys[1])), 1);
    } else if (ys.size() == 1) {
        out.emplace_back(ClosedPoint::from_point(E, Fe, FqPoint::affine(xi, ys[0])), 2);
    } else {
        const FqField* F2e = FqField::get(F->p(), F->k() * 2 * e);
        const FqEmbedding* up = FqEmbedding::get(Fe, F2e);
        Fq xi2 = up->map(xi);
        std::vector<Fq> ys2 = y_solutions(curve_over(E, F2e), xi2);
        if (ys2.size() != 2) throw std::logic_error("primes_above: inert fiber without quadratic split");
        out.emplace_back(ClosedPoint::from_point(E, F2e, FqPoint::affine(xi2, ys2[0])), 1);
    }
    return out;
}

std::optional<FqRingElem> is_principal(const FractionalIdeal& I,
                                       const PrincipalitySearchOptions& opts) {
    if (!I.is_integral()) throw std::invalid_argument("is_principal: integral ideal required");
    const FqCurve& E = I.curve();
    const FqField* F = E.a1().field();
    const long q = F->q();
    FqPoly n = I.norm_numerator();
    const int D = n.degree();
    const Fq one(F, F->from_int(1));
    if (D == 0) return FqRingElem::from_poly(one_poly(F));

    const int db_max = D >= 3 ? (D - 3) / 2 : -1;

    if (F->p() != 2) {
        // With f = a + b y and N(f) = c n: (2a - b L)^2 = b^2 (L^2 + 4C) + 4 c n.
        // Enumerate b and the unit c, take a polynomial square root, recover a.
        // Complete because the norm-degree law pins deg b to at most (D-3)/2.
        double space = static_cast<double>(q - 1);
        for (int i = 0; i <= db_max; ++i) space *= q;
        if (space > static_cast<double>(opts.max_candidates))
            throw budget_error("is_principal: search space exceeds budget");

        FqPoly L = curve_ylin_poly(E), C = curve_rhs_poly(E);
        FqPoly S = L * L + C * one.from_int(4);
        Fq half = one.from_int(2).inv();

        std::vector<long> bcode(db_max >= 0 ? db_max + 1 : 0, 0);
        for (;;) {
            std::vector<Fq> bcv;
            bcv.reserve(bcode.size());
            for (long ci : bcode) bcv.emplace_back(F, ci);
            FqPoly b(std::move(bcv));
            FqPoly T = b * b * S;
            for (long cu = 1; cu < q; ++cu) {
                FqPoly delta2 = T + n * (Fq(F, cu) * one.from_int(4));
                auto delta = fq_poly_sqrt(delta2);
                if (!delta) continue;
                for (int sign = 0; sign < 2; ++sign) {
                    FqPoly a = (b * L + (sign ? -*delta : *delta)) * half;
                    FqRingElem f{a, b};
                    if (f.is_zero()) continue;
                    if (pole_order(f) != D) continue;
                    if (FractionalIdeal::principal(E, f) == I) return f;
                }
            }
            if (bcode.empty()) break;
            size_t i = 0;
            while (i < bcode.size() && ++bcode[i] == q) {
                bcode[i] = 0;
                ++i;
            }
            if (i == bcode.size()) break;
        }
        return std::nullopt;
    }

    // characteristic 2: plain enumeration over the pinned degree patterns
    const int da_max = D / 2;
    double space = 1;
    for (int i = 0; i <= da_max; ++i) space *= q;
    for (int i = 0; i <= db_max; ++i) space *= q;
    if (space > static_cast<double>(opts.max_candidates))
        throw budget_error("is_principal: search space exceeds budget");
    std::vector<long> ac(da_max + 1, 0);
    for (;;) {
        std::vector<Fq> av;
        av.reserve(ac.size());
        for (long ci : ac) av.emplace_back(F, ci);
        FqPoly a(std::move(av));
        std::vector<long> bcode(db_max >= 0 ? db_max + 1 : 0, 0);
        for (;;) {
            std::vector<Fq> bv;
            bv.reserve(bcode.size());
            for (long ci : bcode) bv.emplace_back(F, ci);
            FqPoly b(std::move(bv));
            FqRingElem f{a, b};
            if (!f.is_zero() && pole_order(f) == D && ring_norm(E, f).monic() == n &&
                FractionalIdeal::principal(E, f) == I)
                return f;
            if (bcode.empty()) break;
            size_t i = 0;
            while (i < bcode.size() && ++bcode[i] == q) {
                bcode[i] = 0;
                ++i;
            }
            if (i == bcode.size()) break;
        }
        size_t i = 0;
        while (i < ac.size() && ++ac[i] == q) {
            ac[i] = 0;
            ++i;
        }
        if (i == ac.size()) break;
    }
    return std::nullopt;
}

std::vector<std::pair<ClosedPoint, int>> factor_ideal(const FractionalIdeal& I,
                                                      int max_point_degree) {
    if (!I.is_integral()) throw std::invalid_argument("factor_ideal: integral ideal required");
    const FqCurve& E = I.curve();
    FqPoly n = I.norm_numerator();
    if (n.degree() == 0) return {};
    auto fac = fq_poly_factor_bounded(n, max_point_degree);
    if (!fac) throw budget_error("factor_ideal: norm factor of degree beyond the bound");

    std::vector<std::pair<ClosedPoint, int>> out;
    FractionalIdeal work = I;
    for (const auto& factor : fac->factors) {
        const FqPoly& m = factor.first;
        for (auto& pr : primes_above(E, m)) {
            const ClosedPoint& cp = pr.first;
            if (cp.degree() > max_point_degree)
                throw budget_error("factor_ideal: prime of degree beyond the bound");
            FractionalIdeal P = ideal_from_closed_point(E, cp);
            FqPoly NP = P.norm_numerator();
            int count = 0;
            for (;;) {
                FqRingElem g1{work.basis().u, FqPoly()};
                FqRingElem g2{work.basis().v, work.basis().w};
                if (!P.contains(g1) || !P.contains(g2)) break;
                FractionalIdeal quot = ideal_mul(work, P.conjugate());
                // dividing by P: multiply by the conjugate, cancel N(P)
                work = FractionalIdeal::from_module_basis(E, quot.basis(),
                                                          quot.denominator() * NP);
                if (!work.is_integral())
                    throw std::logic_error("factor_ideal: division left a denominator");
                ++count;
            }
            if (count > 0) out.emplace_back(cp, count);
        }
    }
    if (!(work == FractionalIdeal::unit_ideal(E)))
        throw std::logic_error("factor_ideal: residual non-unit ideal");
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// ---------------------------------------------------------------------------
// relation harvest
// ---------------------------------------------------------------------------

namespace {

// hot loops run on index tables when the field is small enough to have them
struct RawOps {
    const FqField* F;
    long q;
    const uint16_t* mt;
    const uint16_t* at;
    std::vector<uint16_t> negt;

    explicit RawOps(const FqField* f) : F(f), q(f->q()), mt(f->mul_table()), at(f->add_table()) {
        negt.resize(q);
        for (long a = 0; a < q; ++a) negt[a] = static_cast<uint16_t>(F->neg(a));
    }
    long mul(long a, long b) const { return mt ? mt[a * q + b] : F->mul(a, b); }
    long add(long a, long b) const { return at ? at[a * q + b] : F->add(a, b); }
    long sub(long a, long b) const { return add(a, negt[b]); }
};

// index-space dense polynomials (coefficients are field element indices)
using RawPoly = std::vector<long>;

void raw_trim(RawPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

RawPoly raw_mul(const RawOps& R, const RawPoly& a, const RawPoly& b) {
    if (a.empty() || b.empty()) return {};
    RawPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = R.add(c[i + j], R.mul(a[i], b[j]));
    }
    raw_trim(c);
    return c;
}

RawPoly raw_sub(const RawOps& R, const RawPoly& a, const RawPoly& b) {
    RawPoly c = a;
    if (c.size() < b.size()) c.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) c[i] = R.sub(c[i], b[i]);
    raw_trim(c);
    return c;
}

long raw_eval(const RawOps& R, const RawPoly& f, long x) {
    long acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = R.add(R.mul(acc, x), f[i]);
    return acc;
}

FqPoly raw_to_poly(const FqField* F, const RawPoly& f) {
    std::vector<Fq> c;
    c.reserve(f.size());
    for (long ci : f) c.emplace_back(F, ci);
    return FqPoly(std::move(c));
}

struct Fiber {
    FqPoly m;                          // the monic irreducible under the fiber
    int e = 1;                         // deg m
    int kind = 0;                      // 0 split, 1 ramified, 2 inert
    long col1 = -1, col2 = -1;         // generator columns
    const FqEmbedding* emb = nullptr;  // base -> F_{q^e}; null when e == 1
    Fq xi, y1, y2;                     // root of m and the y-values above it
};

struct HarvestEngine {
    const FqCurve E;
    const FqField* F;
    const int D;
    RawOps R;
    std::vector<ClosedPoint> gens;

    std::vector<Fiber> linear_fibers;                 // indexed by the root r
    std::unordered_map<long, size_t> quad_fibers;     // key c1*q + c0
    std::map<std::vector<long>, size_t> high_fibers;  // deg >= 3, by coefficients
    std::vector<Fiber> fibers;

    const FqField* F2 = nullptr;
    const FqEmbedding* emb2 = nullptr;
    std::vector<long> Lval1, Cval1, Lval2, Cval2;  // evals of a1x+a3 and rhs

    IntMatrix acc;
    long long relations = 0;

    HarvestEngine(const FqCurve& e, int d)
        : E(e), F(e.a1().field()), D(d), R(F), gens(closed_points_up_to_degree(e, d)),
          acc(0, gens.size()) {
        build_fibers();
        Lval1.resize(R.q);
        Cval1.resize(R.q);
        for (long r = 0; r < R.q; ++r) {
            Fq x(F, r);
            Lval1[r] = E.ylin(x).index();
            Cval1[r] = E.rhs(x).index();
        }
        if (D == 2) {
            F2 = FqField::get(F->p(), F->k() * 2);
            emb2 = FqEmbedding::get(F, F2);
            FqCurve E2 = curve_over(E, F2);
            Lval2.resize(F2->q());
            Cval2.resize(F2->q());
            for (long z = 0; z < F2->q(); ++z) {
                Fq x(F2, z);
                Lval2[z] = E2.ylin(x).index();
                Cval2[z] = E2.rhs(x).index();
            }
        }
    }

    long find_column(const ClosedPoint& cp) const {
        auto it = std::lower_bound(gens.begin(), gens.end(), cp);
        if (it == gens.end() || !(*it == cp)) return -1;
        return static_cast<long>(it - gens.begin());
    }

    Fiber make_fiber(const FqPoly& m) {
        Fiber fb;
        fb.m = m;
        fb.e = m.degree();
        const FqField* Fe = FqField::get(F->p(), F->k() * fb.e);
        fb.emb = fb.e == 1 ? nullptr : FqEmbedding::get(F, Fe);
        fb.xi = fq_poly_roots(m, Fe).front();
        FqCurve Ee = curve_over(E, Fe);
        std::vector<Fq> ys = y_solutions(Ee, fb.xi);
        if (ys.size() == 2) {
            fb.kind = 0;
            fb.y1 = ys[0];
            fb.y2 = ys[1];
            fb.col1 = find_column(ClosedPoint::from_point(E, Fe, FqPoint::affine(fb.xi, ys[0])));
            fb.col2 = find_column(ClosedPoint::from_point(E, Fe, FqPoint::affine(fb.xi, ys[1])));
            if (fb.col1 < 0 || fb.col2 < 0) throw std::logic_error("harvest: split fiber misses columns");
        } else if (ys.size() == 1) {
            fb.kind = 1;
            fb.y1 = ys[0];
            fb.col1 = find_column(ClosedPoint::from_point(E, Fe, FqPoint::affine(fb.xi, ys[0])));
            if (fb.col1 < 0) throw std::logic_error("harvest: ramified fiber misses its column");
        } else {
            fb.kind = 2;
            if (2 * fb.e <= D) {
                const FqField* F2e = FqField::get(F->p(), F->k() * 2 * fb.e);
                const FqEmbedding* up = FqEmbedding::get(Fe, F2e);
                Fq xi2 = up->map(fb.xi);
                std::vector<Fq> ys2 = y_solutions(curve_over(E, F2e), xi2);
                fb.col1 = find_column(ClosedPoint::from_point(E, F2e, FqPoint::affine(xi2, ys2[0])));
            }
        }
        return fb;
    }

    void build_fibers() {
        linear_fibers.reserve(R.q);
        const Fq one(F, F->from_int(1));
        for (long r = 0; r < R.q; ++r) {
            FqPoly m = FqPoly::x(one) - FqPoly::constant(Fq(F, r));
            linear_fibers.push_back(make_fiber(m));
        }
        for (int e = 2; e <= D; ++e) {
            for (const auto& m : monic_irreducibles(F, e)) {
                fibers.push_back(make_fiber(m));
                if (e == 2) {
                    long key = m[1].index() * R.q + m[0].index();
                    quad_fibers.emplace(key, fibers.size() - 1);
                } else {
                    std::vector<long> key;
                    for (const auto& c : m.coeffs()) key.push_back(c.index());
                    high_fibers.emplace(std::move(key), fibers.size() - 1);
                }
            }
        }
    }

    Fq eval_up(const FqPoly& f, const Fiber& fb) const {
        if (f.is_zero()) return fb.xi.zero();
        if (!fb.emb) return f.eval(fb.xi);
        return fq_poly_map(f, fb.emb).eval(fb.xi);
    }

    // valuations of f = a + b y at the primes of one fiber; false when a prime
    // falls outside the generator set (the candidate is then discarded)
    bool apply_fiber(const Fiber& fb, int mult, const FqPoly& a, const FqPoly& b,
                     std::vector<Int>& row) const {
        if (fb.kind == 2) {
            if (fb.col1 < 0) return false;
            if (mult % 2) throw std::logic_error("harvest: odd multiplicity at inert fiber");
            row[fb.col1] += mult / 2;
            return true;
        }
        if (fb.kind == 1) {
            row[fb.col1] += mult;
            return true;
        }
        int j = std::min(ord_at(a, fb.m), ord_at(b, fb.m));
        FqPoly ga = a, gb = b;
        for (int i = 0; i < j; ++i) {
            ga = ga / fb.m;
            gb = gb / fb.m;
        }
        Fq g1 = eval_up(ga, fb) + eval_up(gb, fb) * fb.y1;
        int v1 = j + (g1.is_zero() ? mult - 2 * j : 0);
        int v2 = mult - v1;
        if (v1 < 0 || v2 < 0) throw std::logic_error("harvest: negative valuation");
        row[fb.col1] += v1;
        row[fb.col2] += v2;
        return true;
    }

    void push_relation(std::vector<Int> row) {
        acc.append_row(row);
        ++relations;
        if (acc.rows() >= gens.size() + 64) acc = row_hermite_basis(acc);
    }

    void finish_candidate(const RawPoly& araw, const RawPoly& braw,
                          const std::vector<std::pair<long, int>>& lin_mults,
                          const std::vector<std::tuple<long, long, int>>& quad_mults,
                          const std::vector<std::pair<FqPoly, int>>& high_mults) {
        FqPoly a = raw_to_poly(F, araw), b = raw_to_poly(F, braw);
        std::vector<Int> row(gens.size(), 0);
        for (auto [r, mult] : lin_mults)
            if (!apply_fiber(linear_fibers[r], mult, a, b, row)) return;
        for (auto [c1, c0, mult] : quad_mults) {
            auto it = quad_fibers.find(c1 * R.q + c0);
            if (it == quad_fibers.end()) throw std::logic_error("harvest: unknown quadratic fiber");
            if (!apply_fiber(fibers[it->second], mult, a, b, row)) return;
        }
        for (const auto& hm : high_mults) {
            std::vector<long> key;
            for (const auto& c : hm.first.coeffs()) key.push_back(c.index());
            auto it = high_fibers.find(key);
            if (it == high_fibers.end()) throw std::logic_error("harvest: unknown fiber");
            if (!apply_fiber(fibers[it->second], hm.second, a, b, row)) return;
        }
        push_relation(std::move(row));
    }
};

}  // namespace

long RelationHarvest::column_of(const ClosedPoint& P) const {
    auto it = std::lower_bound(generators.begin(), generators.end(), P);
    if (it == generators.end() || !(*it == P)) return -1;
    return static_cast<long>(it - generators.begin());
}

RelationHarvest harvest_relations(const FqCurve& E, int degree_bound, int norm_budget,
                                  const HarvestOptions& opts) {
    if (degree_bound < 1) throw std::invalid_argument("harvest_relations: degree bound >= 1");
    if (norm_budget < 2) throw std::invalid_argument("harvest_relations: norm budget >= 2");
    const int D = degree_bound, B = norm_budget;
    HarvestEngine eng(E, D);
    const RawOps& R = eng.R;
    const long q = R.q;
    const FqField* F = eng.F;

    RelationHarvest out{E, D, B, eng.gens, IntMatrix(0, eng.gens.size()), {}, 0, 0};
    std::vector<int> snapshot_levels;
    if (B >= 6) snapshot_levels = {B - 4, B - 2, B};

    const RawPoly Lraw = {E.a3().index(), E.a1().index()};
    const RawPoly Craw = {E.a6().index(), E.a4().index(), E.a2().index(), F->from_int(1)};
    const long q2 = eng.F2 ? eng.F2->q() : 0;
    RawOps R2raw(eng.F2 ? eng.F2 : F);

    struct BEntry {
        RawPoly coeffs;
        RawPoly bl, b2c;                    // b*L and b^2*C in coefficient form
        std::vector<uint16_t> ble1, b2ce1;  // evaluations over F_q
        std::vector<uint16_t> ble2, b2ce2;  // evaluations over F_{q^2} (D == 2)
    };

    auto make_bentry = [&](const RawPoly& bc) {
        BEntry be;
        be.coeffs = bc;
        be.bl = raw_mul(R, bc, Lraw);
        be.b2c = raw_mul(R, raw_mul(R, bc, bc), Craw);
        be.ble1.resize(q);
        be.b2ce1.resize(q);
        for (long r = 0; r < q; ++r) {
            long bv = raw_eval(R, bc, r);
            be.ble1[r] = static_cast<uint16_t>(R.mul(bv, eng.Lval1[r]));
            be.b2ce1[r] = static_cast<uint16_t>(R.mul(R.mul(bv, bv), eng.Cval1[r]));
        }
        if (D == 2) {
            be.ble2.resize(q2);
            be.b2ce2.resize(q2);
            RawPoly bup(bc.size());
            for (size_t i = 0; i < bc.size(); ++i) bup[i] = eng.emb2->map_index(bc[i]);
            for (long z = 0; z < q2; ++z) {
                long bv = raw_eval(R2raw, bup, z);
                be.ble2[z] = static_cast<uint16_t>(R2raw.mul(bv, eng.Lval2[z]));
                be.b2ce2[z] = static_cast<uint16_t>(R2raw.mul(R2raw.mul(bv, bv), eng.Cval2[z]));
            }
        }
        return be;
    };

    long long cand = 0;
    for (int level = 2; level <= B; ++level) {
        const bool even = level % 2 == 0;

        std::vector<BEntry> blist;
        if (even) {
            blist.push_back(make_bentry({}));  // b = 0
            for (int db = 0; 2 * db + 3 <= level; ++db) {
                RawPoly bc(db + 1, 0);
                for (bc[db] = 1; bc[db] < q; ++bc[db]) {
                    for (;;) {
                        blist.push_back(make_bentry(bc));
                        int i = 0;
                        while (i < db && ++bc[i] == q) {
                            bc[i] = 0;
                            ++i;
                        }
                        if (i == db) break;
                    }
                }
            }
        } else {
            const int db = (level - 3) / 2;
            RawPoly bc(db + 1, 0);
            bc[db] = 1;  // monic: the unit-normalized representative
            for (;;) {
                blist.push_back(make_bentry(bc));
                int i = 0;
                while (i < db && ++bc[i] == q) {
                    bc[i] = 0;
                    ++i;
                }
                if (i == db) break;
            }
        }

        auto for_each_a = [&](auto&& visit) {
            if (even) {
                const int da = level / 2;
                RawPoly ac(da + 1, 0);
                ac[da] = 1;  // monic
                for (;;) {
                    visit(ac);
                    int i = 0;
                    while (i < da && ++ac[i] == q) {
                        ac[i] = 0;
                        ++i;
                    }
                    if (i == da) break;
                }
            } else {
                RawPoly zero;
                visit(zero);
                for (int da = 0; 2 * da <= level - 1; ++da) {
                    RawPoly ac(da + 1, 0);
                    for (ac[da] = 1; ac[da] < q; ++ac[da]) {
                        for (;;) {
                            visit(ac);
                            int i = 0;
                            while (i < da && ++ac[i] == q) {
                                ac[i] = 0;
                                ++i;
                            }
                            if (i == da) break;
                        }
                    }
                }
            }
        };

        std::vector<uint16_t> evA1(q), evA1sq(q);
        std::vector<uint16_t> evA2, evA2sq;
        std::vector<uint8_t> in_base;
        if (D == 2) {
            evA2.resize(q2);
            evA2sq.resize(q2);
            in_base.assign(q2, 0);
            for (long r = 0; r < q; ++r) in_base[eng.emb2->map_index(r)] = 1;
        }

        // scratch buffers for the hot loop
        std::vector<long> roots1buf(q), roots2buf(q2 > 0 ? q2 : 1);
        std::vector<long> nbuf(level + 1);
        std::vector<std::pair<long, int>> lin_mults;
        std::vector<std::tuple<long, long, int>> quad_mults;

        for_each_a([&](const RawPoly& ac) {
            for (long r = 0; r < q; ++r) {
                long v = raw_eval(R, ac, r);
                evA1[r] = static_cast<uint16_t>(v);
                evA1sq[r] = static_cast<uint16_t>(R.mul(v, v));
            }
            if (D == 2) {
                RawPoly aup(ac.size());
                for (size_t i = 0; i < ac.size(); ++i) aup[i] = eng.emb2->map_index(ac[i]);
                for (long z = 0; z < q2; ++z) {
                    long v = raw_eval(R2raw, aup, z);
                    evA2[z] = static_cast<uint16_t>(v);
                    evA2sq[z] = static_cast<uint16_t>(R2raw.mul(v, v));
                }
            }

            for (const BEntry& be : blist) {
                if (++cand > opts.max_candidates)
                    throw budget_error("harvest_relations: candidate budget exhausted");

                int nroots1 = 0;
                for (long r = 0; r < q; ++r) {
                    long v = R.sub(R.sub(evA1sq[r], R.mul(evA1[r], be.ble1[r])), be.b2ce1[r]);
                    if (v == 0) roots1buf[nroots1++] = r;
                }

                if (D <= 2) {
                    int nroots2 = 0;
                    if (D == 2) {
                        for (long z = 0; z < q2; ++z) {
                            long v = R2raw.sub(
                                R2raw.sub(evA2sq[z], R2raw.mul(evA2[z], be.ble2[z])), be.b2ce2[z]);
                            if (v == 0 && !in_base[z]) roots2buf[nroots2++] = z;
                        }
                    }
                    if (nroots1 == 0 && nroots2 == 0) continue;

                    // norm in coefficient form, in place: a^2 - a*bl - b2c
                    int nlen = level + 1;
                    std::fill(nbuf.begin(), nbuf.begin() + nlen, 0);
                    for (size_t i = 0; i < ac.size(); ++i) {
                        if (!ac[i]) continue;
                        for (size_t j = 0; j < ac.size(); ++j)
                            nbuf[i + j] = R.add(nbuf[i + j], R.mul(ac[i], ac[j]));
                        for (size_t j = 0; j < be.bl.size(); ++j)
                            nbuf[i + j] = R.sub(nbuf[i + j], R.mul(ac[i], be.bl[j]));
                    }
                    for (size_t j = 0; j < be.b2c.size(); ++j) nbuf[j] = R.sub(nbuf[j], be.b2c[j]);
                    while (nlen > 1 && nbuf[nlen - 1] == 0) --nlen;

                    lin_mults.clear();
                    for (int ri = 0; ri < nroots1; ++ri) {
                        long r = roots1buf[ri];
                        int mult = 0;
                        // synthetic division in place while the root persists
                        while (nlen > 1) {
                            long acc = 0;
                            for (int i = nlen - 1; i >= 0; --i) acc = R.add(R.mul(acc, r), nbuf[i]);
                            if (acc != 0) break;
                            for (int i = nlen - 2; i >= 0; --i)
                                nbuf[i] = R.add(nbuf[i], R.mul(r, nbuf[i + 1]));
                            for (int i = 1; i < nlen; ++i) nbuf[i - 1] = nbuf[i];
                            --nlen;
                            ++mult;
                        }
                        if (mult) lin_mults.emplace_back(r, mult);
                    }
                    quad_mults.clear();
                    for (int zi = 0; zi < nroots2; ++zi) {
                        long z = roots2buf[zi];
                        long zq = eng.F2->pow(z, q);
                        if (zq < z) continue;  // one representative per conjugate pair
                        long tr = eng.F2->add(z, zq);
                        long nm = eng.F2->mul(z, zq);
                        auto trd = eng.emb2->preimage(Fq(eng.F2, tr));
                        auto nmd = eng.emb2->preimage(Fq(eng.F2, nm));
                        long c1 = R.negt[trd->index()], c0 = nmd->index();
                        int mult = 0;
                        while (nlen > 2) {
                            // long division by x^2 + c1 x + c0, undone on failure
                            for (int i = nlen - 1; i >= 2; --i) {
                                long c = nbuf[i];
                                if (!c) continue;
                                nbuf[i - 1] = R.sub(nbuf[i - 1], R.mul(c, c1));
                                nbuf[i - 2] = R.sub(nbuf[i - 2], R.mul(c, c0));
                            }
                            if (nbuf[0] == 0 && nbuf[1] == 0) {
                                for (int i = 2; i < nlen; ++i) nbuf[i - 2] = nbuf[i];
                                nlen -= 2;
                                ++mult;
                            } else {
                                for (int i = 2; i < nlen; ++i) {
                                    long c = nbuf[i];
                                    if (!c) continue;
                                    nbuf[i - 1] = R.add(nbuf[i - 1], R.mul(c, c1));
                                    nbuf[i - 2] = R.add(nbuf[i - 2], R.mul(c, c0));
                                }
                                break;
                            }
                        }
                        if (mult) quad_mults.emplace_back(c1, c0, mult);
                    }
                    if (nlen > 1) continue;  // leftover factor beyond the bound
                    eng.finish_candidate(ac, be.coeffs, lin_mults, quad_mults, {});
                } else {
                    RawPoly N = raw_sub(R, raw_sub(R, raw_mul(R, ac, ac), raw_mul(R, ac, be.bl)),
                                        be.b2c);
                    auto fac = fq_poly_factor_bounded(raw_to_poly(F, N), D);
                    if (!fac) continue;
                    std::vector<std::pair<FqPoly, int>> high;
                    std::vector<std::pair<long, int>> lin;
                    std::vector<std::tuple<long, long, int>> quad;
                    for (auto& fm : fac->factors) {
                        if (fm.first.degree() == 1)
                            lin.emplace_back((-fm.first[0]).index(), fm.second);
                        else if (fm.first.degree() == 2)
                            quad.emplace_back(fm.first[1].index(), fm.first[0].index(), fm.second);
                        else
                            high.emplace_back(fm.first, fm.second);
                    }
                    eng.finish_candidate(ac, be.coeffs, lin, quad, high);
                }
            }
        });

        if (std::find(snapshot_levels.begin(), snapshot_levels.end(), level) !=
            snapshot_levels.end()) {
            eng.acc = row_hermite_basis(eng.acc);
            out.snapshots.push_back(eng.acc);
        }
    }

    eng.acc = row_hermite_basis(eng.acc);
    out.lattice = eng.acc;
    out.candidates = cand;
    out.relations = eng.relations;
    return out;
}

const std::vector<Int>& IdealClassGroupResult::coords_of(const ClosedPoint& P) const {
    auto it = std::lower_bound(generators.begin(), generators.end(), P);
    if (it == generators.end() || !(*it == P))
        throw std::invalid_argument("IdealClassGroupResult: point outside the generator set");
    return generator_coords[it - generators.begin()];
}

IdealClassGroupResult picard_bruteforce(const RelationHarvest& harvest) {
    Presentation pres = group_from_presentation(harvest.generators.size(), harvest.lattice);
    IdealClassGroupResult out{harvest.curve, pres.group, harvest.generators,
                              pres.generator_images, false, harvest.relations};
    if (harvest.snapshots.size() == 3) {
        FgAbelianGroup g0 =
            group_from_presentation(harvest.generators.size(), harvest.snapshots[0]).group;
        FgAbelianGroup g1 =
            group_from_presentation(harvest.generators.size(), harvest.snapshots[1]).group;
        FgAbelianGroup g2 =
            group_from_presentation(harvest.generators.size(), harvest.snapshots[2]).group;
        out.stable = g0 == g1 && g1 == g2;
    }
    return out;
}

IdealClassGroupResult picard_bruteforce(const FqCurve& E, int degree_bound, int norm_budget,
                                        const HarvestOptions& opts) {
    return picard_bruteforce(harvest_relations(E, degree_bound, norm_budget, opts));
}

}  // namespace ellpic
