#include "ellpic/fq_poly.hpp"

#include <map>
#include <mutex>

namespace ellpic {

FqPoly fq_poly_from_indices(const FqField* F, const std::vector<long>& idx) {
    std::vector<Fq> c;
    c.reserve(idx.size());
    for (long i : idx) c.emplace_back(F, i);
    return FqPoly(std::move(c));
}

namespace {

FqPoly monic_from_code(const FqField* F, int d, long code) {
    std::vector<Fq> c;
    c.reserve(d + 1);
    for (int i = 0; i < d; ++i) {
        c.emplace_back(F, code % F->q());
        code /= F->q();
    }
    c.emplace_back(F, F->from_int(1));
    return FqPoly(std::move(c));
}

bool irreducible_by_trial(const FqPoly& f) {
    int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    const FqField* F = f.lead().field();
    for (int e = 1; 2 * e <= d; ++e) {
        for (const auto& m : monic_irreducibles(F, e)) {
            if (m.divides(f)) return false;
        }
    }
    return true;
}

}  // namespace

const std::vector<FqPoly>& monic_irreducibles(const FqField* F, int d) {
    static std::mutex mu;
    static std::map<std::pair<const FqField*, int>, std::vector<FqPoly>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({F, d});
        if (it != cache.end()) return it->second;
    }
    std::vector<FqPoly> out;
    long count = 1;
    for (int i = 0; i < d; ++i) count *= F->q();
    for (long code = 0; code < count; ++code) {
        FqPoly f = monic_from_code(F, d, code);
        if (irreducible_by_trial(f)) out.push_back(std::move(f));
    }
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(std::make_pair(F, d), std::move(out));
    (void)inserted;
    return it->second;
}

bool fq_poly_irreducible(const FqPoly& f) { return irreducible_by_trial(f.monic()); }

std::vector<Fq> fq_poly_roots(const FqPoly& f, const FqField* in_field) {
    std::vector<Fq> out;
    if (f.is_zero()) throw std::domain_error("fq_poly_roots: zero polynomial");
    const FqField* base = f.lead().field();
    FqPoly g = f;
    if (base != in_field) g = fq_poly_map(f, FqEmbedding::get(base, in_field));
    for (long z = 0; z < in_field->q(); ++z) {
        Fq x(in_field, z);
        if (g.eval(x).is_zero()) out.push_back(x);
    }
    return out;
}

std::optional<FqPoly> fq_poly_sqrt(const FqPoly& f) {
    if (f.is_zero()) return FqPoly();
    const FqField* F = f.lead().field();
    if (F->p() == 2) throw std::domain_error("fq_poly_sqrt: odd characteristic only");
    int d = f.degree();
    if (d % 2) return std::nullopt;
    int m = d / 2;
    auto lead_root = F->sqrt(f.lead().index());
    if (!lead_root) return std::nullopt;
    std::vector<Fq> g(static_cast<size_t>(m) + 1, f.lead().zero());
    g[m] = Fq(F, *lead_root);
    Fq two_gm_inv = (g[m] + g[m]).inv();
    // match coefficients of x^(m+i) downward; g is determined once g_m is fixed
    for (int i = m - 1; i >= 0; --i) {
        Fq acc = f.coeff(static_cast<size_t>(m + i), f.lead());
        for (int j = i + 1; j <= m; ++j) {
            int other = m + i - j;
            if (other < j) break;
            Fq prod = g[j] * g[other];
            acc = acc - (other == j ? prod : prod + prod);
        }
        g[i] = acc * two_gm_inv;
    }
    FqPoly cand = FqPoly(std::move(g));
    if (cand * cand != f) return std::nullopt;
    return cand;
}

std::optional<FqFactorization> fq_poly_factor_bounded(const FqPoly& f, int max_degree) {
    if (f.is_zero()) throw std::domain_error("fq_poly_factor_bounded: zero polynomial");
    FqFactorization out{f.lead(), {}};
    FqPoly rem = f.monic();
    const FqField* F = f.lead().field();
    for (int d = 1; d <= max_degree && rem.degree() > 0; ++d) {
        if (rem.degree() < d) break;
        for (const auto& m : monic_irreducibles(F, d)) {
            if (rem.degree() < d) break;
            int mult = 0;
            while (true) {
                auto [q, r] = rem.divmod(m);
                if (!r.is_zero()) break;
                rem = q;
                ++mult;
            }
            if (mult) out.factors.emplace_back(m, mult);
        }
    }
    if (rem.degree() > 0) return std::nullopt;
    return out;
}

FqPoly fq_poly_interpolate(const std::vector<std::pair<Fq, Fq>>& points) {
    if (points.empty()) return FqPoly();
    const Fq one = points[0].first.one();
    FqPoly acc;
    for (size_t i = 0; i < points.size(); ++i) {
        FqPoly num = FqPoly::constant(one);
        Fq den = one;
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            num = num * (FqPoly::x(one) - FqPoly::constant(points[j].first));
            den = den * (points[i].first - points[j].first);
        }
        acc = acc + num * (points[i].second * den.inv());
    }
    return acc;
}

FqPoly fq_poly_map(const FqPoly& f, const FqEmbedding* emb) {
    std::vector<Fq> c;
    c.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) c.push_back(emb->map(v));
    return FqPoly(std::move(c));
}

std::optional<FqPoly> fq_poly_preimage(const FqPoly& f, const FqEmbedding* emb) {
    std::vector<Fq> c;
    c.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) {
        auto pre = emb->preimage(v);
        if (!pre) return std::nullopt;
        c.push_back(*pre);
    }
    return FqPoly(std::move(c));
}

}  // namespace ellpic
