#include "ellpic/abelian.hpp"

#include <stdexcept>

namespace ellpic {

std::string FgAbelianGroup::str() const {
    if (is_trivial()) return "0";
    std::string s;
    if (free_rank == 1)
        s = "Z";
    else if (free_rank > 1)
        s = "Z^" + std::to_string(free_rank);
    for (const auto& d : invariant_factors) {
        if (!s.empty()) s += " (+) ";
        s += "Z/" + d.str();
    }
    return s;
}

FgAbelianGroup normalized_group(long free_rank, const std::vector<Int>& torsion_orders) {
    if (free_rank < 0) throw std::invalid_argument("normalized_group: negative rank");
    for (const auto& d : torsion_orders)
        if (d < 2) throw std::invalid_argument("normalized_group: torsion order < 2");
    const size_t t = torsion_orders.size();
    IntMatrix rel(t, t);
    for (size_t i = 0; i < t; ++i) rel.at(i, i) = torsion_orders[i];
    FgAbelianGroup g = group_from_presentation(t, rel).group;
    g.free_rank += free_rank;
    return g;
}

std::vector<Int> Presentation::reduce(std::vector<Int> coords) const {
    const size_t t = group.invariant_factors.size();
    if (coords.size() != t + static_cast<size_t>(group.free_rank))
        throw std::invalid_argument("Presentation: coordinate length mismatch");
    for (size_t i = 0; i < t; ++i) {
        coords[i] %= group.invariant_factors[i];
        if (coords[i] < 0) coords[i] += group.invariant_factors[i];
    }
    return coords;
}

std::vector<Int> Presentation::image_of(const std::vector<Int>& v) const {
    if (v.size() != generator_images.size())
        throw std::invalid_argument("Presentation: vector length mismatch");
    std::vector<Int> acc(group.invariant_factors.size() + group.free_rank, 0);
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (size_t j = 0; j < acc.size(); ++j) acc[j] += v[i] * generator_images[i][j];
    }
    return reduce(std::move(acc));
}

bool Presentation::is_zero(const std::vector<Int>& coords) const {
    for (const auto& c : reduce(coords))
        if (c != 0) return false;
    return true;
}

std::vector<Int> Presentation::add(const std::vector<Int>& a, const std::vector<Int>& b) const {
    std::vector<Int> r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return reduce(std::move(r));
}

std::vector<Int> Presentation::negate(const std::vector<Int>& a) const {
    std::vector<Int> r(a);
    for (auto& c : r) c = -c;
    return reduce(std::move(r));
}

Presentation group_from_presentation(size_t n, const IntMatrix& relations) {
    if (relations.rows() > 0 && relations.cols() != n)
        throw std::invalid_argument("group_from_presentation: relation width mismatch");
    IntMatrix M = relations.rows() == 0 ? IntMatrix(0, n) : relations;
    SmithResult s = smith_normal_form(M);

    // After the coordinate change v -> v*V the lattice is diagonal.
    std::vector<Int> diag(n, 0);
    for (size_t j = 0; j < s.diagonal.size(); ++j) diag[j] = s.diagonal[j];

    std::vector<size_t> torsion_cols, free_cols;
    for (size_t j = 0; j < n; ++j) {
        if (diag[j] == 0)
            free_cols.push_back(j);
        else if (diag[j] >= 2)
            torsion_cols.push_back(j);
        // diag[j] == 1: the coordinate dies
    }

    Presentation out;
    for (size_t j : torsion_cols) out.group.invariant_factors.push_back(diag[j]);
    out.group.free_rank = static_cast<long>(free_cols.size());

    out.generator_images.resize(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<Int> img;
        img.reserve(torsion_cols.size() + free_cols.size());
        for (size_t j : torsion_cols) img.push_back(s.V.at(i, j));
        for (size_t j : free_cols) img.push_back(s.V.at(i, j));
        out.generator_images[i] = out.reduce(std::move(img));
    }
    return out;
}

namespace {

// Relation rows of G acting on its own coordinates: d_i * e_i per factor.
IntMatrix group_relation_rows(const FgAbelianGroup& G) {
    const size_t t = G.invariant_factors.size();
    const size_t m = t + G.free_rank;
    IntMatrix R(t, m);
    for (size_t i = 0; i < t; ++i) R.at(i, i) = G.invariant_factors[i];
    return R;
}

}  // namespace

FgAbelianGroup subgroup_structure(const FgAbelianGroup& G,
                                  const std::vector<std::vector<Int>>& generators) {
    const size_t m = G.invariant_factors.size() + G.free_rank;
    const size_t k = generators.size();
    if (k == 0) return FgAbelianGroup{};
    IntMatrix A(k, m);
    for (size_t i = 0; i < k; ++i) {
        if (generators[i].size() != m)
            throw std::invalid_argument("subgroup_structure: coordinate length mismatch");
        for (size_t j = 0; j < m; ++j) A.at(i, j) = generators[i][j];
    }
    // Relations among the k generators: x*A lies in the coordinate lattice of G
    // iff (x, -y)*[A; R] = 0 for some y, so project the left kernel of the
    // stacked matrix onto its first k coordinates.
    IntMatrix B = A.vstack(group_relation_rows(G));
    IntMatrix K = left_kernel(B);
    IntMatrix rel(0, k);
    for (size_t i = 0; i < K.rows(); ++i) {
        std::vector<Int> r = K.row(i);
        rel.append_row(std::vector<Int>(r.begin(), r.begin() + k));
    }
    return group_from_presentation(k, rel).group;
}

Presentation quotient_by_subgroup(const FgAbelianGroup& G,
                                  const std::vector<std::vector<Int>>& generators) {
    const size_t m = G.invariant_factors.size() + G.free_rank;
    IntMatrix rel = group_relation_rows(G);
    for (const auto& g : generators) {
        if (g.size() != m) throw std::invalid_argument("quotient_by_subgroup: coordinate length mismatch");
        rel.append_row(g);
    }
    return group_from_presentation(m, rel);
}

}  // namespace ellpic
