#include "ellpic/overring.hpp"

#include <algorithm>

namespace ellpic {

OverringSpec make_overring(const FqCurve& E, std::vector<ClosedPoint> removed) {
    std::sort(removed.begin(), removed.end());
    for (size_t i = 0; i + 1 < removed.size(); ++i)
        if (removed[i] == removed[i + 1])
            throw std::invalid_argument("make_overring: duplicate removed prime");
    return OverringSpec{E, std::move(removed)};
}

FgAbelianGroup picard_quotient(const OverringSpec& spec, const MWGroup& G) {
    std::vector<std::vector<Int>> gens;
    for (const auto& P : spec.removed)
        gens.push_back(G.coords_of(closed_point_class(spec.curve, P)));
    return quotient_by_subgroup(G.group, gens).group;
}

FgAbelianGroup picard_quotient(const OverringSpec& spec) {
    return picard_quotient(spec, group_structure(spec.curve));
}

FgAbelianGroup removed_class_subgroup(const OverringSpec& spec, const MWGroup& G) {
    std::vector<std::vector<Int>> gens;
    for (const auto& P : spec.removed)
        gens.push_back(G.coords_of(closed_point_class(spec.curve, P)));
    return subgroup_structure(G.group, gens);
}

namespace {

IntMatrix with_unit_relations(const IntMatrix& lattice, const std::vector<long>& cols, size_t n) {
    IntMatrix M = lattice.rows() == 0 ? IntMatrix(0, n) : lattice;
    for (long c : cols) {
        std::vector<Int> row(n, 0);
        row[c] = 1;
        M.append_row(row);
    }
    return M;
}

std::vector<long> removed_columns(const OverringSpec& spec, const RelationHarvest& harvest) {
    std::vector<long> cols;
    for (const auto& P : spec.removed) {
        if (P.degree() > harvest.degree_bound)
            throw std::invalid_argument(
                "picard_direct: removed prime exceeds the harvest degree bound");
        long c = harvest.column_of(P);
        if (c < 0) throw std::invalid_argument("picard_direct: removed prime not on this curve");
        cols.push_back(c);
    }
    return cols;
}

}  // namespace

DirectPicardResult picard_direct(const OverringSpec& spec, const RelationHarvest& harvest) {
    if (!(spec.curve == harvest.curve))
        throw std::invalid_argument("picard_direct: harvest belongs to a different curve");
    const size_t n = harvest.generators.size();
    std::vector<long> cols = removed_columns(spec, harvest);

    Presentation pres = group_from_presentation(n, with_unit_relations(harvest.lattice, cols, n));
    DirectPicardResult out{pres.group, false, pres.generator_images};
    if (harvest.snapshots.size() == 3) {
        FgAbelianGroup g0 =
            group_from_presentation(n, with_unit_relations(harvest.snapshots[0], cols, n)).group;
        FgAbelianGroup g1 =
            group_from_presentation(n, with_unit_relations(harvest.snapshots[1], cols, n)).group;
        FgAbelianGroup g2 =
            group_from_presentation(n, with_unit_relations(harvest.snapshots[2], cols, n)).group;
        out.stable = g0 == g1 && g1 == g2;
    }
    return out;
}

DirectPicardResult picard_direct(const OverringSpec& spec, int degree_bound, int norm_budget,
                                 const HarvestOptions& opts) {
    return picard_direct(spec, harvest_relations(spec.curve, degree_bound, norm_budget, opts));
}

bool pushforward_check(const OverringSpec& spec, const RelationHarvest& harvest,
                       const ClosedPoint& P) {
    if (std::binary_search(spec.removed.begin(), spec.removed.end(), P))
        throw std::invalid_argument("pushforward_check: prime is removed in this overring");
    long col = harvest.column_of(P);
    if (col < 0) return false;
    // the generator list is strictly sorted, so the column is unique; make the
    // invariant explicit anyway
    long count = 0;
    for (const auto& g : harvest.generators)
        if (g == P) ++count;
    return count == 1;
}

OverringPicardReport overring_report(const OverringSpec& spec, const RelationHarvest& harvest) {
    MWGroup G = group_structure(spec.curve);
    OverringPicardReport rep;
    rep.quotient = picard_quotient(spec, G);
    DirectPicardResult direct = picard_direct(spec, harvest);
    rep.direct = direct.group;
    rep.direct_stable = direct.stable;
    rep.isomorphic = is_isomorphic(rep.quotient, rep.direct);
    rep.kernel = removed_class_subgroup(spec, G);
    rep.kernel_order = rep.kernel.torsion_order();
    rep.curve_order = Int(G.point_count);
    rep.order_identity = rep.quotient.torsion_order() * rep.kernel_order == rep.curve_order;
    return rep;
}

}  // namespace ellpic
