#include "ellpic/tower.hpp"

namespace ellpic {

Curve<Rational> rank_zero_base_curve() {
    Rational z(0);
    return Curve<Rational>(z, z, Rational(1), Rational(-49), Rational(-86));
}

bool is_rank_zero_base(const Curve<Rational>& E) {
    Curve<Rational> e0 = rank_zero_base_curve();
    return E == e0;
}

TowerLevel tower_group(const Curve<Rational>& base, int n) {
    if (!is_rank_zero_base(base))
        throw std::invalid_argument(
            "tower_group: the rank-zero fact is only available for the pinned base curve");
    if (n < 0) throw std::invalid_argument("tower_group: height must be >= 0");
    TowerLevel out;
    out.height = n;
    out.group.free_rank = n;
    for (int i = 1; i <= n; ++i) out.generator_names.push_back("Q" + std::to_string(i));
    return out;
}

TowerElement tower_zero(int n) { return TowerElement{std::vector<Int>(n, 0)}; }

TowerElement tower_generator(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("tower_generator: index out of range");
    TowerElement e = tower_zero(n);
    e.coords[i - 1] = 1;
    return e;
}

TowerElement tower_add(const TowerElement& a, const TowerElement& b) {
    if (a.coords.size() != b.coords.size())
        throw std::invalid_argument("tower_add: different heights");
    TowerElement out = a;
    for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

TowerElement tower_neg(const TowerElement& a) {
    TowerElement out = a;
    for (auto& c : out.coords) c = -c;
    return out;
}

TowerElement tower_lift(const TowerElement& a) {
    TowerElement out = a;
    out.coords.push_back(0);
    return out;
}

}  // namespace ellpic
