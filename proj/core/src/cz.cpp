#include <ech/cz.hpp>

#include <algorithm>
#include <stdexcept>

namespace ech {

Int cz_elliptic(const Theta& theta, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("cz_elliptic: k must be >= 1");
    if (theta.side == Side::exact && (theta.base * Rational(k)).is_integer())
        throw std::invalid_argument(
            "cz_elliptic: k*theta is integral; a side (+ or -) is required");
    return 2 * floor_mul(theta, k) + 1;
}

Int ellipsoid_grading(const Theta& b_over_a, std::int64_t m1, std::int64_t m2) {
    if (m1 < 0 || m2 < 0)
        throw std::invalid_argument("ellipsoid_grading: multiplicities must be >= 0");
    Int sum = Int(m1 + 1) * Int(m2 + 1) - 1;
    if (m1 > 0) {
        Theta a_over_b = b_over_a.invert();
        for (std::int64_t k = 1; k <= m1; ++k) sum += floor_mul(a_over_b, k);
    }
    for (std::int64_t k = 1; k <= m2; ++k) sum += floor_mul(b_over_a, k);
    return 2 * sum;
}

std::vector<EllipsoidGenerator> ellipsoid_generators_by_action(
    const Theta& b_over_a, const Rational& action_cap) {
    if (!b_over_a.base.is_positive())
        throw std::invalid_argument("ellipsoid_generators_by_action: ratio must be positive");
    // Normalizing a = 1, the action of (m1, m2) is m1 + (b/a)*m2; the
    // infinitesimal contributes -side*eps*m2 to ties.
    struct Keyed {
        Rational base_action;
        std::int64_t m1, m2;
    };
    std::vector<Keyed> gens;
    const Rational& r = b_over_a.base;
    for (std::int64_t m2 = 0; Rational(m2) * r <= action_cap; ++m2) {
        Rational base = Rational(m2) * r;
        for (std::int64_t m1 = 0; Rational(m1) + base <= action_cap; ++m1)
            gens.push_back(Keyed{Rational(m1) + base, m1, m2});
    }
    int eps_sign = b_over_a.side == Side::plus    ? 1
                   : b_over_a.side == Side::minus ? -1
                                                  : 0;
    std::sort(gens.begin(), gens.end(), [&](const Keyed& x, const Keyed& y) {
        if (x.base_action != y.base_action) return x.base_action < y.base_action;
        // action = base + eps_sign*eps*m2: larger m2 is later for +, earlier for -.
        if (x.m2 != y.m2) return eps_sign >= 0 ? x.m2 < y.m2 : x.m2 > y.m2;
        return x.m1 < y.m1;
    });
    std::vector<EllipsoidGenerator> out;
    for (const auto& g : gens) out.push_back(EllipsoidGenerator{g.m1, g.m2});
    return out;
}

}  // namespace ech
