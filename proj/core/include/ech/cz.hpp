// Conley-Zehnder indices of elliptic orbit iterates and the grading of
// ellipsoid chain-complex generators.
#pragma once

#include <ech/rational.hpp>
#include <ech/theta.hpp>

#include <cstdint>
#include <vector>

namespace ech {

// CZ of the k-fold iterate of an elliptic orbit with rotation angle theta:
// 2*floor(k*theta) + 1. Exactly integral multiples need a side to be
// meaningful and are rejected otherwise.
Int cz_elliptic(const Theta& theta, std::int64_t k);

// A generator gamma_1^{m1} gamma_2^{m2} of the ellipsoid chain complex,
// with its closed-form topological quantities.
struct EllipsoidGenerator {
    std::int64_t m1 = 0, m2 = 0;

    Rational action(const Rational& a, const Rational& b) const {
        return a * Rational(m1) + b * Rational(m2);
    }
    std::int64_t c_tau() const { return m1 + m2; }
    std::int64_t q_tau() const { return 2 * m1 * m2; }
};

// The grading
//   I = 2((m1+1)(m2+1) - 1 + sum_{k<=m1} floor(k*a/b) + sum_{k<=m2} floor(k*b/a)),
// with the axis ratio b/a given as a perturbed angle.
Int ellipsoid_grading(const Theta& b_over_a, std::int64_t m1, std::int64_t m2);

// All generators with rational action part a*(m1 + (b/a)*m2) at most
// `action_cap`, sorted by exact action including the infinitesimal part.
// With a generic ratio the order is total, and gradings along it are
// 0, 2, 4, ...; position k is the generator reached from position k+1 by
// the U map.
std::vector<EllipsoidGenerator> ellipsoid_generators_by_action(
    const Theta& b_over_a, const Rational& action_cap);

}  // namespace ech
