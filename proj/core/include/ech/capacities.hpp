// ECH capacity sequences c_k for toric domains.
#pragma once

#include <ech/lattice.hpp>
#include <ech/rational.hpp>
#include <ech/toric_domain.hpp>
#include <ech/weights.hpp>

#include <memory>
#include <optional>
#include <vector>

namespace ech {

// c_k(E(a,b)) = N(a,b)_k.
Rational cap_ellipsoid(const Rational& a, const Rational& b, std::int64_t k);

// c_k(P(a,b)) = min{a*m + b*n : m,n >= 0, (m+1)(n+1) >= k+1}.
Rational cap_polydisk(const Rational& a, const Rational& b, std::int64_t k);

struct ToricCapacity {
    Rational value;
    LatticePolygon witness;
};

// c_k(X_Omega) as the minimal dual-norm length over closed convex lattice
// polygons enclosing exactly k+1 lattice points. Omega is any convex
// polygon with positive area; for regions touching the axes the formula is
// proven only for axis triangles and rectangles, where it reproduces the
// ellipsoid and polydisk closed forms. budget_hint, when given, seeds the
// pruning bound; an unachievable hint is detected and ignored.
ToricCapacity cap_toric(const RationalPolygon& omega, std::int64_t k,
                        std::optional<Rational> budget_hint = std::nullopt,
                        int threads = 1);

// A domain together with a cached prefix of its capacity sequence.
struct CapacitySequence {
    ToricDomain domain;
    std::vector<Rational> values;
};

// Prefix c_0..c_{count-1} for any domain kind. General domains go through
// the toric optimizer per index, so large counts are only practical for
// ellipsoids, polydisks, and their unions.
CapacitySequence capacity_sequence(const ToricDomain& domain, std::int64_t count,
                                   int threads = 1);

// Disjoint-union capacity: max over k_1+...+k_n = k of the summed parts.
// Every part must carry at least k+1 cached values.
Rational cap_disjoint_union(const std::vector<CapacitySequence>& parts,
                            std::int64_t k);

struct VolumeEstimate {
    Rational c_k;
    double estimate;  // c_k^2 / (4k), converging to vol as k grows
};

VolumeEstimate volume_estimate(const ToricDomain& domain, std::int64_t k,
                               int threads = 1);

}  // namespace ech
