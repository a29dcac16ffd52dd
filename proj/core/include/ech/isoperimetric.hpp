// The discrete isoperimetric engine: minimize the length of a closed convex
// lattice polygon holding a prescribed number of lattice points, where
// length is measured either by a dual norm (toric capacities) or by the
// Euclidean norm (the T^3 spectrum).
//
// Search strategy: a greedy feasible witness gives an upper bound; every
// edge of a better candidate then has norm below that bound, which confines
// edge vectors to a finite set. Candidates are enumerated as angularly
// sorted edge multisets, branch-and-bound pruned by partial length plus the
// triangle-inequality closing bound, and by the Pick lower bound
// 2*Area + boundary <= 2*count - 2 on every prefix.
#pragma once

#include <ech/lattice.hpp>
#include <ech/rational.hpp>
#include <ech/rational_polygon.hpp>
#include <ech/sqrt_sum.hpp>

#include <optional>
#include <vector>

namespace ech {

struct ToricMinimum {
    Rational value;
    LatticePolygon witness;
};

// Minimum of sum of dual norms over closed convex lattice polygons with
// exactly `enclosed_count` lattice points. Requires the origin interior to
// omega_prime. Deterministic for any thread count; ties are broken by the
// canonical polygon order.
//
// prune_hint optionally tightens the initial pruning bound. A hint below
// the true minimum cannot corrupt the result: the run is validated against
// the hint and repeated without it when the restricted search proves
// inconclusive.
ToricMinimum minimize_omega_length(const RationalPolygon& omega_prime,
                                   std::int64_t enclosed_count, int threads = 1,
                                   std::optional<Rational> prune_hint = std::nullopt);

struct EuclideanMinimum {
    SqrtSum value;
    LatticePolygon witness;
};

// Same problem for the Euclidean norm.
EuclideanMinimum minimize_euclidean_length(std::int64_t enclosed_count,
                                           int threads = 1);

// Every convex lattice polygon (up to translation, degenerates included)
// with Euclidean perimeter at most `cutoff`, in canonical order.
std::vector<LatticePolygon> polygons_within_euclidean_length(const Rational& cutoff);

}  // namespace ech
