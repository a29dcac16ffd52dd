// Test-only oracle: exhaustive enumeration of convex lattice polygons.
//
// Independent of the branch-and-bound search path: polygons are enumerated
// as strictly convex counterclockwise vertex cycles anchored at their
// lexicographically least vertex inside a box, with no incumbent pruning,
// plus all degenerate points and segments. Used to certify optimizer
// results: every polygon of length <= budget inside the certified box is
// produced exactly once (up to translation, after canonicalization).
#pragma once

#include <ech/lattice.hpp>
#include <ech/rational.hpp>
#include <ech/rational_polygon.hpp>
#include <ech/sqrt_sum.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace ech_oracle {

using ech::LatticePolygon;
using ech::LatticeVector;

// Visits every convex lattice polygon, degenerate ones included, whose
// norm-sum over edges is <= budget and whose translate fits in [0,W]^2.
// Value needs +, <=, and a zero default.
template <typename Value, typename Norm>
std::set<LatticePolygon> polygons_up_to(std::int64_t W, const Norm& edge_norm,
                                        const Value& budget) {
    std::set<LatticePolygon> seen;
    seen.insert(LatticePolygon());

    std::vector<LatticeVector> box;
    for (std::int64_t x = 0; x <= W; ++x)
        for (std::int64_t y = 0; y <= W; ++y) box.push_back({x, y});

    // Segments: every unordered pair gives a 2-gon.
    for (std::size_t i = 0; i < box.size(); ++i) {
        for (std::size_t j = i + 1; j < box.size(); ++j) {
            LatticeVector e = box[j] - box[i];
            Value len = edge_norm(e);
            len = len + edge_norm(-e);
            if (len <= budget)
                seen.insert(LatticePolygon::from_edges({e, -e}));
        }
    }

    // Strictly convex cycles v0 -> v1 -> ... -> v0, counterclockwise, with
    // v0 the least vertex in (y, x) order.
    auto lex_after = [](LatticeVector a, LatticeVector b) {
        return b.y > a.y || (b.y == a.y && b.x > a.x);
    };
    std::vector<LatticeVector> chain;
    std::function<void(const LatticeVector&, Value)> extend =
        [&](const LatticeVector& v0, Value used) {
            const LatticeVector last = chain.back();
            // Try closing the cycle.
            if (chain.size() >= 3) {
                LatticeVector closing = v0 - last;
                LatticeVector e_last = last - chain[chain.size() - 2];
                LatticeVector e_first = chain[1] - v0;
                Value total = used + edge_norm(closing);
                if (total <= budget && cross(e_last, closing) > 0 &&
                    cross(closing, e_first) > 0) {
                    std::vector<LatticeVector> edges;
                    for (std::size_t i = 1; i < chain.size(); ++i)
                        edges.push_back(chain[i] - chain[i - 1]);
                    edges.push_back(closing);
                    seen.insert(LatticePolygon::from_edges(std::move(edges)));
                }
            }
            for (const auto& next : box) {
                if (!lex_after(v0, next)) continue;
                LatticeVector e = next - last;
                if (e.is_zero()) continue;
                if (chain.size() >= 2) {
                    LatticeVector prev = last - chain[chain.size() - 2];
                    if (cross(prev, e) <= 0) continue;
                } else {
                    // First edge of a counterclockwise cycle anchored at the
                    // (y,x)-least vertex never points into the lower half.
                    if (e.y < 0 || (e.y == 0 && e.x < 0)) continue;
                }
                Value used_next = used + edge_norm(e);
                if (!(used_next <= budget)) continue;
                chain.push_back(next);
                extend(v0, used_next);
                chain.pop_back();
            }
        };
    for (const auto& v0 : box) {
        chain.assign(1, v0);
        extend(v0, Value{});
    }
    return seen;
}

// Minimum length among enumerated polygons holding exactly `count` lattice
// points; empty optional when none is in range.
template <typename Value, typename Norm>
std::optional<Value> oracle_minimum(std::int64_t W, const Norm& edge_norm,
                                    const Value& budget, std::int64_t count) {
    std::optional<Value> best;
    for (const auto& poly : polygons_up_to<Value>(W, edge_norm, budget)) {
        if (ech::lattice_count(poly) != count) continue;
        Value len{};
        for (const auto& e : poly.edges()) len = len + edge_norm(e);
        if (!best || len < *best) best = len;
    }
    return best;
}

}  // namespace ech_oracle
