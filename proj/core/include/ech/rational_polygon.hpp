// Convex polygons with rational vertices: the regions Omega that define
// toric domains, and their translates Omega' whose support function is the
// dual norm measuring edge lengths in the toric capacity formula.
#pragma once

#include <ech/lattice.hpp>
#include <ech/rational.hpp>

#include <vector>

namespace ech {

struct RationalPoint {
    Rational x, y;
    friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
};

class RationalPolygon {
public:
    // Takes the convex hull of the given points; collinear inputs yield a
    // degenerate polygon, which construction allows but the norm operations
    // reject.
    static RationalPolygon from_vertices(std::vector<RationalPoint> points);

    const std::vector<RationalPoint>& vertices() const { return vertices_; }
    bool is_degenerate() const { return vertices_.size() < 3; }

    RationalPolygon translated(const Rational& dx, const Rational& dy) const;
    RationalPolygon scaled(const Rational& r) const;

    Rational area() const;
    // Area centroid; an interior point of any nondegenerate convex polygon.
    RationalPoint centroid() const;
    bool contains_origin_interior() const;

    // Rational lower bound for the distance from the origin to the
    // boundary; positive exactly when the origin is interior. Used to
    // certify search boxes for the optimizers.
    Rational inradius_lower_bound() const;

private:
    std::vector<RationalPoint> vertices_;  // counterclockwise, strict hull
};

// Support function max{<v,w> : w in Omega'}; the dual norm of Thm-style
// length measurements. Requires the origin in the interior of omega_prime.
Rational dual_norm(const RationalPolygon& omega_prime, LatticeVector v);

// Sum of dual norms of the path's edges, measuring with the translate of
// omega by the given offset. For closed paths the result does not depend on
// the admissible translate.
Rational omega_length(const RationalPolygon& omega, const LatticePolygon& path,
                      const Rational& dx, const Rational& dy);

// Omega' cleared of denominators: integer vertices with a common scale, so
// that scaled dual norms of integer vectors are plain integers.
struct ScaledSupport {
    std::vector<std::pair<Int, Int>> vertices;
    Int denom;  // true norm = scaled / denom

    static ScaledSupport of(const RationalPolygon& omega_prime);
    Int scaled_norm(LatticeVector v) const;
    Rational norm(LatticeVector v) const { return Rational(scaled_norm(v), denom); }
};

}  // namespace ech
