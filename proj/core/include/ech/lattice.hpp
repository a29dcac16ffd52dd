// Convex lattice polygons up to translation, possibly degenerate (a 2-gon
// or a single point). A polygon is stored as its multiset of edge vectors,
// one per direction, sorted counterclockwise by angle starting from the
// positive x-axis; this canonical form is what equality and hashing use.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ech {

struct LatticeVector {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend LatticeVector operator+(LatticeVector a, LatticeVector b) {
        return {a.x + b.x, a.y + b.y};
    }
    friend LatticeVector operator-(LatticeVector a, LatticeVector b) {
        return {a.x - b.x, a.y - b.y};
    }
    LatticeVector operator-() const { return {-x, -y}; }
    friend LatticeVector operator*(std::int64_t k, LatticeVector v) {
        return {k * v.x, k * v.y};
    }
    friend bool operator==(LatticeVector a, LatticeVector b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(LatticeVector a, LatticeVector b) { return !(a == b); }
    bool is_zero() const { return x == 0 && y == 0; }
};

inline std::int64_t cross(LatticeVector a, LatticeVector b) {
    return a.x * b.y - a.y * b.x;
}
inline std::int64_t dot(LatticeVector a, LatticeVector b) {
    return a.x * b.x + a.y * b.y;
}

// gcd(|x|,|y|); the number of primitive lattice steps along the vector.
std::int64_t divisibility(LatticeVector v);
LatticeVector primitive_of(LatticeVector v);

// Strict counterclockwise angular order on nonzero vectors, starting at the
// direction (1,0). Parallel vectors of equal direction compare equal.
bool angle_less(LatticeVector a, LatticeVector b);

class LatticePolygon {
public:
    // The point polygon.
    LatticePolygon() = default;

    // Builds the canonical form from arbitrary edge vectors: same-direction
    // edges are merged, the result is sorted by angle and must sum to zero.
    static LatticePolygon from_edges(std::vector<LatticeVector> edges);

    // Convex hull boundary of a point set (any set, duplicates allowed).
    static LatticePolygon hull_of(const std::vector<LatticeVector>& points);

    const std::vector<LatticeVector>& edges() const { return edges_; }
    bool is_point() const { return edges_.empty(); }
    bool is_two_gon() const { return edges_.size() == 2; }
    std::size_t edge_count() const { return edges_.size(); }

    // Total divisibility of all edges = number of boundary lattice points.
    std::int64_t boundary_points() const;

    // Twice the enclosed area, by the shoelace sum. Zero for degenerates.
    std::int64_t doubled_area() const;

    // Vertices of the canonical walk, starting at (0,0) with the angularly
    // first edge. Size = edge_count() (empty for a point).
    std::vector<LatticeVector> vertices() const;

    // All enclosed lattice points (boundary included) of the canonical walk.
    std::vector<LatticeVector> enclosed_points() const;

    friend bool operator==(const LatticePolygon& a, const LatticePolygon& b) {
        return a.edges_ == b.edges_;
    }
    friend bool operator!=(const LatticePolygon& a, const LatticePolygon& b) {
        return !(a == b);
    }
    // Lexicographic on the canonical edge list; the deterministic tie-break
    // order for optimizer witnesses.
    friend bool operator<(const LatticePolygon& a, const LatticePolygon& b);

    std::string str() const;

private:
    std::vector<LatticeVector> edges_;
};

// Number of lattice points enclosed by the polygon, boundary included.
// Computed by direct enumeration, not by Pick's formula, so that
// picks_check below is a genuine identity test.
std::int64_t lattice_count(const LatticePolygon& p);

// Verifies 2*Area = 2*L - m - 2 exactly (area by shoelace, L by
// enumeration, m = boundary lattice points). Degenerate input rejected.
bool picks_check(const LatticePolygon& p);

// Convex hull boundary of the enclosed lattice points with the given corner
// removed. Corners are indexed by canonical-walk vertex; the result may
// degenerate to a 2-gon or a point. The enclosed count drops by exactly 1.
LatticePolygon round_corner(const LatticePolygon& p, std::size_t corner);

std::size_t hash_value(const LatticePolygon& p);

}  // namespace ech

template <>
struct std::hash<ech::LatticePolygon> {
    std::size_t operator()(const ech::LatticePolygon& p) const {
        return ech::hash_value(p);
    }
};
