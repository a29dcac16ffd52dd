// The combinatorial ECH chain complex of T^3: labeled-polygon generators,
// grading, the corner-rounding differential, the degree -2 map U_theta, the
// length spectrum, and truncated homology over Z/2.
#pragma once

#include <ech/isoperimetric.hpp>
#include <ech/lattice.hpp>
#include <ech/rational.hpp>
#include <ech/sqrt_sum.hpp>
#include <ech/theta.hpp>

#include <set>
#include <string>
#include <vector>

namespace ech::t3 {

enum class Label : char { e = 'e', h = 'h' };

// A generator: a convex lattice polygon up to translation with one label
// per (merged) edge. An edge of divisibility d labeled h stands for the
// hyperbolic orbit in that direction together with the elliptic orbit with
// multiplicity d-1.
struct Generator {
    LatticePolygon polygon;
    std::vector<Label> labels;  // aligned with polygon.edges()

    Generator() = default;
    Generator(LatticePolygon poly, std::vector<Label> labs);

    std::int64_t h_count() const;

    friend bool operator==(const Generator& a, const Generator& b) {
        return a.polygon == b.polygon && a.labels == b.labels;
    }
    friend bool operator<(const Generator& a, const Generator& b) {
        if (a.polygon != b.polygon) return a.polygon < b.polygon;
        return a.labels < b.labels;
    }
    std::string str() const;
};

// GF(2) chain: a set of generators; addition is symmetric difference.
class ChainVector {
public:
    void toggle(const Generator& g);
    ChainVector& operator+=(const ChainVector& o);
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::set<Generator>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

private:
    std::set<Generator> terms_;
};

// |Lambda| = 2(L(Lambda) - 1) - h(Lambda).
std::int64_t grading(const Generator& g);

// Sum over corners of rounding with "locally losing one h": at least one
// edge adjacent to the corner must be h; with exactly one adjacent h every
// created-or-shortened edge of the result is e; with two, exactly one
// created-or-shortened edge is h (summed over the choices). Unaffected
// edges keep their labels. Terms whose required h has nowhere to go vanish.
ChainVector differential(const Generator& g);

// A generic direction for U_theta: a primitive integer vector plus a side
// that perturbs its angle infinitesimally, standing in for a direction with
// irrational slope.
struct Direction {
    LatticeVector ray;
    Side side = Side::plus;
};

// Rounds the distinguished corner (the vertex the supporting line in the
// given direction touches) conserving the h labels across the two sides of
// the new distinguished corner. A point maps to zero.
ChainVector u_theta(const Generator& g, const Direction& dir);

// delta^2 = 0 over every generator of Euclidean length <= cutoff.
bool delta_squared_check(const Rational& length_cutoff);

// c_k(T^3): minimal Euclidean length over closed convex lattice polygons
// with k+1 lattice points; exact value with a minimizing witness.
EuclideanMinimum t3_spectrum(std::int64_t k, int threads = 1);

struct HomologyRank {
    std::int64_t rank = 0;           // at the largest cutoff
    bool stabilized = false;         // last three cutoffs agree
    std::vector<std::int64_t> by_cutoff;
};

// Rank of ker/im of the combinatorial differential in the given degree,
// restricted to generators within each length cutoff (the restriction is a
// subcomplex since rounding shortens).
HomologyRank homology_rank(std::int64_t degree, const std::vector<Rational>& cutoffs);

// All generators of a given grading within a Euclidean length cutoff.
std::vector<Generator> generators_in_degree(std::int64_t degree,
                                            const Rational& cutoff);

}  // namespace ech::t3
