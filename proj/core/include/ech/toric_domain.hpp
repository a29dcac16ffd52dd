// Toric symplectic domains: the ellipsoid E(a,b), the polydisk P(a,b), a
// general convex region Omega, and finite disjoint unions of these.
#pragma once

#include <ech/rational.hpp>
#include <ech/rational_polygon.hpp>

#include <string>
#include <vector>

namespace ech {

class ToricDomain {
public:
    enum class Kind { ellipsoid, polydisk, general, disjoint_union };

    static ToricDomain ellipsoid(Rational a, Rational b);
    static ToricDomain ball(Rational a) { return ellipsoid(a, a); }
    static ToricDomain polydisk(Rational a, Rational b);
    static ToricDomain general(RationalPolygon omega);
    static ToricDomain disjoint_union(std::vector<ToricDomain> parts);

    Kind kind() const { return kind_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const RationalPolygon& omega() const { return omega_; }
    const std::vector<ToricDomain>& parts() const { return parts_; }

    Rational volume() const;

    // The domain with the symplectic form scaled by r > 0; capacities scale
    // by the same factor.
    ToricDomain scaled(const Rational& r) const;

    std::string str() const;

private:
    Kind kind_ = Kind::ellipsoid;
    Rational a_, b_;
    RationalPolygon omega_;
    std::vector<ToricDomain> parts_;
};

ToricDomain scale_domain(const ToricDomain& domain, const Rational& r);

}  // namespace ech
