#include <ech/rational_polygon.hpp>

#include <algorithm>
#include <stdexcept>

namespace ech {

namespace {

Rational cross_r(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

RationalPolygon RationalPolygon::from_vertices(std::vector<RationalPoint> points) {
    if (points.empty())
        throw std::invalid_argument("RationalPolygon: no vertices");
    std::sort(points.begin(), points.end(), [](const RationalPoint& a, const RationalPoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());

    RationalPolygon poly;
    if (points.size() <= 2) {
        poly.vertices_ = std::move(points);
        return poly;
    }
    auto build = [&](bool lower) {
        std::vector<RationalPoint> chain;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const RationalPoint& q = lower ? points[i] : points[points.size() - 1 - i];
            while (chain.size() >= 2 &&
                   !cross_r(chain[chain.size() - 2], chain.back(), q).is_positive())
                chain.pop_back();
            chain.push_back(q);
        }
        return chain;
    };
    auto lower = build(true), upper = build(false);
    poly.vertices_.assign(lower.begin(), lower.end() - 1);
    poly.vertices_.insert(poly.vertices_.end(), upper.begin(), upper.end() - 1);
    if (poly.vertices_.size() == 2 || poly.vertices_.size() == 1) return poly;
    return poly;
}

RationalPolygon RationalPolygon::translated(const Rational& dx, const Rational& dy) const {
    RationalPolygon p = *this;
    for (auto& v : p.vertices_) {
        v.x += dx;
        v.y += dy;
    }
    return p;
}

RationalPolygon RationalPolygon::scaled(const Rational& r) const {
    if (!r.is_positive())
        throw std::invalid_argument("RationalPolygon: scale factor must be positive");
    RationalPolygon p = *this;
    for (auto& v : p.vertices_) {
        v.x *= r;
        v.y *= r;
    }
    return p;
}

Rational RationalPolygon::area() const {
    if (is_degenerate()) return Rational(0);
    Rational twice(0);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& a = vertices_[i];
        const auto& b = vertices_[(i + 1) % vertices_.size()];
        twice += a.x * b.y - a.y * b.x;
    }
    return twice / Rational(2);
}

RationalPoint RationalPolygon::centroid() const {
    if (is_degenerate())
        throw std::invalid_argument("RationalPolygon: centroid of degenerate polygon");
    Rational cx(0), cy(0), twice(0);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& a = vertices_[i];
        const auto& b = vertices_[(i + 1) % vertices_.size()];
        Rational w = a.x * b.y - a.y * b.x;
        twice += w;
        cx += (a.x + b.x) * w;
        cy += (a.y + b.y) * w;
    }
    Rational scale = Rational(1) / (Rational(3) * twice);
    return RationalPoint{cx * scale, cy * scale};
}

bool RationalPolygon::contains_origin_interior() const {
    if (is_degenerate()) return false;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& a = vertices_[i];
        const auto& b = vertices_[(i + 1) % vertices_.size()];
        // Origin strictly left of edge a->b: cross(b - a, -a) > 0.
        Rational c = (b.x - a.x) * (-a.y) - (b.y - a.y) * (-a.x);
        if (!c.is_positive()) return false;
    }
    return true;
}

Rational RationalPolygon::inradius_lower_bound() const {
    if (!contains_origin_interior())
        throw std::invalid_argument("RationalPolygon: origin not interior");
    Rational best(0);
    bool first = true;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& a = vertices_[i];
        const auto& b = vertices_[(i + 1) % vertices_.size()];
        // Distance origin-to-line = cross(a,b)/|b-a|; |b-a| <= |dx|+|dy|.
        Rational num = a.x * b.y - a.y * b.x;
        Rational den = (b.x - a.x).abs() + (b.y - a.y).abs();
        Rational bound = num / den;
        if (first || bound < best) {
            best = bound;
            first = false;
        }
    }
    return best;
}

Rational dual_norm(const RationalPolygon& omega_prime, LatticeVector v) {
    if (!omega_prime.contains_origin_interior())
        throw std::invalid_argument("dual_norm: origin not interior to Omega'");
    Rational best;
    bool first = true;
    for (const auto& w : omega_prime.vertices()) {
        Rational val = w.x * Rational(v.x) + w.y * Rational(v.y);
        if (first || val > best) {
            best = val;
            first = false;
        }
    }
    return best;
}

Rational omega_length(const RationalPolygon& omega, const LatticePolygon& path,
                      const Rational& dx, const Rational& dy) {
    RationalPolygon prime = omega.translated(dx, dy);
    if (!prime.contains_origin_interior())
        throw std::invalid_argument("omega_length: translate does not contain origin");
    Rational total(0);
    for (const auto& e : path.edges()) total += dual_norm(prime, e);
    return total;
}

ScaledSupport ScaledSupport::of(const RationalPolygon& omega_prime) {
    if (!omega_prime.contains_origin_interior())
        throw std::invalid_argument("ScaledSupport: origin not interior to Omega'");
    Int d = 1;
    for (const auto& v : omega_prime.vertices()) {
        d = boost::multiprecision::lcm(d, v.x.denominator());
        d = boost::multiprecision::lcm(d, v.y.denominator());
    }
    ScaledSupport s;
    s.denom = d;
    for (const auto& v : omega_prime.vertices())
        s.vertices.emplace_back(v.x.numerator() * (d / v.x.denominator()),
                                v.y.numerator() * (d / v.y.denominator()));
    return s;
}

Int ScaledSupport::scaled_norm(LatticeVector v) const {
    Int best;
    bool first = true;
    for (const auto& [wx, wy] : vertices) {
        Int val = wx * v.x + wy * v.y;
        if (first || val > best) {
            best = val;
            first = false;
        }
    }
    return best;
}

}  // namespace ech
