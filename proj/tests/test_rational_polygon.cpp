#include <ech/rational_polygon.hpp>

#include <doctest.h>

#include <random>

using namespace ech;

namespace {

RationalPolygon square_pm1() {
    return RationalPolygon::from_vertices({RationalPoint{Rational(-1), Rational(-1)},
                                           RationalPoint{Rational(1), Rational(-1)},
                                           RationalPoint{Rational(1), Rational(1)},
                                           RationalPoint{Rational(-1), Rational(1)}});
}

RationalPolygon triangle_listed() {
    return RationalPolygon::from_vertices({RationalPoint{Rational(-1), Rational(-1)},
                                           RationalPoint{Rational(2), Rational(-1)},
                                           RationalPoint{Rational(-1), Rational(2)}});
}

}  // namespace

TEST_CASE("support values at the listed vectors") {
    CHECK(dual_norm(square_pm1(), {1, 0}) == Rational(1));
    CHECK(dual_norm(square_pm1(), {1, 1}) == Rational(2));
    CHECK(dual_norm(triangle_listed(), {0, 1}) == Rational(2));
}

TEST_CASE("the origin must be interior") {
    auto shifted = square_pm1().translated(Rational(5), Rational(0));
    CHECK_THROWS_AS(dual_norm(shifted, {1, 0}), std::invalid_argument);
    auto segment = RationalPolygon::from_vertices(
        {RationalPoint{Rational(-1), Rational(0)}, RationalPoint{Rational(1), Rational(0)}});
    CHECK(segment.is_degenerate());
    CHECK_THROWS_AS(dual_norm(segment, {0, 1}), std::invalid_argument);
}

TEST_CASE("dual norms are positive and positively homogeneous") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<std::int64_t> c(-6, 6), kd(0, 5);
    auto omega = triangle_listed();
    for (int i = 0; i < 500; ++i) {
        LatticeVector v{c(rng), c(rng)};
        if (v.is_zero()) continue;
        Rational n = dual_norm(omega, v);
        CHECK(n.is_positive());
        std::int64_t k = kd(rng);
        CHECK(dual_norm(omega, {k * v.x, k * v.y}) == n * Rational(k));
    }
}

TEST_CASE("path lengths against the square of radius one") {
    auto square = RationalPolygon::from_vertices(
        {RationalPoint{Rational(0), Rational(0)}, RationalPoint{Rational(2), Rational(0)},
         RationalPoint{Rational(2), Rational(2)}, RationalPoint{Rational(0), Rational(2)}});
    auto path = LatticePolygon::from_edges({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    // Centered, every unit edge has dual norm 1.
    CHECK(omega_length(square, path, Rational(-1), Rational(-1)) == Rational(4));
    CHECK(omega_length(square, LatticePolygon(), Rational(-1), Rational(-1)) ==
          Rational(0));
}

TEST_CASE("closed paths measure the same under any admissible translate") {
    std::mt19937 rng(47);
    std::uniform_int_distribution<std::int64_t> c(-4, 4);
    auto omega = RationalPolygon::from_vertices(
        {RationalPoint{Rational(0), Rational(0)}, RationalPoint{Rational(3), Rational(1)},
         RationalPoint{Rational(2), Rational(3)}, RationalPoint{Rational(0), Rational(2)}});
    auto path = LatticePolygon::from_edges({{2, 1}, {-1, 1}, {-1, -2}});
    Rational first = omega_length(omega, path, Rational(-1), Rational(-1));
    CHECK(omega_length(omega, path, Rational(-3, 2), Rational(-3, 2)) == first);
    CHECK(omega_length(omega, path, Rational(-1), Rational(-3, 2)) == first);
    CHECK_THROWS_AS(omega_length(omega, path, Rational(-100), Rational(0)),
                    std::invalid_argument);
}

TEST_CASE("scaled support agrees with the rational norm") {
    auto omega = RationalPolygon::from_vertices(
        {RationalPoint{Rational(-2, 3), Rational(-1, 3)},
         RationalPoint{Rational(4, 3), Rational(-1, 3)},
         RationalPoint{Rational(-2, 3), Rational(2, 3)}});
    auto support = ScaledSupport::of(omega);
    std::mt19937 rng(53);
    std::uniform_int_distribution<std::int64_t> c(-7, 7);
    for (int i = 0; i < 300; ++i) {
        LatticeVector v{c(rng), c(rng)};
        if (v.is_zero()) continue;
        CHECK(support.norm(v) == dual_norm(omega, v));
    }
}

TEST_CASE("centroid sits inside and certifies the inradius bound") {
    auto tri = triangle_listed();
    CHECK(tri.contains_origin_interior());
    CHECK(tri.inradius_lower_bound().is_positive());
    auto c = square_pm1().centroid();
    CHECK(c.x == Rational(0));
    CHECK(c.y == Rational(0));
    CHECK(square_pm1().area() == Rational(4));
}
