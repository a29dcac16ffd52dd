#include <ech/capacities.hpp>
#include <ech/serialization.hpp>

#include <doctest.h>

#include <random>

using namespace ech;

namespace {

RationalPolygon axis_triangle(std::int64_t a, std::int64_t b) {
    return RationalPolygon::from_vertices(
        {RationalPoint{Rational(0), Rational(0)}, RationalPoint{Rational(a), Rational(0)},
         RationalPoint{Rational(0), Rational(b)}});
}

RationalPolygon axis_rectangle(std::int64_t a, std::int64_t b) {
    return RationalPolygon::from_vertices(
        {RationalPoint{Rational(0), Rational(0)}, RationalPoint{Rational(a), Rational(0)},
         RationalPoint{Rational(a), Rational(b)}, RationalPoint{Rational(0), Rational(b)}});
}

}  // namespace

TEST_CASE("ellipsoid capacities are the weight sequence") {
    std::vector<Rational> expected{0, 1, 2, 2, 3, 3, 4, 4, 4, 5, 5, 5};
    for (std::int64_t k = 0; k < 12; ++k)
        CHECK(cap_ellipsoid(Rational(1), Rational(2), k) == expected[k]);
    CHECK(cap_ellipsoid(Rational(7, 3), Rational(9), 0) == Rational(0));
    CHECK(cap_ellipsoid(Rational(5), Rational(5), 3) == Rational(10));
}

TEST_CASE("polydisk capacities, including the P(1,1) = E(1,2) coincidence") {
    CHECK(cap_polydisk(Rational(2), Rational(3), 1) == Rational(2));
    CHECK(cap_polydisk(Rational(7, 2), Rational(1, 3), 0) == Rational(0));
    for (std::int64_t k = 0; k <= 200; ++k)
        CHECK(cap_polydisk(Rational(1), Rational(1), k) ==
              cap_ellipsoid(Rational(1), Rational(2), k));
}

TEST_CASE("toric capacities reproduce the closed forms on axis regions") {
    for (std::int64_t a = 1; a <= 2; ++a) {
        for (std::int64_t b = 1; b <= 2; ++b) {
            for (std::int64_t k = 0; k <= 10; ++k) {
                CHECK(cap_toric(axis_triangle(a, b), k).value ==
                      cap_ellipsoid(Rational(a), Rational(b), k));
                CHECK(cap_toric(axis_rectangle(a, b), k).value ==
                      cap_polydisk(Rational(a), Rational(b), k));
            }
        }
    }
    for (std::int64_t k = 0; k <= 6; ++k)
        CHECK(cap_toric(axis_triangle(3, 3), k).value ==
              cap_ellipsoid(Rational(3), Rational(3), k));
}

TEST_CASE("k = 0 always returns zero with a point witness") {
    auto r = cap_toric(axis_triangle(2, 3), 0);
    CHECK(r.value == Rational(0));
    CHECK(r.witness.is_point());
    CHECK_THROWS_AS(cap_toric(axis_triangle(1, 1), -1), std::invalid_argument);
}

TEST_CASE("disjoint unions convolve with max-plus") {
    auto b1 = capacity_sequence(ToricDomain::ball(Rational(1)), 5);
    CHECK(cap_disjoint_union({b1}, 3) == b1.values[3]);
    CHECK(cap_disjoint_union({b1, b1}, 1) == Rational(1));
    CHECK(cap_disjoint_union({b1, b1}, 2) == Rational(2));
    CHECK_THROWS_AS(cap_disjoint_union({b1, b1}, 5), std::invalid_argument);

    // The zero sequence is an identity for the convolution.
    CapacitySequence zero;
    zero.values.assign(5, Rational(0));
    for (std::int64_t k = 0; k <= 4; ++k)
        CHECK(cap_disjoint_union({b1, zero}, k) == b1.values[k]);
}

TEST_CASE("volume estimates settle near the true volume") {
    auto est = volume_estimate(ToricDomain::ellipsoid(Rational(1), Rational(2)), 10000);
    CHECK(std::abs(est.estimate - 1.0) <= 0.05);

    double prev = 0;
    for (std::int64_t k : {100, 1000, 10000}) {
        auto e = volume_estimate(ToricDomain::ball(Rational(1)), k);
        CHECK(e.estimate >= prev);
        prev = e.estimate;
    }
    CHECK(std::abs(prev - 0.5) <= 0.05);

    auto poly = volume_estimate(ToricDomain::polydisk(Rational(1), Rational(1)), 10000);
    CHECK(std::abs(poly.estimate - 1.0) <= 0.05);
    CHECK_THROWS_AS(volume_estimate(ToricDomain::ball(Rational(1)), 0),
                    std::invalid_argument);
}

TEST_CASE("scaling a domain scales its capacities") {
    auto e12 = ToricDomain::ellipsoid(Rational(1), Rational(2));
    CHECK(scale_domain(e12, Rational(1)).str() == e12.str());
    auto tripled = scale_domain(e12, Rational(3));
    CHECK(cap_ellipsoid(tripled.a(), tripled.b(), 5) == Rational(9));

    auto rect = ToricDomain::general(axis_rectangle(1, 2));
    auto doubled = scale_domain(rect, Rational(2));
    for (std::int64_t k = 0; k <= 6; ++k)
        CHECK(cap_toric(doubled.omega(), k).value ==
              Rational(2) * cap_toric(rect.omega(), k).value);

    CHECK_THROWS_AS(scale_domain(e12, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(scale_domain(e12, Rational(-1)), std::invalid_argument);
}

TEST_CASE("capacity sequences are monotone and conformal") {
    std::mt19937 rng(59);
    std::uniform_int_distribution<std::int64_t> num(1, 8), den(1, 4);
    for (int i = 0; i < 10; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng)), r(num(rng), den(rng));
        auto domain = i % 2 ? ToricDomain::ellipsoid(a, b) : ToricDomain::polydisk(a, b);
        auto seq = capacity_sequence(domain, 31);
        CHECK(seq.values[0] == Rational(0));
        for (std::size_t k = 0; k + 1 < seq.values.size(); ++k)
            CHECK(seq.values[k] <= seq.values[k + 1]);
        auto scaled = capacity_sequence(scale_domain(domain, r), 31);
        for (std::size_t k = 0; k < seq.values.size(); ++k)
            CHECK(scaled.values[k] == seq.values[k] * r);
    }
    // A union is monotone too.
    auto u = capacity_sequence(
        ToricDomain::disjoint_union({ToricDomain::ball(Rational(1)),
                                     ToricDomain::ellipsoid(Rational(1), Rational(2))}),
        20);
    for (std::size_t k = 0; k + 1 < u.values.size(); ++k)
        CHECK(u.values[k] <= u.values[k + 1]);
}

TEST_CASE("capacities are monotone under region inclusion") {
    // Pentagon inside its bounding square.
    auto pentagon = RationalPolygon::from_vertices(
        {RationalPoint{Rational(0), Rational(0)}, RationalPoint{Rational(2), Rational(0)},
         RationalPoint{Rational(2), Rational(1)}, RationalPoint{Rational(1), Rational(2)},
         RationalPoint{Rational(0), Rational(2)}});
    auto square = axis_rectangle(2, 2);
    for (std::int64_t k = 0; k <= 8; ++k)
        CHECK(cap_toric(pentagon, k).value <= cap_toric(square, k).value);
}

TEST_CASE("domain JSON round trips") {
    auto u = ToricDomain::disjoint_union(
        {ToricDomain::ellipsoid(Rational(1), Rational(2)),
         ToricDomain::general(axis_rectangle(1, 1))});
    auto j = to_json(u);
    auto back = domain_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(parse_domain_spec("E(1,2)").str() == "E(1,2)");
    CHECK(parse_domain_spec("B(3/2)").str() == "B(3/2)");
    CHECK(parse_domain_spec("P(1,1)").volume() == Rational(1));
    CHECK_THROWS_AS(parse_domain_spec("Q(1)"), std::invalid_argument);
}
