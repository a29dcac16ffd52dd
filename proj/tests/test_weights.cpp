#include <ech/weights.hpp>

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace ech;

namespace {

// Independent oracle: enumerate every m*a + n*b up to a cap and sort.
std::vector<Rational> brute_weights(const Rational& a, const Rational& b,
                                    std::size_t count) {
    // Cap at count*min(a,b): the k-th value never exceeds k*min(a,b) since
    // {0, min, 2*min, ...} are all members.
    Rational cap = Rational(static_cast<std::int64_t>(count)) * std::min(a, b);
    std::vector<Rational> vals;
    for (Rational ma(0); ma <= cap; ma += a)
        for (Rational v = ma; v <= cap; v += b) vals.push_back(v);
    std::sort(vals.begin(), vals.end());
    vals.resize(count);
    return vals;
}

}  // namespace

TEST_CASE("the first terms of N(1,1) and N(1,2)") {
    CHECK(weight_sequence(Rational(1), Rational(1), 6) ==
          std::vector<Rational>{0, 1, 1, 2, 2, 2});
    CHECK(weight_sequence(Rational(1), Rational(2), 12) ==
          std::vector<Rational>{0, 1, 2, 2, 3, 3, 4, 4, 4, 5, 5, 5});
}

TEST_CASE("N(2,3) agrees with direct enumeration") {
    CHECK(weight_sequence(Rational(2), Rational(3), 10) ==
          std::vector<Rational>{0, 2, 3, 4, 5, 6, 6, 7, 8, 8});
    CHECK(weight_sequence(Rational(2), Rational(3), 10) ==
          brute_weights(Rational(2), Rational(3), 10));
}

TEST_CASE("rejects nonpositive inputs") {
    CHECK_THROWS_AS(weight_sequence(Rational(0), Rational(1), 3), std::invalid_argument);
    CHECK_THROWS_AS(weight_sequence(Rational(1), Rational(-2), 3), std::invalid_argument);
    CHECK_THROWS_AS(weight_sequence(Rational(1), Rational(1), 0), std::invalid_argument);
}

TEST_CASE("heap enumeration matches the brute oracle on random rationals") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<std::int64_t> num(1, 12), den(1, 6);
    for (int i = 0; i < 40; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        std::size_t count = 1 + (rng() % 60);
        CHECK(weight_sequence(a, b, count) == brute_weights(a, b, count));
    }
}

TEST_CASE("symmetry and scaling") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<std::int64_t> num(1, 9), den(1, 5);
    for (int i = 0; i < 25; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng)), r(num(rng), den(rng));
        auto ab = weight_sequence(a, b, 40);
        CHECK(ab == weight_sequence(b, a, 40));
        auto scaled = weight_sequence(a * r, b * r, 40);
        for (std::size_t k = 0; k < 40; ++k) CHECK(scaled[k] == ab[k] * r);
    }
}

TEST_CASE("prefix cache is consistent under repeated extension") {
    WeightSequence w(Rational(1), Rational(2));
    CHECK(w.at(3) == Rational(2));
    CHECK(w.prefix(12) == weight_sequence(Rational(1), Rational(2), 12));
    CHECK(w.at(11) == Rational(5));
}

TEST_CASE("sequence dominance and its first failure") {
    CHECK(sequence_dominates(Rational(1), Rational(2), Rational(2), Rational(2), 100)
              .dominates);
    CHECK(sequence_dominates(Rational(1), Rational(1), Rational(1), Rational(1), 50)
              .dominates);
    auto fail = sequence_dominates(Rational(1), Rational(2), Rational(19, 10),
                                   Rational(19, 10), 100);
    CHECK_FALSE(fail.dominates);
    CHECK(fail.failing_index == 2);
    CHECK(fail.lhs == Rational(2));
    CHECK(fail.rhs == Rational(19, 10));
}
