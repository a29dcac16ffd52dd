// Weight sequences N(a,b): all values m*a + n*b with m,n >= 0, as a
// nondecreasing multiset indexed from 0. These are exactly the ECH
// capacities of the ellipsoid E(a,b).
#pragma once

#include <ech/rational.hpp>

#include <cstddef>
#include <mutex>
#include <optional>
#include <queue>
#include <vector>

namespace ech {

// Lazily extended prefix of N(a,b). Values are immutable once produced;
// the growing cache is guarded so concurrent reads are safe.
class WeightSequence {
public:
    WeightSequence(Rational a, Rational b);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    // N(a,b)_k, extending the cached prefix as needed.
    Rational at(std::size_t k) const;

    // First `count` values.
    std::vector<Rational> prefix(std::size_t count) const;

private:
    struct Node {
        Int value;
        std::int64_t m, n;
        bool operator>(const Node& o) const {
            if (value != o.value) return value > o.value;
            if (m != o.m) return m > o.m;
            return n > o.n;
        }
    };

    void ensure(std::size_t count) const;

    Rational a_, b_;
    Int scaled_a_, scaled_b_;  // a*D, b*D for the common denominator D
    Int denom_;
    mutable std::mutex mutex_;
    mutable std::vector<Rational> values_;
    mutable std::priority_queue<Node, std::vector<Node>, std::greater<Node>> frontier_;
};

// First `count` values of N(a,b). Exact; rejects nonpositive a, b.
std::vector<Rational> weight_sequence(const Rational& a, const Rational& b,
                                      std::size_t count);

// Outcome of checking N(a,b)_k <= N(c,d)_k for 0 <= k <= k_max.
struct DominanceResult {
    bool dominates = true;
    std::int64_t failing_index = -1;  // first k with N(a,b)_k > N(c,d)_k
    Rational lhs, rhs;                // the witnessing values when it fails
};

DominanceResult sequence_dominates(const Rational& a, const Rational& b,
                                   const Rational& c, const Rational& d,
                                   std::int64_t k_max);

}  // namespace ech
