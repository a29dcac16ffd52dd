#include <ech/weights.hpp>

#include <stdexcept>

namespace ech {

WeightSequence::WeightSequence(Rational a, Rational b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (!a_.is_positive() || !b_.is_positive())
        throw std::invalid_argument("weight_sequence: a and b must be positive");
    denom_ = boost::multiprecision::lcm(a_.denominator(), b_.denominator());
    scaled_a_ = a_.numerator() * (denom_ / a_.denominator());
    scaled_b_ = b_.numerator() * (denom_ / b_.denominator());
    frontier_.push(Node{Int(0), 0, 0});
}

// Enumerates the grid {(m,n)} in value order with a min-heap. Popping (m,n)
// pushes (m+1,n), and (m,n+1) when m == 0; every pair enters exactly once.
void WeightSequence::ensure(std::size_t count) const {
    std::lock_guard<std::mutex> lock(mutex_);
    while (values_.size() < count) {
        Node top = frontier_.top();
        frontier_.pop();
        values_.push_back(Rational(top.value, denom_));
        frontier_.push(Node{top.value + scaled_a_, top.m + 1, top.n});
        if (top.m == 0)
            frontier_.push(Node{top.value + scaled_b_, 0, top.n + 1});
    }
}

Rational WeightSequence::at(std::size_t k) const {
    ensure(k + 1);
    std::lock_guard<std::mutex> lock(mutex_);
    return values_[k];
}

std::vector<Rational> WeightSequence::prefix(std::size_t count) const {
    ensure(count);
    std::lock_guard<std::mutex> lock(mutex_);
    return std::vector<Rational>(values_.begin(), values_.begin() + count);
}

std::vector<Rational> weight_sequence(const Rational& a, const Rational& b,
                                      std::size_t count) {
    if (count < 1) throw std::invalid_argument("weight_sequence: count must be >= 1");
    return WeightSequence(a, b).prefix(count);
}

DominanceResult sequence_dominates(const Rational& a, const Rational& b,
                                   const Rational& c, const Rational& d,
                                   std::int64_t k_max) {
    if (k_max < 0) throw std::invalid_argument("sequence_dominates: k_max must be >= 0");
    WeightSequence lhs(a, b), rhs(c, d);
    auto lv = lhs.prefix(static_cast<std::size_t>(k_max) + 1);
    auto rv = rhs.prefix(static_cast<std::size_t>(k_max) + 1);
    for (std::int64_t k = 0; k <= k_max; ++k) {
        if (lv[k] > rv[k]) {
            DominanceResult r;
            r.dominates = false;
            r.failing_index = k;
            r.lhs = lv[k];
            r.rhs = rv[k];
            return r;
        }
    }
    return DominanceResult{};
}

}  // namespace ech
