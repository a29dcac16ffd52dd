#include <ech/sqrt_sum.hpp>

#include <cmath>
#include <stdexcept>

namespace ech {

namespace {

// n = d^2 * s with s squarefree; returns (d, s). Trial division; the inputs
// here are squared edge norms, which stay far below 2^40.
std::pair<std::int64_t, std::int64_t> squarefree_decompose(std::int64_t n) {
    std::int64_t d = 1, s = 1;
    for (std::int64_t f = 2; f * f <= n; ++f) {
        if (n % f) continue;
        int mult = 0;
        while (n % f == 0) {
            n /= f;
            ++mult;
        }
        for (int i = 0; i < mult / 2; ++i) d *= f;
        if (mult % 2) s *= f;
    }
    s *= n;
    return {d, s};
}

// floor(sqrt(s) * 2^bits) via integer square root.
Int scaled_isqrt(std::int64_t s, unsigned bits) {
    Int n = Int(s) << (2 * bits);
    return boost::multiprecision::sqrt(n);
}

}  // namespace

SqrtSum SqrtSum::sqrt_of(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("SqrtSum: sqrt of negative");
    if (n == 0) return SqrtSum();
    auto [d, s] = squarefree_decompose(n);
    SqrtSum r;
    r.add_term(s, Rational(d));
    return r;
}

void SqrtSum::add_term(std::int64_t squarefree, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(squarefree);
    if (it == terms_.end()) {
        terms_.emplace(squarefree, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SqrtSum& SqrtSum::operator+=(const SqrtSum& o) {
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
}

SqrtSum& SqrtSum::operator-=(const SqrtSum& o) {
    for (const auto& [s, c] : o.terms_) add_term(s, -c);
    return *this;
}

SqrtSum& SqrtSum::operator*=(const Rational& r) {
    if (r.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, c] : terms_) c *= r;
    return *this;
}

bool SqrtSum::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational SqrtSum::rational_part() const {
    if (!is_rational()) throw std::invalid_argument("SqrtSum: value is irrational");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int SqrtSum::sign() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1) return terms_.begin()->second.is_positive() ? 1 : -1;
    // Nonzero by canonicity (independence of sqrt of distinct squarefree
    // integers), so refinement terminates.
    for (unsigned bits = 16;; bits *= 2) {
        Rational lo(0), hi(0);
        Rational scale = Rational(1) / Rational(Int(1) << bits);
        for (const auto& [s, c] : terms_) {
            Int a = scaled_isqrt(s, bits);
            Rational r_lo = Rational(a) * scale;
            Rational r_hi = Rational(a + 1) * scale;
            if (c.is_positive()) {
                lo += c * r_lo;
                hi += c * r_hi;
            } else {
                lo += c * r_hi;
                hi += c * r_lo;
            }
        }
        if (lo.is_positive()) return 1;
        if (hi.is_negative()) return -1;
        if (bits > 1u << 14)
            throw std::logic_error("SqrtSum::sign: refinement failed to separate");
    }
}

double SqrtSum::to_double() const {
    double v = 0;
    for (const auto& [s, c] : terms_)
        v += c.to_double() * std::sqrt(static_cast<double>(s));
    return v;
}

std::string SqrtSum::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        if (s == 1) {
            out += c.str();
        } else if (c == Rational(1)) {
            out += "sqrt(" + std::to_string(s) + ")";
        } else {
            out += c.str() + "*sqrt(" + std::to_string(s) + ")";
        }
    }
    return out;
}

SqrtSum euclidean_length(const LatticePolygon& p) {
    SqrtSum total;
    for (const auto& e : p.edges())
        total += SqrtSum::sqrt_of(e.x * e.x + e.y * e.y);
    return total;
}

}  // namespace ech
