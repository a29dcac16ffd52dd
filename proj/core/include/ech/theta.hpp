// Rotation angles "rational plus or minus an infinitesimal".
//
// All index formulas in scope take floors or ceilings of integer multiples
// of an irrational angle. Representing the angle as base +/- epsilon makes
// each of those finitely many floors well-defined and exact, without any
// symbolic algebraic numbers.
#pragma once

#include <ech/rational.hpp>

#include <stdexcept>
#include <string>

namespace ech {

enum class Side { exact, plus, minus };

struct Theta {
    Rational base;
    Side side = Side::exact;

    Theta() = default;
    Theta(Rational b, Side s) : base(std::move(b)), side(s) {}

    // base with the side flipped: -(base + eps) = -base - eps.
    Theta reflect() const {
        return Theta(-base, side == Side::plus    ? Side::minus
                            : side == Side::minus ? Side::plus
                                                  : Side::exact);
    }

    // 1/(base + eps) = 1/base - eps' for base > 0, so the side flips.
    Theta invert() const {
        if (base.is_zero()) throw std::invalid_argument("Theta: cannot invert 0");
        Side s = side;
        if (base.is_positive()) {
            s = side == Side::plus ? Side::minus : side == Side::minus ? Side::plus : Side::exact;
        }
        return Theta(Rational(1) / base, s);
    }

    // True when no floor of k*theta for 1 <= k <= m is ambiguous.
    bool generic_up_to(std::int64_t m) const {
        if (side != Side::exact) return true;
        Int q = base.denominator();
        return q > m;
    }

    friend bool operator==(const Theta& a, const Theta& b) {
        return a.base == b.base && a.side == b.side;
    }

    std::string str() const {
        return base.str() + (side == Side::plus ? "+" : side == Side::minus ? "-" : "");
    }

    // "3/5+", "2-", "1/2" (exact).
    static Theta parse(const std::string& text) {
        if (text.empty()) throw std::invalid_argument("Theta: empty string");
        Side s = Side::exact;
        std::string body = text;
        if (text.back() == '+') { s = Side::plus; body.pop_back(); }
        else if (text.back() == '-' && text.size() > 1) { s = Side::minus; body.pop_back(); }
        return Theta(Rational::parse(body), s);
    }
};

// floor(k * theta), treating the infinitesimal exactly. When k*base lands on
// an integer n: n + eps floors to n, n - eps floors to n-1, exact stays n.
inline Int floor_mul(const Theta& t, std::int64_t k) {
    if (k <= 0) throw std::invalid_argument("floor_mul: k must be positive");
    Rational kt = t.base * Rational(k);
    if (kt.is_integer() && t.side == Side::minus) return kt.floor() - 1;
    return kt.floor();
}

// ceil(k * theta); n + eps ceils to n+1, n - eps ceils to n.
inline Int ceil_mul(const Theta& t, std::int64_t k) {
    if (k <= 0) throw std::invalid_argument("ceil_mul: k must be positive");
    Rational kt = t.base * Rational(k);
    if (kt.is_integer() && t.side == Side::plus) return kt.ceil() + 1;
    return kt.ceil();
}

}  // namespace ech
