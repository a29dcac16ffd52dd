// Exact rational scalars. Every action, capacity, and angle in the library
// is a Rational; there is no floating-point fast path anywhere in the
// computational core.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace ech {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision fraction, always in lowest terms with positive
// denominator. Backed by boost::multiprecision; this wrapper pins down the
// invariants and the "p/q" wire format used by the CLI and the JSON files.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(std::int64_t n) : v_(n) {}  // NOLINT: implicit by design
    Rational(const Int& n) : v_(n) {}    // NOLINT
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0)
            v_ = boost::multiprecision::cpp_rational(-num, -den);
        else
            v_ = boost::multiprecision::cpp_rational(num, den);
    }
    Rational(std::int64_t num, std::int64_t den)
        : Rational(Int(num), Int(den)) {}

    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    bool is_positive() const { return v_ > 0; }
    bool is_negative() const { return v_ < 0; }

    Rational operator-() const { return Rational(Raw{}, -v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // Floor and ceiling as exact integers (round toward -inf / +inf).
    Int floor() const {
        Int q = numerator() / denominator();
        if (numerator() < 0 && q * denominator() != numerator()) --q;
        return q;
    }
    Int ceil() const { return -Rational(Raw{}, -v_).floor(); }

    Rational abs() const { return v_ < 0 ? -*this : *this; }

    double to_double() const { return v_.convert_to<double>(); }

    // Wire format: "p" for integers, "p/q" otherwise.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    // Accepts "p", "p/q", and plain decimal strings like "1.9" (converted
    // exactly, so 1.9 becomes 19/10).
    static Rational parse(const std::string& text);

private:
    struct Raw {};
    Rational(Raw, boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            Int num(text.substr(0, slash));
            Int den(text.substr(slash + 1));
            return Rational(num, den);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(Int(text));
        std::string whole = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        if (frac.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad digits");
        bool neg = !whole.empty() && whole[0] == '-';
        Int w = whole.empty() || whole == "-" ? Int(0) : Int(whole);
        Int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Int num = w.sign() < 0 || neg ? w * scale - Int(frac.empty() ? "0" : frac)
                                      : w * scale + Int(frac.empty() ? "0" : frac);
        return Rational(num, scale);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
}

inline std::size_t hash_value(const Rational& r) {
    std::size_t h = std::hash<std::string>{}(r.str());
    return h;
}

}  // namespace ech
