// Exact arithmetic for sums of square roots of integers.
//
// A value is stored as sum over squarefree s of c_s * sqrt(s) with rational
// coefficients. Square roots of distinct squarefree integers are linearly
// independent over Q, so the representation is canonical: a value is zero
// iff it has no terms, and comparisons of nonzero differences terminate by
// interval refinement at increasing precision. This is the certified
// comparator behind every Euclidean length ranking in the library.
#pragma once

#include <ech/lattice.hpp>
#include <ech/rational.hpp>

#include <map>

namespace ech {

class SqrtSum {
public:
    SqrtSum() = default;
    SqrtSum(const Rational& r) { add_term(1, r); }  // NOLINT: implicit by design

    // sqrt(n) for n >= 0, decomposed as d*sqrt(s) with s squarefree.
    static SqrtSum sqrt_of(std::int64_t n);

    SqrtSum& operator+=(const SqrtSum& o);
    SqrtSum& operator-=(const SqrtSum& o);
    SqrtSum& operator*=(const Rational& r);
    friend SqrtSum operator+(SqrtSum a, const SqrtSum& b) { return a += b; }
    friend SqrtSum operator-(SqrtSum a, const SqrtSum& b) { return a -= b; }
    friend SqrtSum operator*(SqrtSum a, const Rational& r) { return a *= r; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    // The s = 1 coefficient when the value is rational.
    Rational rational_part() const;

    // Exact sign: -1, 0, or +1.
    int sign() const;

    friend bool operator==(const SqrtSum& a, const SqrtSum& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SqrtSum& a, const SqrtSum& b) { return !(a == b); }
    friend bool operator<(const SqrtSum& a, const SqrtSum& b) {
        return (a - b).sign() < 0;
    }
    friend bool operator<=(const SqrtSum& a, const SqrtSum& b) {
        return (a - b).sign() <= 0;
    }
    friend bool operator>(const SqrtSum& a, const SqrtSum& b) { return b < a; }
    friend bool operator>=(const SqrtSum& a, const SqrtSum& b) { return b <= a; }

    double to_double() const;
    std::string str() const;

    const std::map<std::int64_t, Rational>& terms() const { return terms_; }

private:
    void add_term(std::int64_t squarefree, const Rational& c);
    std::map<std::int64_t, Rational> terms_;
};

// Sum of the Euclidean lengths of all edge vectors, exact.
SqrtSum euclidean_length(const LatticePolygon& p);

}  // namespace ech
