#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

namespace pl {

// Exact rational number. Always in lowest terms with positive denominator;
// equality is structural. All arithmetic is exact.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}
    Rational(long num, long den);

    // Wraps an mpq that is already canonical (as all GMP arithmetic results are).
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    // Accepts "p" or "p/q" with integer p and positive integer q.
    static Rational parse(std::string_view text);

    std::string str() const;
    int sign() const { return sgn(v_); }
    const mpq_class& raw() const { return v_; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_{0};
};

}  // namespace pl
