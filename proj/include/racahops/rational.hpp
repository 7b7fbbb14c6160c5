#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "racahops/errors.hpp"

namespace racahops {

/// Exact arbitrary-precision rational, always in lowest terms with positive
/// denominator. The only scalar type used anywhere in the library.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(long n, long d);
    explicit Rational(mpq_class q);

    /// Parse "p/q" or "p"; sign on the numerator only.
    static Rational parse(const std::string& s);

    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// True iff the value is an integer in [lo, hi].
    bool is_integer_in(long lo, long hi) const;

    Rational numerator() const { return Rational(mpq_class(q_.get_num())); }
    Rational denominator() const { return Rational(mpq_class(q_.get_den())); }

    /// Integer value; valid only when is_integer() and it fits in long.
    long to_long() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; assert_canonical(); return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; assert_canonical(); return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; assert_canonical(); return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    // lowest terms, positive denominator; checked after arithmetic in debug builds
    void assert_canonical() const;
    mpq_class q_;
};

} // namespace racahops
