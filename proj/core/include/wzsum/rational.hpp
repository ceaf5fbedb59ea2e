#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "wzsum/errors.hpp"

namespace wzsum {

using Integer = mpz_class;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator. Zero is 0/1. All operations are exact.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(static_cast<signed long>(v)) {}
    Rational(const Integer& v) : q_(v) {}

    Rational(const Integer& num, const Integer& den) : q_(num, den) {
        if (sgn(den) == 0)
            throw DivisionByZeroError("Rational: zero denominator");
        q_.canonicalize();
    }

    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "a/b" or "a" in base 10.
    static Rational from_string(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw InvalidParameterError("Rational: cannot parse '" + text + "'");
        q.canonicalize();
        Rational out;
        out.q_ = std::move(q);
        return out;
    }

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational inverse() const {
        if (is_zero())
            throw DivisionByZeroError("Rational: inverse of zero");
        Rational out;
        out.q_ = 1 / q_;
        return out;
    }

    Rational abs() const {
        Rational out;
        out.q_ = ::abs(q_);
        return out;
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw DivisionByZeroError("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational operator-() const {
        Rational out;
        out.q_ = -q_;
        return out;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// "num/den", or just "num" when the value is an integer.
    std::string to_string() const { return q_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.q_;
    }

private:
    mpq_class q_;
};

/// Integer power with exact rational result; e may be negative.
inline Rational pow(const Rational& base, long e) {
    if (e < 0)
        return pow(base.inverse(), -e);
    Rational out(1);
    Rational b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n != 0) {
        if (n & 1)
            out *= b;
        b *= b;
        n >>= 1;
    }
    return out;
}

inline Integer pow(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

} // namespace wzsum
