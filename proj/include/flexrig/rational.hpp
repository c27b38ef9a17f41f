#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

#include "flexrig/errors.hpp"

namespace flexrig {

/// Arbitrary-precision rational number, always reduced, denominator >= 1.
///
/// Thin value wrapper over GMP's mpq_class that canonicalizes on every
/// construction path, so gcd(|num|, den) == 1 and den > 0 are invariants
/// rather than conventions.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(const mpz_class& n) : q_(n) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    /// Parses "p", "-p" or "p/q" with arbitrary-precision integers.
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sgn() const { return ::sgn(q_); }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    Rational inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return Rational(mpq_class(1 / q_));
    }

    Rational pow(unsigned e) const {
        mpq_class r(1);
        mpq_class base = q_;
        for (unsigned k = e; k > 0; k >>= 1) {
            if (k & 1u) r *= base;
            if (k > 1) base *= base;
        }
        return Rational(r);
    }

    /// Exact square root when the value is the square of a rational.
    std::optional<Rational> sqrt_if_square() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero("rational division by zero");
        return Rational(mpq_class(a.q_ / b.q_));
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    std::string to_string() const;
    double to_double() const { return q_.get_d(); }

private:
    explicit Rational(const mpq_class& q) : q_(q) {}
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace flexrig
