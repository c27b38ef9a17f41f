#pragma once

#include <optional>
#include <string>

#include "flexrig/poly.hpp"

namespace flexrig {

/// Rational function of t in canonical form: gcd(num, den) = 1 and the
/// denominator is monic, so equal values have equal representations and
/// operator== is exact value equality.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFunc(int c) : RatFunc(Rational(c)) {}
    RatFunc(const Poly& p) : num_(p), den_(Rational(1)) {}
    RatFunc(Poly num, Poly den);

    static RatFunc t() { return RatFunc(Poly::t()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    /// The constant value when both numerator and denominator have degree 0
    /// (denominator is then exactly 1 by canonicality); empty otherwise.
    std::optional<Rational> constant_value() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// Exact evaluation; throws EvaluationPole where the denominator vanishes.
    Rational eval(const Rational& x) const;

    /// Display form with integer coefficients, e.g. "(3*t^2 - 3)/(t^2 + 1)".
    std::string to_string() const;

private:
    void reduce();
    Poly num_, den_;
};

} // namespace flexrig
