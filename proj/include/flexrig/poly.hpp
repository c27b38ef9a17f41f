#pragma once

#include <utility>
#include <vector>

#include "flexrig/rational.hpp"

namespace flexrig {

/// Univariate polynomial over Rational in the parameter t.
///
/// Coefficients are stored ascending by degree with no trailing zeros; the
/// zero polynomial is the empty coefficient list (degree -1).
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);
    explicit Poly(std::vector<Rational> coeffs);

    /// The variable t.
    static Poly t();
    /// c * t^k.
    static Poly monomial(const Rational& c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Coefficient of t^k (zero beyond the degree).
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    /// Leading coefficient; zero polynomial yields 0.
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Poly monic() const;

    Rational eval(const Rational& x) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend Poly operator*(const Poly& p, const Rational& s);
    friend Poly operator*(const Rational& s, const Poly& p) { return p * s; }
    friend Poly operator/(const Poly& p, const Rational& s);

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Exact Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    static Poly gcd(const Poly& a, const Poly& b);

private:
    void trim();
    std::vector<Rational> c_;
};

} // namespace flexrig
