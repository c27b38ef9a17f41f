#include "flexrig/unit_curve.hpp"

namespace flexrig {

UnitCurve halfangle_unit(const Rational& a) {
    if (a.sgn() <= 0) throw std::invalid_argument("half-angle scale must be positive");
    Rational a2 = a * a;
    Poly t2 = Poly::t() * Poly::t();
    Poly den = t2 + Poly(a2);
    RatFunc x(t2 - Poly(a2), den);
    RatFunc y(Poly::monomial(Rational(-2) * a, 1), den);
    return UnitCurve{x, y, a};
}

UnitCurve coupled_unit(const UnitCurve& z, const Rational& L) {
    if (L.abs().is_one())
        throw DegenerateCoupling("coupling constant with |L| = 1 collapses the curve");
    // z' = (L*z - 1)/(L - z) evaluated with complex arithmetic on coordinates.
    Point2 zp = z.point();
    Point2 num = L * zp - Point2::constant(Rational(1), Rational(0));
    Point2 den = Point2::constant(L, Rational(0)) - zp;
    RatFunc den_norm2 = den.norm2();
    Point2 prod = cmul(num, den.conj());
    Rational speed;
    if (L.is_zero()) {
        speed = z.speed;
    } else {
        speed = (z.speed * (L + Rational(1)) / (L - Rational(1))).abs();
    }
    return UnitCurve{prod.x / den_norm2, prod.y / den_norm2, speed};
}

} // namespace flexrig
