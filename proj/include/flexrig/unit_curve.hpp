#pragma once

#include "flexrig/point.hpp"

namespace flexrig {

/// Rational curve on the unit circle: x(t)^2 + y(t)^2 = 1 identically.
/// `speed` records the half-angle scale |a| of the underlying parametrization.
struct UnitCurve {
    RatFunc x, y;
    Rational speed;

    Point2 point() const { return {x, y}; }
};

/// The half-angle unit curve z_a(t) = ((t^2 - a^2)/(t^2 + a^2), -2at/(t^2 + a^2)).
/// Requires a > 0.
UnitCurve halfangle_unit(const Rational& a);

/// The coupled rotation z' = (L*z - 1)/(L - z) in complex form.
///
/// The pair (z, z') satisfies 1 - L*z + L*z' - z*z' = 0 identically: four
/// planar vectors of constant lengths (1, |L|, |L|, 1) that close up into an
/// antiparallelogram four-bar for every parameter value. Throws
/// DegenerateCoupling when |L| = 1, where z' collapses to a constant.
UnitCurve coupled_unit(const UnitCurve& z, const Rational& L);

} // namespace flexrig
