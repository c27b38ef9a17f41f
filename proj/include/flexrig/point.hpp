#pragma once

#include "flexrig/ratfunc.hpp"

namespace flexrig {

/// Point of Q^2 with constant rational coordinates.
struct Vec2 {
    Rational x, y;

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    Rational norm2() const { return x * x + y * y; }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

/// Point of Q^3 with constant rational coordinates.
struct Vec3 {
    Rational x, y, z;

    friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(const Rational& s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
    bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
    friend bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
};

/// Planar point whose coordinates are rational functions of one parameter t.
/// Doubles as a complex number x + i*y, which is how rotations compose.
struct Point2 {
    RatFunc x, y;

    static Point2 constant(const Rational& cx, const Rational& cy) {
        return {RatFunc(cx), RatFunc(cy)};
    }
    static Point2 from(const Vec2& v) { return constant(v.x, v.y); }

    friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
    Point2 operator-() const { return {-x, -y}; }
    friend Point2 operator*(const Rational& s, const Point2& p) {
        RatFunc f{s};
        return {f * p.x, f * p.y};
    }
    friend Point2 operator*(const RatFunc& f, const Point2& p) { return {f * p.x, f * p.y}; }

    /// Complex multiplication (a+ib)(c+id).
    friend Point2 cmul(const Point2& a, const Point2& b) {
        return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
    }
    Point2 conj() const { return {x, -y}; }

    RatFunc norm2() const { return x * x + y * y; }
    bool is_zero() const { return x.is_zero() && y.is_zero(); }

    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
};

} // namespace flexrig
