#pragma once

#include <cmath>

namespace alphasec {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(Vec2 o) {
        x += o.x;
        y += o.y;
        return *this;
    }
};

using Point = Vec2;

inline Vec2 operator*(double s, Vec2 v) { return v * s; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 normalized(Vec2 a) {
    double n = norm(a);
    return n > 0.0 ? Vec2{a.x / n, a.y / n} : Vec2{0.0, 0.0};
}
// counterclockwise quarter turn
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

// unsigned angle between two nonzero vectors, in [0, pi]
inline double angle_between(Vec2 a, Vec2 b) { return std::atan2(std::fabs(cross(a, b)), dot(a, b)); }

/// A direction on the circle S^1, stored canonically in [0, 2*pi).
class Angle {
public:
    Angle() = default;
    explicit Angle(double radians) : rad_(canonical(radians)) {}

    double rad() const { return rad_; }
    Vec2 dir() const { return {std::cos(rad_), std::sin(rad_)}; }    // u(theta)
    Vec2 normal() const { return {-std::sin(rad_), std::cos(rad_)}; } // u'(theta), left normal
    Angle opposite() const { return Angle(rad_ + kPi); }

    static double canonical(double radians) {
        double r = std::fmod(radians, kTwoPi);
        if (r < 0.0) r += kTwoPi;
        if (r >= kTwoPi) r = 0.0;
        return r;
    }

private:
    double rad_ = 0.0;
};

// distance on S^1
inline double angular_dist(double a, double b) {
    double d = std::fabs(Angle::canonical(a) - Angle::canonical(b));
    return d > kPi ? kTwoPi - d : d;
}

/// Oriented line identified with a point (theta, t) of the cylinder S^1 x R.
/// The line is directed by u(theta) and passes at signed distance `offset`
/// from the origin; the closed left half-plane is {x : <x, u'(theta)> >= offset}.
struct OrientedLine {
    Angle theta;
    double offset = 0.0;

    Vec2 dir() const { return theta.dir(); }
    Vec2 normal() const { return theta.normal(); }
    // positive on the left (interior of the half-plane), negative on the right
    double signed_dist(Point p) const { return dot(p, normal()) - offset; }
    Point at(double s) const { return s * dir() + offset * normal(); }
    double param_of(Point p) const { return dot(p, dir()); }
    OrientedLine reversed() const { return {theta.opposite(), -offset}; }

    static OrientedLine through(Point p, Angle theta) { return {theta, dot(p, theta.normal())}; }
};

} // namespace alphasec
