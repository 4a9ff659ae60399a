#pragma once

#include <cmath>
#include <stdexcept>

namespace lolab {

// Absolute tolerance used for angle/chord comparisons throughout the project.
inline constexpr double kAngleTol = 1e-9;

// A unit vector is accepted as-is when |x^2+y^2-1| <= kUnitEps; inputs whose
// norm is within kNormalizeEps of 1 are renormalized, anything else is
// rejected (tolerates serialization round-off without accepting junk).
inline constexpr double kUnitEps = 1e-12;
inline constexpr double kNormalizeEps = 1e-6;

/// Plain 2D vector with double components.
struct Vec2 {
    double x{0.0};
    double y{0.0};

    constexpr Vec2() = default;
    constexpr Vec2(double px, double py) : x(px), y(py) {}

    constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr double dot(const Vec2& r) const { return x * r.x + y * r.y; }
    constexpr double cross(const Vec2& r) const { return x * r.y - y * r.x; }
    constexpr double norm_sq() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }
};

/// Unit vector in the plane. Construction enforces |x^2+y^2-1| <= kUnitEps,
/// renormalizing first when the norm is within kNormalizeEps of 1.
class UnitVector {
  public:
    UnitVector(double x, double y) {
        if (!std::isfinite(x) || !std::isfinite(y))
            throw std::invalid_argument("UnitVector: non-finite coordinates");
        const double n2 = x * x + y * y;
        if (std::abs(n2 - 1.0) > kUnitEps) {
            const double n = std::sqrt(n2);
            if (std::abs(n - 1.0) > kNormalizeEps)
                throw std::invalid_argument("UnitVector: norm too far from 1");
            x /= n;
            y /= n;
        }
        x_ = x;
        y_ = y;
    }
    explicit UnitVector(const Vec2& v) : UnitVector(v.x, v.y) {}

    /// Unit vector at the given angle from the positive x-axis.
    static UnitVector from_angle(double theta) {
        return UnitVector(std::cos(theta), std::sin(theta));
    }

    double x() const { return x_; }
    double y() const { return y_; }
    Vec2 vec() const { return {x_, y_}; }
    UnitVector negated() const {
        UnitVector u(*this);
        u.x_ = -x_;
        u.y_ = -y_;
        return u;
    }

  private:
    double x_, y_;
};

/// Angle in radians, normalized to [0, 2*pi).
struct Angle {
    double radians{0.0};
};

/// The unique theta in [0, 2*pi) with v = (cos theta, sin theta).
Angle arg_of(const UnitVector& v);

/// Angle between two unit vectors, arccos of the clamped inner product,
/// in [0, pi].
double angle_between(const UnitVector& u, const UnitVector& v);

/// Squared chord |u - v|^2; equals 4 sin^2(theta/2) for theta the angle
/// between u and v.
double chord_sq(const UnitVector& u, const UnitVector& v);

/// True iff u is within angle gamma of v or of -v. Requires 0 <= gamma <= pi/2.
bool gamma_close(const UnitVector& u, const UnitVector& v, double gamma);

}  // namespace lolab
