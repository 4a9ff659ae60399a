#include "lolab/geometry.hpp"

#include <algorithm>
#include <numbers>

namespace lolab {

Angle arg_of(const UnitVector& v) {
    double theta = std::atan2(v.y(), v.x());
    if (theta < 0.0) theta += 2.0 * std::numbers::pi;
    if (theta >= 2.0 * std::numbers::pi) theta = 0.0;
    return Angle{theta};
}

double angle_between(const UnitVector& u, const UnitVector& v) {
    // same value as arccos of the clamped inner product, but exact at the
    // endpoints 0 and pi where arccos loses half the significand
    const double d = std::clamp(u.vec().dot(v.vec()), -1.0, 1.0);
    return std::atan2(std::abs(u.vec().cross(v.vec())), d);
}

double chord_sq(const UnitVector& u, const UnitVector& v) {
    const double dx = u.x() - v.x();
    const double dy = u.y() - v.y();
    return dx * dx + dy * dy;
}

bool gamma_close(const UnitVector& u, const UnitVector& v, double gamma) {
    if (!(gamma >= 0.0 && gamma <= std::numbers::pi / 2))
        throw std::invalid_argument("gamma_close: gamma must lie in [0, pi/2]");
    const double a = angle_between(u, v);
    return std::min(a, std::numbers::pi - a) <= gamma;
}

}  // namespace lolab
