#include "resolvent/certify/sphere.hpp"

#include <algorithm>

namespace resolvent::certify {

Vec3 SphericalCell::center() const { return (v[0] + v[1] + v[2]).normalized(); }

double SphericalCell::radius() const {
    const Vec3 c = center();
    double r = 0.0;
    for (const auto& p : v) r = std::max(r, (p - c).norm());
    return r;
}

std::array<SphericalCell, 4> SphericalCell::split() const {
    const Vec3 m01 = (v[0] + v[1]).normalized();
    const Vec3 m12 = (v[1] + v[2]).normalized();
    const Vec3 m02 = (v[0] + v[2]).normalized();
    const int d = depth + 1;
    return {SphericalCell{{v[0], m01, m02}, d}, SphericalCell{{m01, v[1], m12}, d},
            SphericalCell{{m02, m12, v[2]}, d}, SphericalCell{{m01, m12, m02}, d}};
}

std::vector<SphericalCell> hemisphere_cover() {
    const Vec3 x(1, 0, 0), y(0, 1, 0), z(0, 0, 1);
    return {SphericalCell{{x, y, z}, 0}, SphericalCell{{y, Vec3(-x), z}, 0},
            SphericalCell{{Vec3(-x), Vec3(-y), z}, 0}, SphericalCell{{Vec3(-y), x, z}, 0}};
}

Eigen::Matrix<double, 3, 2> tangent_basis(const Vec3& c) {
    // start from the axis least aligned with c
    Eigen::Index i = 0;
    c.cwiseAbs().minCoeff(&i);
    Vec3 a = Vec3::Zero();
    a[i] = 1.0;
    const Vec3 t1 = (a - a.dot(c) * c).normalized();
    const Vec3 t2 = c.cross(t1);
    Eigen::Matrix<double, 3, 2> t;
    t.col(0) = t1;
    t.col(1) = t2;
    return t;
}

double projective_distance(const Vec3& x, const Vec3& y) { return std::min((x - y).norm(), (x + y).norm()); }

}  // namespace resolvent::certify
