#pragma once

#include <array>
#include <vector>

#include "resolvent/certify/system.hpp"

namespace resolvent::certify {

/// Spherical triangle given by three unit vertices.
struct SphericalCell {
    std::array<Vec3, 3> v;
    int depth = 0;

    /// Normalized vertex centroid.
    [[nodiscard]] Vec3 center() const;
    /// Largest chord distance from the center to a vertex; every point of
    /// the triangle lies within it.
    [[nodiscard]] double radius() const;
    /// Four children through the normalized edge midpoints.
    [[nodiscard]] std::array<SphericalCell, 4> split() const;
};

/// The four octant triangles with z >= 0. Every line through the origin
/// meets their union, which is all a homogeneous search needs.
[[nodiscard]] std::vector<SphericalCell> hemisphere_cover();

/// Orthonormal basis of the plane orthogonal to the unit vector c (columns).
[[nodiscard]] Eigen::Matrix<double, 3, 2> tangent_basis(const Vec3& c);

/// Projective distance: min(|x - y|, |x + y|) for unit x, y.
[[nodiscard]] double projective_distance(const Vec3& x, const Vec3& y);

}  // namespace resolvent::certify
