#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

namespace resolvent::certify {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Real quadratic form on R^3 stored as its upper triangle
/// (a11, a12, a13, a22, a23, a33), so symmetry holds by construction.
struct QuadraticForm {
    std::array<double, 6> upper{};

    static QuadraticForm from_matrix(const Mat3& a);
    [[nodiscard]] Mat3 matrix() const;
    [[nodiscard]] double operator()(const Vec3& x) const;
    [[nodiscard]] Vec3 gradient(const Vec3& x) const { return 2.0 * (matrix() * x); }
    [[nodiscard]] double frobenius() const;
    /// Lipschitz constant of the form on the unit sphere.
    [[nodiscard]] double lipschitz() const { return 2.0 * frobenius(); }

    friend QuadraticForm operator*(double s, const QuadraticForm& f);
    friend QuadraticForm operator+(const QuadraticForm& a, const QuadraticForm& b);
    friend QuadraticForm operator-(const QuadraticForm& a, const QuadraticForm& b);
    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

struct QuadraticSystem {
    std::vector<QuadraticForm> forms;

    [[nodiscard]] std::size_t k() const noexcept { return forms.size(); }
    [[nodiscard]] Eigen::VectorXd operator()(const Vec3& x) const;
    /// max_i |f_i(x)|
    [[nodiscard]] double sup_norm(const Vec3& x) const;
    [[nodiscard]] double max_frobenius() const;

    /// x -> R x applied to every form (A -> R^T A R).
    [[nodiscard]] QuadraticSystem rotated(const Mat3& r) const;
    /// (1 - t) * this + t * other, form by form.
    [[nodiscard]] QuadraticSystem lerp(const QuadraticSystem& other, double t) const;

    friend bool operator==(const QuadraticSystem&, const QuadraticSystem&) = default;
};

/// {"k":3,"forms":[[a11,a12,a13,a22,a23,a33],...]}. A k that disagrees with
/// the number of forms or a form without six entries raises DataError.
[[nodiscard]] QuadraticSystem system_from_json(const nlohmann::ordered_json& j);
[[nodiscard]] nlohmann::ordered_json system_to_json(const QuadraticSystem& s);

}  // namespace resolvent::certify
