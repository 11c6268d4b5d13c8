#include "resolvent/certify/system.hpp"

#include <cmath>

#include "resolvent/errors.hpp"

namespace resolvent::certify {

QuadraticForm QuadraticForm::from_matrix(const Mat3& a) {
    const Mat3 s = 0.5 * (a + a.transpose());
    return {{s(0, 0), s(0, 1), s(0, 2), s(1, 1), s(1, 2), s(2, 2)}};
}

Mat3 QuadraticForm::matrix() const {
    const auto& u = upper;
    Mat3 m;
    m << u[0], u[1], u[2], u[1], u[3], u[4], u[2], u[4], u[5];
    return m;
}

double QuadraticForm::operator()(const Vec3& x) const {
    const auto& u = upper;
    return u[0] * x[0] * x[0] + u[3] * x[1] * x[1] + u[5] * x[2] * x[2] +
           2.0 * (u[1] * x[0] * x[1] + u[2] * x[0] * x[2] + u[4] * x[1] * x[2]);
}

double QuadraticForm::frobenius() const {
    const auto& u = upper;
    return std::sqrt(u[0] * u[0] + u[3] * u[3] + u[5] * u[5] + 2.0 * (u[1] * u[1] + u[2] * u[2] + u[4] * u[4]));
}

QuadraticForm operator*(double s, const QuadraticForm& f) {
    QuadraticForm out = f;
    for (auto& v : out.upper) v *= s;
    return out;
}

QuadraticForm operator+(const QuadraticForm& a, const QuadraticForm& b) {
    QuadraticForm out = a;
    for (std::size_t i = 0; i < 6; ++i) out.upper[i] += b.upper[i];
    return out;
}

QuadraticForm operator-(const QuadraticForm& a, const QuadraticForm& b) { return a + (-1.0) * b; }

Eigen::VectorXd QuadraticSystem::operator()(const Vec3& x) const {
    Eigen::VectorXd v(static_cast<Eigen::Index>(forms.size()));
    for (std::size_t i = 0; i < forms.size(); ++i) v[static_cast<Eigen::Index>(i)] = forms[i](x);
    return v;
}

double QuadraticSystem::sup_norm(const Vec3& x) const {
    double m = 0.0;
    for (const auto& f : forms) m = std::max(m, std::abs(f(x)));
    return m;
}

double QuadraticSystem::max_frobenius() const {
    double m = 0.0;
    for (const auto& f : forms) m = std::max(m, f.frobenius());
    return m;
}

QuadraticSystem QuadraticSystem::rotated(const Mat3& r) const {
    QuadraticSystem out;
    for (const auto& f : forms) out.forms.push_back(QuadraticForm::from_matrix(r.transpose() * f.matrix() * r));
    return out;
}

QuadraticSystem QuadraticSystem::lerp(const QuadraticSystem& other, double t) const {
    if (other.k() != k()) throw ArityError("interpolating systems of different sizes");
    QuadraticSystem out;
    for (std::size_t i = 0; i < k(); ++i) out.forms.push_back((1.0 - t) * forms[i] + t * other.forms[i]);
    return out;
}

QuadraticSystem system_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("forms") || !j["forms"].is_array()) {
        throw DataError("system JSON needs a \"forms\" array");
    }
    QuadraticSystem s;
    for (const auto& f : j["forms"]) {
        if (!f.is_array() || f.size() != 6) throw DataError("each form needs six upper-triangle entries");
        QuadraticForm q;
        for (std::size_t i = 0; i < 6; ++i) {
            if (!f[i].is_number()) throw DataError("form entries must be numbers");
            q.upper[i] = f[i].get<double>();
        }
        s.forms.push_back(q);
    }
    if (j.contains("k") && j["k"].get<std::size_t>() != s.k()) {
        throw DataError("\"k\" disagrees with the number of forms");
    }
    return s;
}

nlohmann::ordered_json system_to_json(const QuadraticSystem& s) {
    auto forms = nlohmann::ordered_json::array();
    for (const auto& f : s.forms) forms.push_back(f.upper);
    return {{"k", s.k()}, {"forms", forms}};
}

}  // namespace resolvent::certify
