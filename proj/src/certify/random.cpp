#include "resolvent/certify/random.hpp"

#include <cmath>

namespace resolvent::certify {

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
}

std::uint64_t Rng::below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = gen_();
    } while (x >= limit);
    return x % n;
}

Vec3 random_unit_vector(Rng& rng) {
    Vec3 v;
    do {
        v = Vec3(rng.normal(), rng.normal(), rng.normal());
    } while (v.norm() < 1e-8);
    return v.normalized();
}

QuadraticSystem gaussian_system(Rng& rng, std::size_t k) {
    QuadraticSystem s;
    s.forms.resize(k);
    for (auto& f : s.forms) {
        for (auto& e : f.upper) e = rng.normal();
    }
    return s;
}

Mat3 random_rotation(Rng& rng) {
    Mat3 g;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) g(i, j) = rng.normal();
    }
    Eigen::HouseholderQR<Mat3> qr(g);
    Mat3 q = qr.householderQ();
    if (q.determinant() < 0) q.col(0) *= -1.0;
    return q;
}

}  // namespace resolvent::certify
