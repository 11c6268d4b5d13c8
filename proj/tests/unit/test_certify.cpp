#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "resolvent/certify/census.hpp"
#include "resolvent/certify/random.hpp"
#include "resolvent/errors.hpp"

using namespace resolvent::certify;

namespace {

constexpr int kDepth = 12;
constexpr int kRootDepth = 14;

QuadraticForm form(double a11, double a12, double a13, double a22, double a23, double a33) {
    return {{a11, a12, a13, a22, a23, a33}};
}

// (x - a z)^2 + (y - b z)^2 - z^2: the unit circle about (a, b) in the chart z = 1.
QuadraticForm circle(double a, double b) { return form(1, 0, -a, 1, -b, a * a + b * b - 1); }

QuadraticSystem squares() { return {{form(1, 0, 0, 0, 0, 0), form(0, 0, 0, 1, 0, 0), form(0, 0, 0, 0, 0, 1)}}; }

QuadraticSystem three_circles() { return {{circle(0, 0), circle(1, 0), circle(0.5, 0.7)}}; }

// First certified draw of degree 1 from Rng(20261016), regular value (0,0,1).
QuadraticSystem searched_witness() {
    return {{form(1.1641224313672469, 0.66986529908458725, -2.3188045580798624, -1.2214992362630772,
                  -0.50600762868617644, 0.11494961353339601),
             form(-0.10133962732590517, 0.63299806936403247, 1.437863605362345, -1.2319525077898383,
                  1.0230552190834143, -0.35960843693128614),
             form(-0.50269812459997398, -1.4271759696837696, 1.1585721454663389, -0.22090919668206305,
                  0.45797469974208482, 2.0188280235433265)}};
}

double sampled_min(const QuadraticSystem& f, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    double m = INFINITY;
    for (std::size_t i = 0; i < n; ++i) m = std::min(m, f.sup_norm(random_unit_vector(rng)));
    return m;
}

bool parallel(const Vec3& a, const Vec3& b, double tol) { return a.cross(b).norm() <= tol * a.norm() * b.norm(); }

}  // namespace

TEST_CASE("forms and systems") {
    const auto f = form(1, 2, 3, 4, 5, 6);
    const Vec3 x(1, -1, 2);
    CHECK(f(x) == doctest::Approx(x.dot(f.matrix() * x)));
    CHECK(f.frobenius() == doctest::Approx(f.matrix().norm()));
    CHECK(QuadraticForm::from_matrix(f.matrix()) == f);
    const QuadraticSystem s{{f, circle(1, 0)}};
    CHECK(system_from_json(system_to_json(s)) == s);
    CHECK_THROWS_AS((void)system_from_json(nlohmann::ordered_json{{"forms", {{1, 2, 3}}}}), resolvent::DataError);
    CHECK_THROWS_AS((void)system_from_json(nlohmann::ordered_json{{"k", 2}, {"forms", {{1, 2, 3, 4, 5, 6}}}}),
                    resolvent::DataError);
    Rng rng(3);
    const Mat3 r = random_rotation(rng);
    CHECK(r.determinant() == doctest::Approx(1.0));
    CHECK((r.transpose() * r - Mat3::Identity()).norm() < 1e-12);
    CHECK(s.rotated(r)(x)[0] == doctest::Approx(f(r * x)));
}

TEST_CASE("rng streams are fixed") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.normal() == b.normal());
    Rng c(1);
    double sum = 0, sq = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double z = c.normal();
        sum += z;
        sq += z * z;
    }
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(std::abs(sq / n - 1.0) < 0.02);
    for (int i = 0; i < 1000; ++i) CHECK(c.below(7) < 7);
}

TEST_CASE("spherical cells") {
    Rng rng(5);
    std::vector<SphericalCell> level = hemisphere_cover();
    for (int d = 0; d < 5; ++d) {
        std::vector<SphericalCell> next;
        for (const auto& cell : level) {
            // sampled points of the triangle lie within the radius
            for (int s = 0; s < 20; ++s) {
                double w0 = rng.uniform(), w1 = rng.uniform(), w2 = rng.uniform();
                const Vec3 p = (w0 * cell.v[0] + w1 * cell.v[1] + w2 * cell.v[2]).normalized();
                CHECK((p - cell.center()).norm() <= cell.radius() + 1e-12);
            }
            for (const auto& child : cell.split()) {
                // midpoint splitting on the sphere: 0.659 at the octant level,
                // tending to 1/2 as cells flatten
                CHECK(child.radius() <= (d == 0 ? 0.66 : d < 3 ? 0.56 : 0.505) * cell.radius());
                next.push_back(child);
            }
        }
        level = std::move(next);
    }
    const Vec3 c = Vec3(1, 2, 3).normalized();
    const auto t = tangent_basis(c);
    CHECK(std::abs(t.col(0).dot(c)) < 1e-15);
    CHECK(std::abs(t.col(1).dot(c)) < 1e-15);
    CHECK(t.col(0).cross(t.col(1)).dot(c) == doctest::Approx(1.0));
}

TEST_CASE("certification examples") {
    const QuadraticSystem pd{{form(1, 0, 0, 1, 0, 1)}};
    const auto r = certify_nonresultant(pd, kDepth);
    REQUIRE(is_certified(r));
    const double lb = std::get<CertifiedNonResultant>(r).min_lower_bound;
    CHECK(lb > 0.0);
    CHECK(lb <= 1.0);
    CHECK(sampled_min(pd, 1000000, 1) >= lb);

    const QuadraticSystem planes{{form(0, 0.5, 0, 0, 0, 0), form(0, 0, 0, 0, 0.5, 0)}};  // xy, yz
    const auto w = certify_nonresultant(planes, kDepth);
    REQUIRE(std::holds_alternative<CommonZeroWitness>(w));
    const auto& wit = std::get<CommonZeroWitness>(w);
    CHECK(wit.residual <= witness_tolerance(planes));
    CHECK(wit.point.norm() == doctest::Approx(1.0));
    const bool on_zero_set = std::abs(wit.point[1]) < 1e-6 ||
                             (std::abs(wit.point[0]) < 1e-6 && std::abs(wit.point[2]) < 1e-6);
    CHECK(on_zero_set);

    // x^2 - yz, y^2 - xz, z^2 - xy vanish together on (1,1,1)
    const QuadraticSystem cyc{{form(1, 0, 0, 0, -0.5, 0), form(0, 0, -0.5, 1, 0, 0), form(0, -0.5, 0, 0, 0, 1)}};
    const auto rc = certify_nonresultant(cyc, kDepth);
    REQUIRE(std::holds_alternative<CommonZeroWitness>(rc));
    CHECK(std::get<CommonZeroWitness>(rc).residual <= witness_tolerance(cyc));
    CHECK(sampled_min(cyc, 1000000, 2) < 0.05);

    CHECK_THROWS_AS((void)certify_nonresultant(QuadraticSystem{}, kDepth), resolvent::DegenerateInputError);
    CHECK_THROWS_AS((void)certify_nonresultant(pd, 0), resolvent::PreconditionError);
}

TEST_CASE("certified lower bounds hold on a million samples") {
    Rng rng(17);
    int checked = 0;
    for (int i = 0; i < 40 && checked < 4; ++i) {
        const auto f = gaussian_system(rng, 3);
        const auto r = certify_nonresultant(f, kDepth);
        if (!is_certified(r)) continue;
        ++checked;
        CHECK(sampled_min(f, 1000000, 100 + static_cast<std::uint64_t>(i)) >=
              std::get<CertifiedNonResultant>(r).min_lower_bound);
    }
    CHECK(checked == 4);
}

TEST_CASE("mod-2 degree examples") {
    CHECK(mod2_degree(squares(), Vec3(0.2, 0.3, 0.9), kRootDepth).degree == 0);

    Rng rng(9);
    int tried = 0;
    for (int i = 0; i < 50 && tried < 5; ++i) {
        auto f = gaussian_system(rng, 3);
        f.forms[0] = form(2, 0.3, 0, 1, 0.1, 1.5);  // positive definite
        if (!is_certified(certify_nonresultant(f, kDepth))) continue;
        ++tried;
        CHECK(mod2_degree(f, random_unit_vector(rng), kRootDepth).degree == 0);
    }
    CHECK(tried == 5);

    const Vec3 v(0.3, -0.5, 0.8);
    const auto d = mod2_degree(three_circles(), v, kRootDepth);
    CHECK(d.degree == 1);
    CHECK(d.retries == 0);
    REQUIRE(d.roots.size() == 2);
    for (const auto& root : d.roots) CHECK(parallel(three_circles()(root.point), v, 1e-9));
    CHECK(d.roots[0].point[0] == doctest::Approx(0.070366).epsilon(1e-5));
    CHECK(d.roots[1].point[0] == doctest::Approx(0.644750).epsilon(1e-5));
    CHECK_FALSE(d.roots[0].positive);
    CHECK(d.roots[1].positive);

    CHECK_THROWS_AS((void)mod2_degree(QuadraticSystem{{circle(0, 0), circle(1, 0)}}, v, kRootDepth),
                    resolvent::ArityError);
    const QuadraticSystem bad{{form(0, 0.5, 0, 0, 0, 0), form(0, 0, 0, 0, 0.5, 0), form(1, 0, 0, 0, 0, 0)}};
    CHECK_THROWS_AS((void)mod2_degree(bad, v, kRootDepth), resolvent::PreconditionError);
}

TEST_CASE("searched degree-1 witness") {
    // rerun the search that produced the frozen coefficients
    Rng rng(20261016);
    const auto first = gaussian_system(rng, 3);
    CHECK(first == searched_witness());
    REQUIRE(is_certified(certify_nonresultant(first, kDepth)));
    const auto d = mod2_degree(first, Vec3(0, 0, 1), kRootDepth);
    CHECK(d.degree == 1);
    REQUIRE(d.roots.size() == 2);
    const Vec3 r0(-0.5893046288665329, -0.80485597828904787, -0.070191941195964475);
    const Vec3 r1(0.96136847525767688, -0.21012025930927206, 0.17782050334124483);
    CHECK(projective_distance(d.roots[0].point, r0) < 1e-9);
    CHECK(projective_distance(d.roots[1].point, r1) < 1e-9);
    for (const auto& root : d.roots) CHECK(parallel(first(root.point), Vec3(0, 0, 1), 1e-9));
}

TEST_CASE("degree does not depend on the regular value, rotation or scaling") {
    Rng rng(2024);
    std::vector<QuadraticSystem> systems{three_circles(), searched_witness(), squares()};
    while (systems.size() < 10) {
        auto f = gaussian_system(rng, 3);
        if (is_certified(certify_nonresultant(f, kDepth))) systems.push_back(f);
    }
    int seen[2] = {0, 0};
    for (const auto& f : systems) {
        const int base = mod2_degree(f, random_unit_vector(rng), kRootDepth).degree;
        ++seen[base];
        for (int i = 0; i < 10; ++i) CHECK(mod2_degree(f, random_unit_vector(rng), kRootDepth).degree == base);
        const Mat3 r = random_rotation(rng);
        CHECK(mod2_degree(f.rotated(r), random_unit_vector(rng), kRootDepth).degree == base);
        QuadraticSystem scaled = f;
        for (auto& q : scaled.forms) q = (0.25 + 4.0 * rng.uniform()) * q;
        CHECK(mod2_degree(scaled, random_unit_vector(rng), kRootDepth).degree == base);
    }
    CHECK(seen[0] > 0);
    CHECK(seen[1] > 0);
}

TEST_CASE("certified paths") {
    const QuadraticSystem pd{{form(1, 0, 0, 1, 0, 1), circle(1, 0), circle(0, 2)}};
    REQUIRE(is_certified(certify_nonresultant(pd, kDepth)));
    CHECK(certify_path(pd, pd, kDepth).certified);
    QuadraticSystem twice = pd;
    for (auto& q : twice.forms) q = 2.0 * q;
    CHECK(certify_path(pd, twice, kDepth).certified);

    for (const auto& one : {three_circles(), searched_witness()}) {
        const auto p = certify_path(squares(), one, kDepth);
        CHECK_FALSE(p.certified);
        CHECK(p.t_fail > 0.0);
        CHECK(p.t_fail < 1.0);
        // the segment really meets a common zero near the reported parameter
        const auto mid = squares().lerp(one, p.t_fail);
        CHECK(sampled_min(mid, 200000, 4) < 0.5);
    }
    // xy, yz, x^2 - z^2 share the zero (1, 0, 1)
    const QuadraticSystem planes{{form(0, 0.5, 0, 0, 0, 0), form(0, 0, 0, 0, 0.5, 0), form(1, 0, 0, 0, 0, -1)}};
    CHECK_THROWS_AS((void)certify_path(pd, planes, kDepth), resolvent::PreconditionError);
}

TEST_CASE("census") {
    CensusOptions opt;
    opt.k = 3;
    opt.samples = 200;
    opt.seed = 7;
    opt.depth = kDepth;
    const auto rep = component_census(opt);
    CHECK(rep.certified == 200);
    REQUIRE(rep.classes.size() == 2);
    CHECK(rep.classes.at(0) >= 20);
    CHECK(rep.classes.at(1) >= 20);
    CHECK(rep.violations == 0);
    CHECK(rep.across.certified == 0);

    opt.threads = 2;
    CHECK(census_json(component_census(opt), false) == census_json(rep, false));
    CHECK(census_json(rep, true).contains("meta"));
    CHECK_FALSE(census_json(rep, false).contains("meta"));

    CensusOptions two = opt;
    two.k = 2;
    const auto r2 = component_census(two);
    CHECK(r2.classes.size() == 1);
    CHECK(r2.violations == 0);
    CHECK(r2.across.attempted == 0);

    CensusOptions bad = opt;
    bad.k = 4;
    CHECK_THROWS_AS((void)component_census(bad), resolvent::DataError);
    bad.k = 3;
    bad.samples = 0;
    CHECK_THROWS_AS((void)component_census(bad), resolvent::PreconditionError);
}
