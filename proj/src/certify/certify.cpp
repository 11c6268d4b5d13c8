#include "resolvent/certify/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "resolvent/certify/random.hpp"
#include "resolvent/errors.hpp"

namespace resolvent::certify {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMaxCondition = 1e8;
constexpr int kDegreeRetries = 20;

// max_i (|f_i(c)| - L_i rho - slack): positive means no zero in the cell.
double exclusion_margin(const std::vector<QuadraticForm>& forms, const std::vector<double>& lip, const Vec3& c,
                        double rho, double slack = 0.0) {
    double m = -kInf;
    for (std::size_t i = 0; i < forms.size(); ++i) m = std::max(m, std::abs(forms[i](c)) - lip[i] * rho - slack);
    return m;
}

std::vector<double> lipschitz_constants(const std::vector<QuadraticForm>& forms) {
    std::vector<double> out;
    for (const auto& f : forms) out.push_back(f.lipschitz());
    return out;
}

void check_depth(int max_depth) {
    if (max_depth < 1) throw PreconditionError("max_depth must be at least 1");
}

enum class ChartStatus { Root, Fail, Degenerate };

struct ChartRoot {
    ChartStatus status = ChartStatus::Fail;
    Vec3 point;
    double condition = 0.0;
};

// Newton for the pair G = 0 in the gnomonic chart u -> c + T u at the cell
// center. G is quadratic in u, so J is affine with Lipschitz constant K and
// Kantorovich's theorem applies with exact constants. Success means the
// uniqueness ball around the refined root covers the whole cell, so the
// cell holds no other root.
ChartRoot chart_newton(const std::array<Mat3, 2>& g, const SphericalCell& cell) {
    const Vec3 c = cell.center();
    const Eigen::Matrix<double, 3, 2> t = tangent_basis(c);
    double k2 = 0.0;
    for (const auto& b : g) k2 += (2.0 * t.transpose() * b * t).squaredNorm();
    const double lip_j = std::sqrt(k2);

    auto eval = [&](const Eigen::Vector2d& u, Eigen::Vector2d& val, Eigen::Matrix2d& jac) {
        const Vec3 x = c + t * u;
        for (int j = 0; j < 2; ++j) {
            val[j] = x.dot(g[j] * x);
            jac.row(j) = 2.0 * (x.transpose() * g[j] * t);
        }
    };

    Eigen::Vector2d u = Eigen::Vector2d::Zero(), val;
    Eigen::Matrix2d jac;
    for (int it = 0; it < 60; ++it) {
        eval(u, val, jac);
        if (std::abs(jac.determinant()) < 1e-300) return {};
        const Eigen::Vector2d du = -jac.partialPivLu().solve(val);
        u += du;
        if (!u.allFinite() || u.norm() > 4.0) return {};
        if (du.norm() <= 1e-15 * (1.0 + u.norm())) break;
    }
    eval(u, val, jac);
    Eigen::JacobiSVD<Eigen::Matrix2d> svd(jac);
    const double smax = svd.singularValues()[0];
    const double smin = svd.singularValues()[1];
    if (smin <= 0.0) return {ChartStatus::Degenerate, Vec3::Zero(), kInf};
    const double beta = 1.0 / smin;
    const double eta = jac.partialPivLu().solve(val).norm();
    const double h = beta * lip_j * eta;
    if (h > 0.25) return {};
    const double unique_radius = lip_j == 0.0 ? kInf : (1.0 + std::sqrt(1.0 - 2.0 * h)) / (beta * lip_j);
    for (const auto& v : cell.v) {
        const double cv = v.dot(c);
        if (cv <= 0.0) return {};
        const Eigen::Vector2d uv = t.transpose() * (v / cv);
        if ((uv - u).norm() >= unique_radius * (1.0 - 1e-9)) return {};
    }
    ChartRoot r;
    r.status = smax / smin > kMaxCondition ? ChartStatus::Degenerate : ChartStatus::Root;
    r.point = (c + t * u).normalized();
    r.condition = smax / smin;
    return r;
}

}  // namespace

double witness_tolerance(const QuadraticSystem& f) { return 1e-12 * (1.0 + f.max_frobenius()); }

std::optional<Vec3> refine_common_zero(const QuadraticSystem& f, const Vec3& x0) {
    const auto k = static_cast<Eigen::Index>(f.k());
    Vec3 x = x0.normalized();
    Eigen::MatrixXd jac(k + 1, 3);
    Eigen::VectorXd res(k + 1);
    for (int it = 0; it < 50; ++it) {
        for (Eigen::Index i = 0; i < k; ++i) {
            const auto& q = f.forms[static_cast<std::size_t>(i)];
            res[i] = q(x);
            jac.row(i) = q.gradient(x).transpose();
        }
        res[k] = 0.5 * (x.squaredNorm() - 1.0);
        jac.row(k) = x.transpose();
        const Vec3 dx = jac.completeOrthogonalDecomposition().solve(-res);
        x += dx;
        if (!x.allFinite()) return std::nullopt;
        if (dx.norm() <= 1e-16) break;
    }
    x.normalize();
    if (f.sup_norm(x) <= witness_tolerance(f)) return x;
    return std::nullopt;
}

CertResult certify_nonresultant(const QuadraticSystem& f, int max_depth) {
    if (f.k() == 0) throw DegenerateInputError("an empty system vanishes everywhere");
    check_depth(max_depth);
    const auto lip = lipschitz_constants(f.forms);
    std::vector<SphericalCell> stack = hemisphere_cover();
    double lower = kInf;
    while (!stack.empty()) {
        const SphericalCell cell = stack.back();
        stack.pop_back();
        const Vec3 c = cell.center();
        const double m = exclusion_margin(f.forms, lip, c, cell.radius());
        if (m > 0.0) {
            lower = std::min(lower, m);
            continue;
        }
        if (cell.depth >= 2) {
            if (auto w = refine_common_zero(f, c)) return CommonZeroWitness{*w, f.sup_norm(*w)};
        }
        if (cell.depth >= max_depth) return Inconclusive{max_depth};
        for (const auto& child : cell.split()) stack.push_back(child);
    }
    return CertifiedNonResultant{lower};
}

std::optional<std::vector<DegreeRoot>> parallel_solutions(const QuadraticSystem& f, const Vec3& v_in,
                                                          int max_depth) {
    if (f.k() != 3) throw ArityError("the degree needs exactly three forms, got " + std::to_string(f.k()));
    check_depth(max_depth);
    const Vec3 v = v_in.normalized();
    const Mat3 a0 = f.forms[0].matrix(), a1 = f.forms[1].matrix(), a2 = f.forms[2].matrix();
    // components of F(x) x v
    const std::array<Mat3, 3> comp{v[2] * a1 - v[1] * a2, v[0] * a2 - v[2] * a0, v[1] * a0 - v[0] * a1};
    Eigen::Index m = 0;
    v.cwiseAbs().maxCoeff(&m);
    std::array<Mat3, 2> g;
    std::vector<QuadraticForm> g_forms;
    for (int j = 0, n = 0; j < 3; ++j) {
        if (j == m) continue;
        g[n++] = comp[j];
        g_forms.push_back(QuadraticForm::from_matrix(comp[j]));
    }
    const auto lip = lipschitz_constants(g_forms);

    std::vector<DegreeRoot> roots;
    std::vector<SphericalCell> stack = hemisphere_cover();
    while (!stack.empty()) {
        const SphericalCell cell = stack.back();
        stack.pop_back();
        if (exclusion_margin(g_forms, lip, cell.center(), cell.radius()) > 0.0) continue;
        const ChartRoot r = chart_newton(g, cell);
        if (r.status == ChartStatus::Degenerate) return std::nullopt;
        if (r.status == ChartStatus::Root) {
            const bool known = std::any_of(roots.begin(), roots.end(), [&](const DegreeRoot& d) {
                return projective_distance(d.point, r.point) < 1e-7;
            });
            if (!known) roots.push_back({r.point, f(r.point).dot(v) > 0.0, r.condition});
            continue;
        }
        if (cell.depth >= max_depth) return std::nullopt;
        for (const auto& child : cell.split()) stack.push_back(child);
    }
    std::sort(roots.begin(), roots.end(), [](const DegreeRoot& a, const DegreeRoot& b) {
        return std::lexicographical_compare(a.point.data(), a.point.data() + 3, b.point.data(), b.point.data() + 3);
    });
    return roots;
}

DegreeResult mod2_degree(const QuadraticSystem& f, const Vec3& v, int max_depth, std::uint64_t seed) {
    if (f.k() != 3) throw ArityError("the degree needs exactly three forms, got " + std::to_string(f.k()));
    if (!is_certified(certify_nonresultant(f, max_depth))) {
        throw PreconditionError("the system is not certified free of common zeros");
    }
    if (!(v.norm() > 0.0)) throw DataError("regular value must be nonzero");
    Rng rng(seed);
    DegreeResult out;
    for (int attempt = 0; attempt <= kDegreeRetries; ++attempt) {
        const Vec3 value = attempt == 0 ? Vec3(v.normalized()) : random_unit_vector(rng);
        if (auto roots = parallel_solutions(f, value, max_depth)) {
            out.value = value;
            out.roots = std::move(*roots);
            out.degree = static_cast<int>(std::count_if(out.roots.begin(), out.roots.end(),
                                                        [](const DegreeRoot& r) { return r.positive; }) %
                                          2);
            out.retries = attempt;
            return out;
        }
    }
    throw RegularValueNotFound("no regular value found after " + std::to_string(kDegreeRetries) + " retries");
}

PathResult certify_path(const QuadraticSystem& f, const QuadraticSystem& g, int max_depth) {
    if (f.k() != g.k()) throw ArityError("path endpoints have different numbers of forms");
    check_depth(max_depth);
    if (!is_certified(certify_nonresultant(f, max_depth)) || !is_certified(certify_nonresultant(g, max_depth))) {
        throw PreconditionError("path endpoints must be certified first");
    }
    double spread = 0.0;
    for (std::size_t i = 0; i < f.k(); ++i) spread = std::max(spread, (f.forms[i] - g.forms[i]).frobenius());

    struct Item {
        double t0, t1;
        int t_depth;
        SphericalCell cell;
    };
    std::vector<Item> stack;
    for (const auto& c : hemisphere_cover()) stack.push_back({0.0, 1.0, 0, c});
    std::vector<QuadraticForm> ft(f.k());
    std::vector<double> lip(f.k());
    while (!stack.empty()) {
        const Item it = stack.back();
        stack.pop_back();
        const double tm = 0.5 * (it.t0 + it.t1);
        const double half = 0.5 * (it.t1 - it.t0);
        double lip_max = 0.0;
        for (std::size_t i = 0; i < f.k(); ++i) {
            ft[i] = (1.0 - tm) * f.forms[i] + tm * g.forms[i];
            lip[i] = ft[i].lipschitz();
            lip_max = std::max(lip_max, lip[i]);
        }
        const double rho = it.cell.radius();
        if (exclusion_margin(ft, lip, it.cell.center(), rho, half * spread) > 0.0) continue;
        const bool can_t = it.t_depth < max_depth;
        const bool can_s = it.cell.depth < max_depth;
        if (!can_t && !can_s) return {false, tm};
        if (can_t && (!can_s || half * spread >= lip_max * rho)) {
            stack.push_back({tm, it.t1, it.t_depth + 1, it.cell});
            stack.push_back({it.t0, tm, it.t_depth + 1, it.cell});
        } else {
            for (const auto& child : it.cell.split()) stack.push_back({it.t0, it.t1, it.t_depth, child});
        }
    }
    return {true, 0.0};
}

}  // namespace resolvent::certify
