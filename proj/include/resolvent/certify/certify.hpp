#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "resolvent/certify/sphere.hpp"
#include "resolvent/certify/system.hpp"

namespace resolvent::certify {

struct CertifiedNonResultant {
    /// Every unit x has max_i |f_i(x)| >= this.
    double min_lower_bound = 0.0;
};

struct CommonZeroWitness {
    Vec3 point;
    double residual = 0.0;
};

struct Inconclusive {
    int depth_reached = 0;
};

using CertResult = std::variant<CertifiedNonResultant, CommonZeroWitness, Inconclusive>;

[[nodiscard]] inline bool is_certified(const CertResult& r) {
    return std::holds_alternative<CertifiedNonResultant>(r);
}

/// Tolerance on max_i |f_i(x)| for accepting a common zero.
[[nodiscard]] double witness_tolerance(const QuadraticSystem& f);

/// Newton refinement of a common zero on the sphere starting at x0; the
/// refined unit vector if its residual is within witness_tolerance.
[[nodiscard]] std::optional<Vec3> refine_common_zero(const QuadraticSystem& f, const Vec3& x0);

/// Subdivision of the hemisphere cover with the Lipschitz exclusion test.
/// k = 0 raises DegenerateInputError; max_depth < 1 raises PreconditionError.
[[nodiscard]] CertResult certify_nonresultant(const QuadraticSystem& f, int max_depth);

struct DegreeRoot {
    Vec3 point;       // a solution of F(x) parallel to v, up to sign
    bool positive;    // <F(x), v> > 0
    double jacobian_condition;
};

struct DegreeResult {
    int degree = 0;
    Vec3 value;                    // regular value actually used
    std::vector<DegreeRoot> roots;  // every solution in RP^2 of F(x) || v
    int retries = 0;
};

/// Roots in RP^2 of F(x) x v = 0 for a k = 3 system, certified complete by
/// the subdivision with Kantorovich balls. Empty optional when some cell
/// cannot be separated or a root is degenerate at max_depth.
[[nodiscard]] std::optional<std::vector<DegreeRoot>> parallel_solutions(const QuadraticSystem& f, const Vec3& v,
                                                                       int max_depth);

/// Mod-2 degree of x -> F(x)/|F(x)| from RP^2 to S^2. v is tried first,
/// then up to 20 fresh values drawn from seed. k != 3 raises ArityError;
/// an uncertified F raises PreconditionError; exhausted retries raise
/// RegularValueNotFound.
[[nodiscard]] DegreeResult mod2_degree(const QuadraticSystem& f, const Vec3& v, int max_depth,
                                       std::uint64_t seed = 1);

struct PathResult {
    bool certified = false;
    double t_fail = 0.0;  // midpoint of the failing t-interval
};

/// Certifies (1 - t) F + t G free of common zeros for all t in [0, 1].
/// Uncertified endpoints raise PreconditionError.
[[nodiscard]] PathResult certify_path(const QuadraticSystem& f, const QuadraticSystem& g, int max_depth);

}  // namespace resolvent::certify
