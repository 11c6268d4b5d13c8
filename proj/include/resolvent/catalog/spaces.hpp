#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "resolvent/chainlab/sign_cocycle.hpp"
#include "resolvent/chainlab/simplicial_pair.hpp"

namespace resolvent::catalog {

enum class Provenance { Constructed, Trusted };

/// Rank-1 local systems used on the bases: a bit for the orientation system and
/// a bit for the point-permutation sign. Tensor product is xor.
enum class Twist : unsigned { Trivial = 0, Or = 1, Pm = 2, OrPm = 3 };

[[nodiscard]] Twist tensor(Twist a, Twist b);
[[nodiscard]] Twist tensor_power(Twist a, int k);
[[nodiscard]] std::string twist_name(Twist t);
/// Accepts trivial, or, pm, or+pm. DataError otherwise.
[[nodiscard]] Twist parse_twist(const std::string& s);

/// Graded dimensions, degree -> dim, zero entries omitted.
using GradedDims = std::map<int, std::size_t>;

[[nodiscard]] GradedDims to_graded(const std::vector<std::size_t>& dims, int shift = 0);

enum class ModelKind {
    Complex,       // a simplicial pair with cocycles
    CoverSummand,  // read off from an S_j-cover whose homology vanishes
    ClosedForm     // trusted table
};

struct SpaceModel {
    std::string name;
    std::string summary;
    ModelKind kind = ModelKind::Complex;
    Provenance provenance = Provenance::Constructed;
    std::string citation;           // set for trusted entries
    bool long_running = false;      // only built when explicitly allowed
    std::vector<Twist> twists;      // local systems the model carries
};

[[nodiscard]] const std::vector<SpaceModel>& space_models();
/// DataError on an unknown name.
[[nodiscard]] const SpaceModel& space_model(const std::string& name);

struct BuiltModel {
    chainlab::SimplicialPair pair;
    std::map<Twist, chainlab::SignCocycle> cocycles;
};

/// Builds (once, thread-safe) a Complex-kind model. Long-running models need
/// allow_long, else UnsupportedSizeError.
[[nodiscard]] const BuiltModel& build_model(const std::string& name, bool allow_long = false);

/// Borel-Moore homology of the model with the given twist. Complex models are
/// computed, cover summands derived from their cover, closed forms returned
/// as stored.
[[nodiscard]] GradedDims model_homology(const std::string& name, Twist twist, bool allow_long = false);

// Individual constructions, exposed for tests.
[[nodiscard]] chainlab::SimplicialPair rp2_model();
[[nodiscard]] chainlab::SimplicialPair circle_model();
[[nodiscard]] chainlab::SimplicialPair moebius_model();
[[nodiscard]] chainlab::SimplicialPair open_interval_model();
/// Boundary of the cyclic polytope C(n, d) via Gale evenness; a (d-1)-sphere.
[[nodiscard]] chainlab::SimplicialPair cyclic_polytope_boundary(std::size_t n, std::size_t d);

/// (RP^2)^j with its fat diagonal as subcomplex; j in {2, 3} else UnsupportedSizeError.
[[nodiscard]] chainlab::SimplicialPair model_ordered_config(int j);

/// Unordered j-point configurations of base as an orbit complex of the
/// subdivided j-th power; carries "or", "pm" and their product.
[[nodiscard]] BuiltModel unordered_config_model(const chainlab::SimplicialPair& base, int j);

/// B(RP^2, 2) as a quotient of the subdivided square of RP^2.
[[nodiscard]] const BuiltModel& model_b_rp2_2();

}  // namespace resolvent::catalog
