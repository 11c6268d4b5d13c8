#pragma once

#include <map>
#include <string>
#include <vector>

#include "resolvent/catalog/spaces.hpp"

namespace resolvent::catalog {

enum class Parity { Even, Odd };

[[nodiscard]] Parity parity_of(int k);
[[nodiscard]] std::string parity_name(Parity p);

/// One graded piece: dimension `dim` in degree offset + slope * k.
struct DegreeTerm {
    int offset = 0;
    int slope = 0;
    std::size_t dim = 1;
};

/**
 * One column of a filtration. The stratum is a vector bundle of rank
 * fiber_vector_dim * k over (base x open cell of dimension fiber_cell_dim);
 * its Borel-Moore homology is that of the base with coefficients in
 * twist(parity), shifted by fiber_vector_dim * k + fiber_cell_dim.
 */
struct StratumDescriptor {
    int p = 0;
    std::string label;
    std::string base;
    int fiber_vector_dim = 0;
    int fiber_cell_dim = 0;
    Twist cell_twist = Twist::Trivial;
    Twist summand_twist = Twist::Trivial;
    std::map<Parity, std::vector<DegreeTerm>> bm_homology;
    Provenance provenance = Provenance::Constructed;
    std::vector<std::string> trusted_inputs;

    /// cell_twist tensored with k copies of summand_twist.
    [[nodiscard]] Twist twist(Parity parity) const;
    /// Stored homology at k; DataError if the parity branch is missing.
    [[nodiscard]] GradedDims bm_at(int k) const;
};

/// The nine merged columns of the quadratic resolution, ambient 6k.
[[nodiscard]] std::vector<StratumDescriptor> quadratic_strata(Parity parity);

/// Three columns of the linear toy case, ambient 3k.
[[nodiscard]] std::vector<StratumDescriptor> linear_strata(Parity parity);

/// Columns j = 1..r of the r-th self-join of a circle; r in 1..6.
[[nodiscard]] std::vector<StratumDescriptor> self_join_strata(int r);

enum class CheckStatus { Pass, Fail, Trusted, Deferred };

[[nodiscard]] std::string status_name(CheckStatus s);

struct SelfcheckReport {
    int p = 0;
    int k = 0;
    CheckStatus status = CheckStatus::Pass;
    GradedDims expected;
    GradedDims computed;
    std::vector<int> mismatched_degrees;
    std::string note;
};

/// Recomputes the column homology from the base model and compares it with
/// the stored data. Trusted bases are skipped; long-running bases are
/// deferred unless allow_long.
[[nodiscard]] SelfcheckReport stratum_selfcheck(const StratumDescriptor& d, int k, bool allow_long = false);

}  // namespace resolvent::catalog
