#pragma once

#include <vector>

#include "resolvent/catalog/strata.hpp"
#include "resolvent/ssq/engine.hpp"

namespace resolvent::ssq {

/// One run of the sequence: E1, the differentials used, the surviving page and
/// the resulting Poincare polynomial of the complement.
struct PipelineResult {
    int k = 0;
    catalog::Parity parity = catalog::Parity::Even;
    E1Table e1;
    std::vector<DifferentialSpec> differentials;
    E1Table einf;
    GradedDims bm_total;
    PoincarePolynomial poincare;
};

/// Differentials established by geometric arguments rather than by the
/// dimension count: for odd k the first differential from the conic column to
/// the two-line column is an isomorphism on the shared row.
[[nodiscard]] std::vector<DifferentialSpec> known_differentials(int k);

/// Systems of k quadratic forms on R^3, k >= 2 (smaller k: DataError).
[[nodiscard]] PipelineResult quadratic_pipeline(int k);

/// Expansion of the closed formulas for the quadratic case, k >= 2.
[[nodiscard]] PoincarePolynomial theorem1_closed_form(int k);

/// Systems of k linear forms on R^3 with a common nonzero root removed; the
/// complement is the Stiefel manifold of 3-frames in R^k. k >= 3.
[[nodiscard]] PipelineResult linear_pipeline(int k);
[[nodiscard]] PoincarePolynomial stiefel_poincare(int k);
[[nodiscard]] PoincarePolynomial stiefel_closed_form(int k);

/// Filtration of the r-th self-join of a circle. The total is solved against
/// the homology of the boundary of a cyclic 2r-polytope on 2r+2 vertices,
/// computed in chainlab. With verify_columns each column's stored homology is
/// recomputed from its configuration-space model first (Fail: DataError).
[[nodiscard]] PipelineResult self_join_pipeline(int r, bool verify_columns = false);

struct LinkComputation {
    /// Possible homologies of the link at k = 0, one per differential pattern.
    std::vector<GradedDims> k0_candidates;
    E1Table k1_table;
    Assignment k1;
    E1Table k0_table;
    Assignment k0;
    /// Reduced homology of the link of the top stratum.
    GradedDims link_reduced;
};

/// Determines the ninth column for k = 1 and the link of the top stratum by
/// playing the k = 0 and k = 1 sequences against each other: the k = 1
/// complement is two convex cones, which pins the unknown entries, and that in
/// turn fixes the k = 0 differential.
[[nodiscard]] LinkComputation link_computation();

}  // namespace resolvent::ssq
