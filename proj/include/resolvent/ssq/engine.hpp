#pragma once

#include <map>
#include <vector>

#include "resolvent/catalog/strata.hpp"
#include "resolvent/ssq/poincare.hpp"
#include "resolvent/ssq/table.hpp"

namespace resolvent::ssq {

using catalog::GradedDims;

/// Entry (p, q) is the stored homology of column p in total degree p + q.
[[nodiscard]] E1Table assemble_e1(const std::vector<catalog::StratumDescriptor>& strata, int k, int ambient_dim);

/// Applies the specs page by page. A rank exceeding what is left at either end
/// raises ContradictionError; a malformed target raises DataError.
[[nodiscard]] E1Table apply_differentials(const E1Table& t, std::vector<DifferentialSpec> specs);

/// (source, target) with total degrees differing by one and the target in an
/// earlier column, both currently nonzero.
[[nodiscard]] std::vector<DifferentialSpec> admissible_differentials(const E1Table& t);

/// Every assignment of ranks to the candidate differentials that fits the
/// dimensions. Each pattern lists its nonzero differentials.
[[nodiscard]] std::vector<std::vector<DifferentialSpec>> enumerate_patterns(
    const E1Table& t, const std::vector<DifferentialSpec>& candidates);

/// The unique pattern of differentials out of cells of total degree
/// >= ambient_dim that kills all of them. None: InconsistencyError; several:
/// AmbiguityError listing them.
[[nodiscard]] std::vector<DifferentialSpec> force_by_dimension(const E1Table& t);

struct Assignment {
    std::map<Cell, std::size_t> unknown_values;
    std::vector<DifferentialSpec> differentials;
};

/// Fills unknown entries and differential ranks so that the surviving total
/// equals target. The solution must be unique (else AmbiguityError, or
/// InconsistencyError when there is none).
[[nodiscard]] Assignment solve_by_consistency(const E1Table& t, const GradedDims& target);

/// Raises InconsistencyError naming k if an admissible differential remains.
void check_positional(const E1Table& einf);

/// Total-degree dims of the surviving entries.
[[nodiscard]] GradedDims total_homology(const E1Table& einf);

/// Reduced cohomology of the complement through Alexander duality in
/// R^ambient, plus 1 in degree 0. Negative degrees raise IntegrityError.
[[nodiscard]] PoincarePolynomial total_and_dualize(const E1Table& einf);

[[nodiscard]] PoincarePolynomial to_polynomial(const GradedDims& g);

}  // namespace resolvent::ssq
