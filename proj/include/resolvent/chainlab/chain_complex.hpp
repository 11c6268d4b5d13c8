#pragma once

#include <cstddef>
#include <vector>

#include "resolvent/chainlab/sign_cocycle.hpp"
#include "resolvent/chainlab/simplicial_pair.hpp"
#include "resolvent/exactlin/sparse_matrix.hpp"

namespace resolvent::chainlab {

/// Finite chain complex of Q-vector spaces in degrees 0..dims.size()-1.
class ChainComplexQ {
public:
    ChainComplexQ() = default;
    /// boundaries[i] is the map C_{i+1} -> C_i. Shapes are checked (ShapeError)
    /// and every composite must vanish (IntegrityError).
    ChainComplexQ(std::vector<std::size_t> dims, std::vector<exactlin::SparseMatrix> boundaries);

    [[nodiscard]] const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    /// The map out of degree i (i >= 1).
    [[nodiscard]] const exactlin::SparseMatrix& boundary(std::size_t i) const { return boundaries_.at(i - 1); }
    [[nodiscard]] std::size_t top_degree() const noexcept { return dims_.empty() ? 0 : dims_.size() - 1; }

private:
    std::vector<std::size_t> dims_;
    std::vector<exactlin::SparseMatrix> boundaries_;
};

/**
 * Relative chain complex of (K, L) with coefficients in lambda. Generators are
 * the simplices of K outside L, in index order. Face j of [v0..vd] carries
 * (-1)^j; face 0 additionally carries lambda(v0 v1), the transport from the
 * anchor v0 to the new minimal vertex. Faces in L are dropped.
 */
[[nodiscard]] ChainComplexQ boundary_matrices(const SimplicialPair& p, const SignCocycle& lambda);

/// Betti numbers, one per degree of the complex.
[[nodiscard]] std::vector<std::size_t> homology_dims(const ChainComplexQ& c);

/// Borel-Moore homology dims of |K| \ |L| with coefficients in lambda,
/// indexed 0..dim K.
[[nodiscard]] std::vector<std::size_t> borel_moore(const SimplicialPair& p, const SignCocycle& lambda);
[[nodiscard]] std::vector<std::size_t> borel_moore(const SimplicialPair& p);

[[nodiscard]] long euler_characteristic(const std::vector<std::size_t>& dims);

}  // namespace resolvent::chainlab
