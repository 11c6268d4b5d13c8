#include "resolvent/chainlab/chain_complex.hpp"

#include <string>

#include "resolvent/errors.hpp"

namespace resolvent::chainlab {

using exactlin::Rational;
using exactlin::SparseMatrix;

ChainComplexQ::ChainComplexQ(std::vector<std::size_t> dims, std::vector<SparseMatrix> boundaries)
    : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
    const std::size_t expect = dims_.empty() ? 0 : dims_.size() - 1;
    if (boundaries_.size() != expect) throw ShapeError("chain complex: one boundary per positive degree");
    for (std::size_t i = 0; i < boundaries_.size(); ++i) {
        if (boundaries_[i].rows() != dims_[i] || boundaries_[i].cols() != dims_[i + 1]) {
            throw ShapeError("chain complex: boundary out of degree " + std::to_string(i + 1) +
                             " has the wrong shape");
        }
    }
    for (std::size_t i = 0; i + 1 < boundaries_.size(); ++i) {
        if (!exactlin::compose(boundaries_[i], boundaries_[i + 1]).is_zero()) {
            throw IntegrityError("boundary squared is nonzero in degree " + std::to_string(i + 2));
        }
    }
}

ChainComplexQ boundary_matrices(const SimplicialPair& p, const SignCocycle& lambda) {
    lambda.check_attached(p);
    const int top = p.dimension();
    if (top < 0) return {};
    // relative index of every simplex outside L
    std::vector<std::vector<std::size_t>> rel(static_cast<std::size_t>(top) + 1);
    std::vector<std::size_t> dims(static_cast<std::size_t>(top) + 1, 0);
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    for (int d = 0; d <= top; ++d) {
        rel[d].assign(p.count(d), kNone);
        for (std::size_t i = 0; i < p.count(d); ++i) {
            if (!p.in_sub(d, i)) rel[d][i] = dims[d]++;
        }
    }
    std::vector<SparseMatrix> boundaries;
    Simplex face;
    for (int d = 1; d <= top; ++d) {
        std::vector<SparseMatrix::Triplet> t;
        t.reserve(dims[d] * (static_cast<std::size_t>(d) + 1));
        for (std::size_t i = 0; i < p.count(d); ++i) {
            if (rel[d][i] == kNone) continue;
            auto s = p.simplex(d, i);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                face.clear();
                for (std::size_t j = 0; j < s.size(); ++j) {
                    if (j != drop) face.push_back(s[j]);
                }
                const std::size_t f = *p.index_of(face);
                if (rel[d - 1][f] == kNone) continue;
                int coef = (drop % 2 == 0) ? 1 : -1;
                if (drop == 0) coef *= lambda.sign_at(*p.edge_index(s[0], s[1]));
                t.emplace_back(rel[d - 1][f], rel[d][i], Rational(coef));
            }
        }
        boundaries.push_back(SparseMatrix::from_triplets(dims[d - 1], dims[d], std::move(t)));
    }
    return ChainComplexQ(std::move(dims), std::move(boundaries));
}

std::vector<std::size_t> homology_dims(const ChainComplexQ& c) {
    const auto& dims = c.dims();
    std::vector<std::size_t> ranks(dims.size() + 1, 0);
    for (std::size_t i = 1; i < dims.size(); ++i) ranks[i] = exactlin::rank(c.boundary(i));
    std::vector<std::size_t> betti(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i) betti[i] = dims[i] - ranks[i] - ranks[i + 1];
    return betti;
}

std::vector<std::size_t> borel_moore(const SimplicialPair& p, const SignCocycle& lambda) {
    return homology_dims(boundary_matrices(p, lambda));
}

std::vector<std::size_t> borel_moore(const SimplicialPair& p) {
    return borel_moore(p, SignCocycle::trivial(p));
}

long euler_characteristic(const std::vector<std::size_t>& dims) {
    long chi = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) chi += (i % 2 == 0 ? 1L : -1L) * static_cast<long>(dims[i]);
    return chi;
}

}  // namespace resolvent::chainlab
