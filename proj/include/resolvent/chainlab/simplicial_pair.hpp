#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace resolvent::chainlab {

using Vertex = std::uint32_t;
using Simplex = std::vector<Vertex>;

/**
 * Finite simplicial complex K on vertices 0..n-1 together with a subcomplex L.
 * Stands for the open space |K| \ |L|.
 *
 * Simplices of each dimension are stored flat and sorted lexicographically, so
 * a simplex is addressed by (dimension, index). Every vertex id below
 * num_vertices() is a 0-simplex of K.
 */
class SimplicialPair {
public:
    SimplicialPair() = default;

    /// Face closure of the given facets. Vertex lists are sorted on input;
    /// repeated vertices or ids >= n_vertices raise DataError. Facets of L must
    /// be simplices of K.
    static SimplicialPair from_facets(std::size_t n_vertices, const std::vector<Simplex>& k_facets,
                                      const std::vector<Simplex>& l_facets = {});

    /// Same K, new subcomplex.
    [[nodiscard]] SimplicialPair with_sub(const std::vector<Simplex>& l_facets) const;

    [[nodiscard]] std::size_t num_vertices() const noexcept { return n_vertices_; }
    /// -1 for the empty complex.
    [[nodiscard]] int dimension() const noexcept { return static_cast<int>(flat_.size()) - 1; }
    [[nodiscard]] std::size_t count(int d) const;
    [[nodiscard]] std::size_t total_count() const;
    [[nodiscard]] std::span<const Vertex> simplex(int d, std::size_t i) const;
    [[nodiscard]] Simplex simplex_vec(int d, std::size_t i) const;
    [[nodiscard]] std::optional<std::size_t> index_of(std::span<const Vertex> s) const;

    [[nodiscard]] bool in_sub(int d, std::size_t i) const { return sub_[d][i] != 0; }
    [[nodiscard]] std::size_t sub_count(int d) const;
    [[nodiscard]] bool sub_empty() const;

    /// Maximal simplices of K (resp. L).
    [[nodiscard]] std::vector<Simplex> facets() const;
    [[nodiscard]] std::vector<Simplex> sub_facets() const;

    /// Hash of n and of K; L does not enter, so cocycles survive with_sub.
    [[nodiscard]] std::uint64_t fingerprint() const noexcept { return fingerprint_; }

    /// Edge index of {u, v} in dimension 1, any order.
    [[nodiscard]] std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

private:
    void mark_sub(const std::vector<Simplex>& l_facets);
    [[nodiscard]] std::vector<Simplex> maximal(bool sub_only) const;

    std::size_t n_vertices_ = 0;
    std::vector<std::vector<Vertex>> flat_;
    std::vector<std::vector<char>> sub_;
    std::uint64_t fingerprint_ = 0;
};

}  // namespace resolvent::chainlab
