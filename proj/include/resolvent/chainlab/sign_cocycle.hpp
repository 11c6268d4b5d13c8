#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "resolvent/chainlab/simplicial_pair.hpp"

namespace resolvent::chainlab {

/// Rank-1 local system over Q given by a sign on every edge of K.
class SignCocycle {
public:
    SignCocycle() = default;

    static SignCocycle trivial(const SimplicialPair& p);
    /// Listed edges get the given sign, all others +1. Unknown edges or signs
    /// other than +-1 raise DataError.
    static SignCocycle from_edges(const SimplicialPair& p,
                                  const std::vector<std::tuple<Vertex, Vertex, int>>& signs);
    static SignCocycle from_signs(const SimplicialPair& p, std::vector<std::int8_t> edge_signs);

    [[nodiscard]] std::uint64_t fingerprint() const noexcept { return fingerprint_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return signs_.size(); }
    [[nodiscard]] int sign_at(std::size_t edge) const { return signs_[edge]; }
    /// Throws ReferenceError when p is not the complex this cocycle lives on.
    [[nodiscard]] int sign(const SimplicialPair& p, Vertex u, Vertex v) const;
    [[nodiscard]] bool is_trivial() const;
    [[nodiscard]] const std::vector<std::int8_t>& signs() const noexcept { return signs_; }

    /// Coboundary change: flips every edge incident to v.
    [[nodiscard]] SignCocycle gauge_flip(const SimplicialPair& p, Vertex v) const;

    void check_attached(const SimplicialPair& p) const;

    friend bool operator==(const SignCocycle&, const SignCocycle&) = default;
    friend SignCocycle tensor_cocycles(const SignCocycle& a, const SignCocycle& b);

private:
    std::uint64_t fingerprint_ = 0;
    std::vector<std::int8_t> signs_;
};

/// Pointwise product. Cocycles on different complexes raise ReferenceError.
[[nodiscard]] SignCocycle tensor_cocycles(const SignCocycle& a, const SignCocycle& b);

/// a tensored with itself n times (trivial for n = 0).
[[nodiscard]] SignCocycle tensor_power(const SimplicialPair& p, const SignCocycle& a, int n);

/**
 * Orientation system of a pure complex whose vertex stars are orientable.
 * Each vertex star is oriented by walking its top simplices across shared
 * codimension-one faces; the sign of an edge uv compares the orientations at u
 * and v on a top simplex through both. Edges at vertices whose star is not a
 * manifold star, or not orientable, get +1.
 */
[[nodiscard]] SignCocycle orientation_cocycle(const SimplicialPair& p);

/// Vertices whose star passed the orientability walk in orientation_cocycle.
[[nodiscard]] std::vector<bool> orientable_star_vertices(const SimplicialPair& p);

}  // namespace resolvent::chainlab
