#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "resolvent/chainlab/sign_cocycle.hpp"
#include "resolvent/chainlab/simplicial_pair.hpp"

namespace resolvent::chainlab {

/**
 * Staircase triangulation of |a| x |b|: simplices are chains of vertex pairs
 * increasing in both coordinates. Vertex (x, y) gets id x * b.num_vertices() + y.
 * Sub = (a.sub x b) u (a x b.sub).
 */
[[nodiscard]] SimplicialPair product(const SimplicialPair& a, const SimplicialPair& b);

/// Simplices of product(a, a) lying on the diagonal {x = y}, as facets.
[[nodiscard]] std::vector<Simplex> product_diagonal(const SimplicialPair& prod, std::size_t factor_vertices);

/// j-fold staircase power. Vertex (x_1, ..., x_j) has mixed-radix id with x_1
/// most significant. With fat_diagonal, every simplex lying in some {x_i = x_l}
/// is added to the subcomplex.
[[nodiscard]] SimplicialPair power(const SimplicialPair& a, int j, bool fat_diagonal);

/// Coordinates of a vertex of power(a, j).
[[nodiscard]] std::vector<Vertex> power_coordinates(Vertex v, std::size_t factor_vertices, int j);
[[nodiscard]] Vertex power_vertex(const std::vector<Vertex>& coords, std::size_t factor_vertices);

/// Join with b's vertices shifted by a.num_vertices().
/// Sub = (a.sub * b) u (a * b.sub).
[[nodiscard]] SimplicialPair join(const SimplicialPair& a, const SimplicialPair& b);
[[nodiscard]] SimplicialPair cone(const SimplicialPair& a);
[[nodiscard]] SimplicialPair suspension(const SimplicialPair& a);

struct Subdivision {
    SimplicialPair pair;
    /// New vertex -> (dimension, index) of the simplex it is the barycenter of.
    std::vector<std::pair<int, std::size_t>> barycenter_of;
};

/// Barycentric subdivision; sd(L) is a full subcomplex of sd(K).
[[nodiscard]] Subdivision barycentric_subdivision(const SimplicialPair& p);

/// Action on sd vertices induced by a simplicial vertex permutation of p.
[[nodiscard]] std::vector<Vertex> induced_action(const SimplicialPair& p, const Subdivision& sd,
                                                 const std::vector<Vertex>& perm);

struct GroupElement {
    std::vector<Vertex> perm;
    int sign = 1;
};

struct Quotient {
    SimplicialPair pair;
    /// Original vertex -> quotient vertex.
    std::vector<Vertex> orbit_of;
    /// Sign character pushed down to edges off the subcomplex; +1 on edges
    /// touching it.
    SignCocycle sign_system;
};

/**
 * Orbit complex of a finite group acting simplicially. Quotient vertices are
 * numbered with orbits outside L first, so the transport in boundary_matrices
 * only reads signs on edges between such vertices. Raises IntegrityError if a
 * simplex meets an orbit twice, if two orbits of simplices share a vertex set,
 * or if the sign character is not well defined on an orbit outside L.
 */
[[nodiscard]] Quotient orbit_quotient(const SimplicialPair& p, const std::vector<GroupElement>& group);

}  // namespace resolvent::chainlab
