#include "resolvent/chainlab/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "resolvent/errors.hpp"

namespace resolvent::chainlab {

namespace {

// Staircase chains of the cell sigma x tau.
void staircase(const Simplex& s, const Simplex& t, std::size_t nb, std::vector<Simplex>& out) {
    const std::size_t p = s.size() - 1, q = t.size() - 1, steps = p + q;
    // choose which of the steps advance the first coordinate
    std::vector<char> advance(steps, 0);
    std::fill(advance.begin(), advance.begin() + static_cast<std::ptrdiff_t>(p), 1);
    std::sort(advance.begin(), advance.end());
    do {
        Simplex chain;
        chain.reserve(steps + 1);
        std::size_t x = 0, y = 0;
        chain.push_back(static_cast<Vertex>(s[x] * nb + t[y]));
        for (char a : advance) {
            if (a) {
                ++x;
            } else {
                ++y;
            }
            chain.push_back(static_cast<Vertex>(s[x] * nb + t[y]));
        }
        out.push_back(std::move(chain));
    } while (std::next_permutation(advance.begin(), advance.end()));
}

std::vector<Simplex> staircase_all(const std::vector<Simplex>& fa, const std::vector<Simplex>& fb, std::size_t nb) {
    std::vector<Simplex> out;
    for (const auto& s : fa) {
        for (const auto& t : fb) staircase(s, t, nb, out);
    }
    return out;
}

}  // namespace

SimplicialPair product(const SimplicialPair& a, const SimplicialPair& b) {
    const std::size_t nb = b.num_vertices();
    const auto fa = a.facets(), fb = b.facets();
    std::vector<Simplex> sub = staircase_all(a.sub_facets(), fb, nb);
    auto more = staircase_all(fa, b.sub_facets(), nb);
    sub.insert(sub.end(), more.begin(), more.end());
    return SimplicialPair::from_facets(a.num_vertices() * nb, staircase_all(fa, fb, nb), sub);
}

std::vector<Simplex> product_diagonal(const SimplicialPair& prod, std::size_t factor_vertices) {
    std::vector<Simplex> out;
    for (int d = 0; d <= prod.dimension(); ++d) {
        for (std::size_t i = 0; i < prod.count(d); ++i) {
            auto s = prod.simplex(d, i);
            if (std::all_of(s.begin(), s.end(), [&](Vertex v) {
                    return v / factor_vertices == v % factor_vertices;
                })) {
                out.push_back({s.begin(), s.end()});
            }
        }
    }
    return out;
}

std::vector<Vertex> power_coordinates(Vertex v, std::size_t factor_vertices, int j) {
    std::vector<Vertex> c(static_cast<std::size_t>(j));
    for (int i = j - 1; i >= 0; --i) {
        c[i] = static_cast<Vertex>(v % factor_vertices);
        v = static_cast<Vertex>(v / factor_vertices);
    }
    return c;
}

Vertex power_vertex(const std::vector<Vertex>& coords, std::size_t factor_vertices) {
    std::size_t v = 0;
    for (Vertex c : coords) v = v * factor_vertices + c;
    return static_cast<Vertex>(v);
}

SimplicialPair power(const SimplicialPair& a, int j, bool fat_diagonal) {
    if (j < 1) throw DataError("power needs j >= 1");
    SimplicialPair out = a;
    for (int i = 1; i < j; ++i) out = product(out, a);
    if (!fat_diagonal || j == 1) return out;
    const std::size_t n = a.num_vertices();
    std::vector<Simplex> sub = out.sub_facets();
    std::vector<std::vector<Vertex>> coords(out.num_vertices());
    for (Vertex v = 0; v < out.num_vertices(); ++v) coords[v] = power_coordinates(v, n, j);
    for (int d = out.dimension(); d >= 0; --d) {
        for (std::size_t idx = 0; idx < out.count(d); ++idx) {
            auto s = out.simplex(d, idx);
            bool diagonal = false;
            for (int x = 0; x < j && !diagonal; ++x) {
                for (int y = x + 1; y < j && !diagonal; ++y) {
                    diagonal = std::all_of(s.begin(), s.end(), [&](Vertex v) { return coords[v][x] == coords[v][y]; });
                }
            }
            if (diagonal) sub.push_back({s.begin(), s.end()});
        }
    }
    return out.with_sub(sub);
}

SimplicialPair join(const SimplicialPair& a, const SimplicialPair& b) {
    const auto shift = static_cast<Vertex>(a.num_vertices());
    auto joined = [&](const std::vector<Simplex>& fa, const std::vector<Simplex>& fb) {
        std::vector<Simplex> out;
        for (const auto& s : fa) {
            for (const auto& t : fb) {
                Simplex u = s;
                for (Vertex v : t) u.push_back(v + shift);
                out.push_back(std::move(u));
            }
        }
        return out;
    };
    const auto fa = a.facets(), fb = b.facets();
    std::vector<Simplex> facets = joined(fa, fb);
    if (fa.empty()) {
        for (auto t : fb) {
            for (auto& v : t) v += shift;
            facets.push_back(t);
        }
    }
    if (fb.empty()) facets.insert(facets.end(), fa.begin(), fa.end());
    std::vector<Simplex> sub = joined(a.sub_facets(), fb);
    auto more = joined(fa, b.sub_facets());
    sub.insert(sub.end(), more.begin(), more.end());
    return SimplicialPair::from_facets(a.num_vertices() + b.num_vertices(), facets, sub);
}

SimplicialPair cone(const SimplicialPair& a) { return join(a, SimplicialPair::from_facets(1, {{0}})); }

SimplicialPair suspension(const SimplicialPair& a) {
    return join(a, SimplicialPair::from_facets(2, {{0}, {1}}));
}

Subdivision barycentric_subdivision(const SimplicialPair& p) {
    Subdivision sd;
    std::vector<std::size_t> offset(static_cast<std::size_t>(p.dimension()) + 2, 0);
    for (int d = 0; d <= p.dimension(); ++d) offset[d + 1] = offset[d] + p.count(d);
    sd.barycenter_of.reserve(offset.back());
    for (int d = 0; d <= p.dimension(); ++d) {
        for (std::size_t i = 0; i < p.count(d); ++i) sd.barycenter_of.emplace_back(d, i);
    }
    auto chains = [&](const std::vector<Simplex>& facets) {
        std::vector<Simplex> out;
        Simplex partial;
        for (const auto& f : facets) {
            Simplex order = f;
            do {
                Simplex chain;
                chain.reserve(order.size());
                partial.clear();
                for (std::size_t k = 0; k < order.size(); ++k) {
                    partial.insert(std::upper_bound(partial.begin(), partial.end(), order[k]), order[k]);
                    chain.push_back(static_cast<Vertex>(offset[k] + *p.index_of(partial)));
                }
                out.push_back(std::move(chain));
            } while (std::next_permutation(order.begin(), order.end()));
        }
        return out;
    };
    sd.pair = SimplicialPair::from_facets(offset.back(), chains(p.facets()), chains(p.sub_facets()));
    return sd;
}

std::vector<Vertex> induced_action(const SimplicialPair& p, const Subdivision& sd, const std::vector<Vertex>& perm) {
    if (perm.size() != p.num_vertices()) throw ShapeError("permutation size differs from vertex count");
    std::vector<std::size_t> offset(static_cast<std::size_t>(p.dimension()) + 2, 0);
    for (int d = 0; d <= p.dimension(); ++d) offset[d + 1] = offset[d] + p.count(d);
    std::vector<Vertex> out(sd.barycenter_of.size());
    Simplex image;
    for (std::size_t v = 0; v < out.size(); ++v) {
        const auto [d, i] = sd.barycenter_of[v];
        image.clear();
        for (Vertex x : p.simplex(d, i)) image.push_back(perm[x]);
        std::sort(image.begin(), image.end());
        auto j = p.index_of(image);
        if (!j) throw IntegrityError("vertex permutation is not simplicial");
        out[v] = static_cast<Vertex>(offset[d] + *j);
    }
    return out;
}

Quotient orbit_quotient(const SimplicialPair& p, const std::vector<GroupElement>& group) {
    const std::size_t n = p.num_vertices();
    for (const auto& g : group) {
        if (g.perm.size() != n) throw ShapeError("group element size differs from vertex count");
    }
    constexpr Vertex kUnset = static_cast<Vertex>(-1);
    // orbit representative = smallest id in the orbit
    std::vector<Vertex> rep(n, kUnset);
    std::vector<int> sign_of(n, 0);
    std::vector<char> ambiguous(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (rep[v] != kUnset) continue;
        for (const auto& g : group) {
            const Vertex w = g.perm[v];
            rep[w] = v;
            if (sign_of[w] == 0) {
                sign_of[w] = g.sign;
            } else if (sign_of[w] != g.sign) {
                ambiguous[w] = 1;
            }
        }
    }
    const bool sub_vertex_known = p.dimension() >= 0;
    auto vertex_in_sub = [&](Vertex v) { return sub_vertex_known && p.in_sub(0, v); };
    // number the orbits: those outside L first
    std::vector<Vertex> orbit_id(n, kUnset);
    Vertex next = 0;
    for (int pass = 0; pass < 2; ++pass) {
        for (Vertex v = 0; v < n; ++v) {
            if (rep[v] != v || vertex_in_sub(v) != (pass == 1)) continue;
            orbit_id[v] = next++;
        }
    }
    Quotient q;
    q.orbit_of.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        q.orbit_of[v] = orbit_id[rep[v]];
        if (ambiguous[v] && !vertex_in_sub(v)) {
            throw IntegrityError("sign character undefined at vertex " + std::to_string(v) + " outside the subcomplex");
        }
    }

    std::vector<Simplex> k_images, l_images;
    std::map<Simplex, Simplex> image_owner;  // image -> canonical simplex orbit
    Simplex moved, image;
    for (int d = 0; d <= p.dimension(); ++d) {
        for (std::size_t i = 0; i < p.count(d); ++i) {
            auto s = p.simplex(d, i);
            image.clear();
            for (Vertex v : s) image.push_back(q.orbit_of[v]);
            std::sort(image.begin(), image.end());
            if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
                throw IntegrityError("a simplex meets one orbit twice");
            }
            Simplex canonical(s.begin(), s.end());
            for (const auto& g : group) {
                moved.clear();
                for (Vertex v : s) moved.push_back(g.perm[v]);
                std::sort(moved.begin(), moved.end());
                if (moved < canonical) canonical = moved;
            }
            auto [it, fresh] = image_owner.emplace(image, canonical);
            if (!fresh && it->second != canonical) {
                throw IntegrityError("two simplex orbits share a vertex set");
            }
            if (fresh) {
                k_images.push_back(image);
                if (p.in_sub(d, i)) l_images.push_back(image);
            }
        }
    }
    q.pair = SimplicialPair::from_facets(next, k_images, l_images);

    std::vector<std::int8_t> signs(q.pair.count(1), 1);
    for (std::size_t e = 0; e < p.count(1); ++e) {
        auto s = p.simplex(1, e);
        if (vertex_in_sub(s[0]) || vertex_in_sub(s[1])) continue;
        const auto qe = *q.pair.edge_index(q.orbit_of[s[0]], q.orbit_of[s[1]]);
        signs[qe] = static_cast<std::int8_t>(sign_of[s[0]] * sign_of[s[1]]);
    }
    q.sign_system = SignCocycle::from_signs(q.pair, std::move(signs));
    return q;
}

}  // namespace resolvent::chainlab
