#include "resolvent/chainlab/simplicial_pair.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "resolvent/errors.hpp"

namespace resolvent::chainlab {

namespace {

// Sorts rows of the given width lexicographically and drops duplicates.
void sort_unique_rows(std::vector<Vertex>& flat, std::size_t width) {
    const std::size_t n = flat.size() / width;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto row = [&](std::size_t i) { return flat.data() + i * width; };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(row(a), row(a) + width, row(b), row(b) + width);
    });
    std::vector<Vertex> out;
    out.reserve(flat.size());
    for (std::size_t k = 0; k < n; ++k) {
        const Vertex* r = row(order[k]);
        if (k > 0 && std::equal(r, r + width, out.end() - static_cast<std::ptrdiff_t>(width))) continue;
        out.insert(out.end(), r, r + width);
    }
    flat = std::move(out);
}

Simplex normalized(const Simplex& s, std::size_t n_vertices) {
    Simplex out = s;
    std::sort(out.begin(), out.end());
    if (out.empty()) throw DataError("empty simplex");
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw DataError("simplex with repeated vertex");
    }
    if (out.back() >= n_vertices) {
        throw DataError("vertex id " + std::to_string(out.back()) + " outside 0.." +
                        std::to_string(n_vertices == 0 ? 0 : n_vertices - 1));
    }
    return out;
}

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
        h ^= (v >> (8 * b)) & 0xffu;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

SimplicialPair SimplicialPair::from_facets(std::size_t n_vertices, const std::vector<Simplex>& k_facets,
                                           const std::vector<Simplex>& l_facets) {
    SimplicialPair p;
    p.n_vertices_ = n_vertices;
    int top = n_vertices > 0 ? 0 : -1;
    std::vector<Simplex> facets;
    facets.reserve(k_facets.size());
    for (const auto& f : k_facets) {
        facets.push_back(normalized(f, n_vertices));
        top = std::max(top, static_cast<int>(facets.back().size()) - 1);
    }
    p.flat_.assign(static_cast<std::size_t>(top + 1), {});
    for (const auto& f : facets) {
        auto& level = p.flat_[f.size() - 1];
        level.insert(level.end(), f.begin(), f.end());
    }
    // Close downward one dimension at a time.
    for (int d = top; d >= 1; --d) {
        const std::size_t w = static_cast<std::size_t>(d) + 1;
        sort_unique_rows(p.flat_[d], w);
        auto& below = p.flat_[d - 1];
        const auto& level = p.flat_[d];
        for (std::size_t i = 0; i < level.size(); i += w) {
            for (std::size_t drop = 0; drop < w; ++drop) {
                for (std::size_t j = 0; j < w; ++j) {
                    if (j != drop) below.push_back(level[i + j]);
                }
            }
        }
    }
    if (top >= 0) {
        auto& verts = p.flat_[0];
        for (Vertex v = 0; v < n_vertices; ++v) verts.push_back(v);
        sort_unique_rows(verts, 1);
    }

    std::uint64_t h = fnv1a(0xcbf29ce484222325ULL, n_vertices);
    for (std::size_t d = 0; d < p.flat_.size(); ++d) {
        h = fnv1a(h, 0xffffffffULL + d);
        for (Vertex v : p.flat_[d]) h = fnv1a(h, v);
    }
    p.fingerprint_ = h;
    p.mark_sub(l_facets);
    return p;
}

void SimplicialPair::mark_sub(const std::vector<Simplex>& l_facets) {
    sub_.assign(flat_.size(), {});
    for (std::size_t d = 0; d < flat_.size(); ++d) sub_[d].assign(count(static_cast<int>(d)), 0);
    std::vector<std::vector<Vertex>> pending(flat_.size());
    for (const auto& f : l_facets) {
        Simplex s = normalized(f, n_vertices_);
        if (s.size() > flat_.size()) throw DataError("subcomplex simplex not in K");
        pending[s.size() - 1].insert(pending[s.size() - 1].end(), s.begin(), s.end());
    }
    for (int d = dimension(); d >= 0; --d) {
        const std::size_t w = static_cast<std::size_t>(d) + 1;
        auto& level = pending[d];
        sort_unique_rows(level, w);
        for (std::size_t i = 0; i < level.size(); i += w) {
            std::span<const Vertex> s(level.data() + i, w);
            auto idx = index_of(s);
            if (!idx) throw DataError("subcomplex simplex not in K");
            sub_[d][*idx] = 1;
            if (d == 0) continue;
            for (std::size_t drop = 0; drop < w; ++drop) {
                for (std::size_t j = 0; j < w; ++j) {
                    if (j != drop) pending[d - 1].push_back(s[j]);
                }
            }
        }
        level.clear();
        level.shrink_to_fit();
    }
}

SimplicialPair SimplicialPair::with_sub(const std::vector<Simplex>& l_facets) const {
    SimplicialPair p = *this;
    p.mark_sub(l_facets);
    return p;
}

std::size_t SimplicialPair::count(int d) const {
    if (d < 0 || d > dimension()) return 0;
    return flat_[d].size() / (static_cast<std::size_t>(d) + 1);
}

std::size_t SimplicialPair::total_count() const {
    std::size_t n = 0;
    for (int d = 0; d <= dimension(); ++d) n += count(d);
    return n;
}

std::span<const Vertex> SimplicialPair::simplex(int d, std::size_t i) const {
    const std::size_t w = static_cast<std::size_t>(d) + 1;
    return {flat_[d].data() + i * w, w};
}

Simplex SimplicialPair::simplex_vec(int d, std::size_t i) const {
    auto s = simplex(d, i);
    return {s.begin(), s.end()};
}

std::optional<std::size_t> SimplicialPair::index_of(std::span<const Vertex> s) const {
    if (s.empty() || s.size() > flat_.size()) return std::nullopt;
    const int d = static_cast<int>(s.size()) - 1;
    std::size_t lo = 0, hi = count(d);
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        auto m = simplex(d, mid);
        if (std::lexicographical_compare(m.begin(), m.end(), s.begin(), s.end())) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo < count(d)) {
        auto m = simplex(d, lo);
        if (std::equal(m.begin(), m.end(), s.begin(), s.end())) return lo;
    }
    return std::nullopt;
}

std::optional<std::size_t> SimplicialPair::edge_index(Vertex u, Vertex v) const {
    const Vertex e[2] = {std::min(u, v), std::max(u, v)};
    if (u == v) return std::nullopt;
    return index_of(e);
}

std::size_t SimplicialPair::sub_count(int d) const {
    if (d < 0 || d > dimension()) return 0;
    return static_cast<std::size_t>(std::count(sub_[d].begin(), sub_[d].end(), 1));
}

bool SimplicialPair::sub_empty() const {
    for (int d = 0; d <= dimension(); ++d) {
        if (sub_count(d) > 0) return false;
    }
    return true;
}

std::vector<Simplex> SimplicialPair::maximal(bool sub_only) const {
    // A simplex is maximal when no codimension-one coface contains it.
    std::vector<std::vector<char>> covered(flat_.size());
    for (int d = 0; d <= dimension(); ++d) covered[d].assign(count(d), 0);
    Simplex face;
    for (int d = dimension(); d >= 1; --d) {
        for (std::size_t i = 0; i < count(d); ++i) {
            if (sub_only && !in_sub(d, i)) continue;
            auto s = simplex(d, i);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                face.clear();
                for (std::size_t j = 0; j < s.size(); ++j) {
                    if (j != drop) face.push_back(s[j]);
                }
                covered[d - 1][*index_of(face)] = 1;
            }
        }
    }
    std::vector<Simplex> out;
    for (int d = dimension(); d >= 0; --d) {
        for (std::size_t i = 0; i < count(d); ++i) {
            if (covered[d][i]) continue;
            if (sub_only && !in_sub(d, i)) continue;
            out.push_back(simplex_vec(d, i));
        }
    }
    return out;
}

std::vector<Simplex> SimplicialPair::facets() const { return maximal(false); }

std::vector<Simplex> SimplicialPair::sub_facets() const { return maximal(true); }

}  // namespace resolvent::chainlab
