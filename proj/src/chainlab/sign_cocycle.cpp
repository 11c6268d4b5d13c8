#include "resolvent/chainlab/sign_cocycle.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "resolvent/errors.hpp"

namespace resolvent::chainlab {

SignCocycle SignCocycle::trivial(const SimplicialPair& p) {
    SignCocycle c;
    c.fingerprint_ = p.fingerprint();
    c.signs_.assign(p.count(1), 1);
    return c;
}

SignCocycle SignCocycle::from_edges(const SimplicialPair& p,
                                    const std::vector<std::tuple<Vertex, Vertex, int>>& signs) {
    SignCocycle c = trivial(p);
    for (const auto& [u, v, s] : signs) {
        auto e = p.edge_index(u, v);
        if (!e) throw DataError("no edge " + std::to_string(u) + "-" + std::to_string(v));
        if (s != 1 && s != -1) throw DataError("edge sign must be +1 or -1");
        c.signs_[*e] = static_cast<std::int8_t>(s);
    }
    return c;
}

SignCocycle SignCocycle::from_signs(const SimplicialPair& p, std::vector<std::int8_t> edge_signs) {
    if (edge_signs.size() != p.count(1)) throw ShapeError("one sign per edge expected");
    for (auto s : edge_signs) {
        if (s != 1 && s != -1) throw DataError("edge sign must be +1 or -1");
    }
    SignCocycle c;
    c.fingerprint_ = p.fingerprint();
    c.signs_ = std::move(edge_signs);
    return c;
}

void SignCocycle::check_attached(const SimplicialPair& p) const {
    if (p.fingerprint() != fingerprint_ || p.count(1) != signs_.size()) {
        throw ReferenceError("sign cocycle belongs to a different complex");
    }
}

int SignCocycle::sign(const SimplicialPair& p, Vertex u, Vertex v) const {
    check_attached(p);
    auto e = p.edge_index(u, v);
    if (!e) throw DataError("no edge " + std::to_string(u) + "-" + std::to_string(v));
    return signs_[*e];
}

bool SignCocycle::is_trivial() const {
    return std::all_of(signs_.begin(), signs_.end(), [](std::int8_t s) { return s == 1; });
}

SignCocycle SignCocycle::gauge_flip(const SimplicialPair& p, Vertex v) const {
    check_attached(p);
    SignCocycle out = *this;
    for (std::size_t e = 0; e < p.count(1); ++e) {
        auto s = p.simplex(1, e);
        if (s[0] == v || s[1] == v) out.signs_[e] = static_cast<std::int8_t>(-out.signs_[e]);
    }
    return out;
}

SignCocycle tensor_cocycles(const SignCocycle& a, const SignCocycle& b) {
    if (a.fingerprint_ != b.fingerprint_ || a.signs_.size() != b.signs_.size()) {
        throw ReferenceError("tensor of cocycles on different complexes");
    }
    SignCocycle out = a;
    for (std::size_t e = 0; e < out.signs_.size(); ++e) out.signs_[e] = static_cast<std::int8_t>(a.signs_[e] * b.signs_[e]);
    return out;
}

SignCocycle tensor_power(const SimplicialPair& p, const SignCocycle& a, int n) {
    a.check_attached(p);
    SignCocycle out = SignCocycle::trivial(p);
    for (int i = 0; i < n; ++i) out = tensor_cocycles(out, a);
    return out;
}

namespace {

struct StarOrientation {
    std::vector<std::vector<std::uint32_t>> star;           // top simplices at each vertex
    std::vector<std::vector<std::int8_t>> sign;             // parallel to star; 0 when undefined
    std::vector<bool> defined;
};

StarOrientation orient_stars(const SimplicialPair& p) {
    StarOrientation so;
    const int n = p.dimension();
    so.star.assign(p.num_vertices(), {});
    so.sign.assign(p.num_vertices(), {});
    so.defined.assign(p.num_vertices(), false);
    if (n < 0) return so;
    const std::size_t tops = p.count(n);
    for (std::size_t t = 0; t < tops; ++t) {
        for (Vertex v : p.simplex(n, t)) so.star[v].push_back(static_cast<std::uint32_t>(t));
    }
    if (n == 0) {
        for (std::size_t v = 0; v < p.num_vertices(); ++v) {
            so.sign[v].assign(so.star[v].size(), 1);
            so.defined[v] = true;
        }
        return so;
    }
    // cofaces of each codimension-one face as (top, dropped position)
    std::vector<std::vector<std::pair<std::uint32_t, std::uint8_t>>> cof(p.count(n - 1));
    Simplex face;
    for (std::size_t t = 0; t < tops; ++t) {
        auto s = p.simplex(n, t);
        for (std::size_t drop = 0; drop <= static_cast<std::size_t>(n); ++drop) {
            face.clear();
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (j != drop) face.push_back(s[j]);
            }
            cof[*p.index_of(face)].emplace_back(static_cast<std::uint32_t>(t), static_cast<std::uint8_t>(drop));
        }
    }
    std::vector<std::int8_t> mark(tops, 0);
    for (std::size_t u = 0; u < p.num_vertices(); ++u) {
        const auto& st = so.star[u];
        if (st.empty()) continue;
        bool ok = true;
        std::deque<std::uint32_t> queue{st.front()};
        mark[st.front()] = 1;
        while (!queue.empty() && ok) {
            const std::uint32_t t = queue.front();
            queue.pop_front();
            auto s = p.simplex(n, t);
            for (std::size_t drop = 0; drop < s.size() && ok; ++drop) {
                if (s[drop] == u) continue;
                face.clear();
                for (std::size_t j = 0; j < s.size(); ++j) {
                    if (j != drop) face.push_back(s[j]);
                }
                const auto& c = cof[*p.index_of(face)];
                if (c.size() > 2) {
                    ok = false;
                } else if (c.size() == 2) {
                    const auto [other, odrop] = c[0].first == t ? c[1] : c[0];
                    // induced orientations on the shared face must be opposite
                    const int parity = ((drop + odrop) % 2 == 0) ? 1 : -1;
                    const std::int8_t want = static_cast<std::int8_t>(-mark[t] * parity);
                    if (mark[other] == 0) {
                        mark[other] = want;
                        queue.push_back(other);
                    } else if (mark[other] != want) {
                        ok = false;
                    }
                }
            }
        }
        for (std::uint32_t t : st) {
            if (mark[t] == 0) ok = false;
        }
        if (ok) {
            so.defined[u] = true;
            for (std::uint32_t t : st) so.sign[u].push_back(mark[t]);
        }
        for (std::uint32_t t : st) mark[t] = 0;
    }
    return so;
}

}  // namespace

std::vector<bool> orientable_star_vertices(const SimplicialPair& p) { return orient_stars(p).defined; }

SignCocycle orientation_cocycle(const SimplicialPair& p) {
    const StarOrientation so = orient_stars(p);
    std::vector<std::int8_t> signs(p.count(1), 1);
    const int n = p.dimension();
    for (std::size_t e = 0; e < p.count(1); ++e) {
        auto s = p.simplex(1, e);
        const Vertex u = s[0], v = s[1];
        if (!so.defined[u] || !so.defined[v]) continue;
        const auto& su = so.star[u];
        const auto& sv = so.star[v];
        for (std::size_t a = 0; a < su.size(); ++a) {
            auto top = p.simplex(n, su[a]);
            if (!std::binary_search(top.begin(), top.end(), v)) continue;
            const auto b = static_cast<std::size_t>(std::lower_bound(sv.begin(), sv.end(), su[a]) - sv.begin());
            signs[e] = static_cast<std::int8_t>(so.sign[u][a] * so.sign[v][b]);
            break;
        }
    }
    return SignCocycle::from_signs(p, std::move(signs));
}

}  // namespace resolvent::chainlab
