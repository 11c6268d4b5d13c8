#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "resolvent/chainlab/chain_complex.hpp"
#include "resolvent/chainlab/constructions.hpp"
#include "resolvent/chainlab/text_format.hpp"
#include "resolvent/errors.hpp"

using namespace resolvent::chainlab;
using resolvent::exactlin::Rational;
using resolvent::exactlin::SparseMatrix;
using Dims = std::vector<std::size_t>;

namespace {

SimplicialPair cycle(std::size_t n) {
    std::vector<Simplex> edges;
    for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
    return SimplicialPair::from_facets(n, edges);
}

SimplicialPair rp2() {
    return SimplicialPair::from_facets(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                           {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

SimplicialPair moebius() {
    std::vector<Simplex> tri, rim;
    for (Vertex i = 0; i < 5; ++i) {
        tri.push_back({i, (i + 1) % 5, (i + 2) % 5});
        rim.push_back({i, (i + 2) % 5});
    }
    return SimplicialPair::from_facets(5, tri, rim);
}

SimplicialPair point() { return SimplicialPair::from_facets(1, {{0}}); }

// Dense determinant over Q by plain elimination.
Rational dense_det(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

Dims convolve(const Dims& a, const Dims& b) {
    Dims out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

TEST_CASE("pair construction closes faces") {
    auto t = SimplicialPair::from_facets(3, {{2, 0, 1}});
    CHECK(t.dimension() == 2);
    CHECK(t.count(0) == 3);
    CHECK(t.count(1) == 3);
    CHECK(t.count(2) == 1);
    CHECK_THROWS_AS(SimplicialPair::from_facets(3, {{0, 0, 1}}), resolvent::DataError);
    CHECK_THROWS_AS(SimplicialPair::from_facets(2, {{0, 2}}), resolvent::DataError);
    CHECK_THROWS_AS(SimplicialPair::from_facets(3, {{0, 1}}, {{1, 2}}), resolvent::DataError);
    CHECK(rp2().count(1) == 15);
}

TEST_CASE("boundary matrices examples") {
    auto c = cycle(3);
    auto cx = boundary_matrices(c, SignCocycle::trivial(c));
    CHECK(cx.dims() == Dims{3, 3});
    CHECK(homology_dims(cx) == Dims{1, 1});
    auto disk = SimplicialPair::from_facets(3, {{0, 1, 2}}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(borel_moore(disk) == Dims{0, 0, 1});
}

TEST_CASE("hexagon with one reversed edge has no twisted homology") {
    auto hex = cycle(6);
    auto lambda = SignCocycle::from_edges(hex, {{0, 5, -1}});
    CHECK(borel_moore(hex, lambda) == Dims{0, 0});
    // independent oracle: the twisted 6x6 incidence matrix is invertible
    auto cx = boundary_matrices(hex, lambda);
    std::vector<std::vector<Rational>> dense(6, std::vector<Rational>(6));
    for (std::size_t col = 0; col < 6; ++col)
        for (const auto& e : cx.boundary(1).column(col)) dense[e.row][col] = e.value;
    CHECK_FALSE(dense_det(dense).is_zero());
}

TEST_CASE("homology of small closed spaces") {
    CHECK(borel_moore(point()) == Dims{1});
    CHECK(borel_moore(rp2()) == Dims{1, 0, 0});
    CHECK(euler_characteristic(borel_moore(rp2())) == 1);
    auto r = rp2();
    CHECK(borel_moore(r, orientation_cocycle(r)) == Dims{0, 0, 1});
    CHECK(borel_moore(SimplicialPair::from_facets(3, {{0, 1, 2}})) == Dims{1, 0, 0});
}

TEST_CASE("borel-moore of open models") {
    auto seg = SimplicialPair::from_facets(2, {{0, 1}}, {{0}, {1}});
    CHECK(borel_moore(seg) == Dims{0, 1});
    auto m = moebius();
    CHECK(borel_moore(m) == Dims{0, 0, 0});
    CHECK(borel_moore(m, orientation_cocycle(m)) == Dims{0, 1, 1});
}

TEST_CASE("staircase products") {
    auto seg = SimplicialPair::from_facets(2, {{0, 1}});
    auto sq = product(seg, seg);
    CHECK(sq.count(2) == 2);
    CHECK(sq.index_of(std::vector<Vertex>{0, 3}).has_value());
    CHECK(product_diagonal(sq, 2).size() == 3);
    CHECK(borel_moore(product(cycle(3), cycle(3))) == Dims{1, 2, 1});
    CHECK(borel_moore(product(rp2(), rp2())) == Dims{1, 0, 0, 0, 0});
}

TEST_CASE("joins, cones and suspensions") {
    auto s0 = SimplicialPair::from_facets(2, {{0}, {1}});
    CHECK(borel_moore(join(s0, s0)) == Dims{1, 1});
    CHECK(borel_moore(suspension(cycle(3))) == Dims{1, 0, 1});
    CHECK(borel_moore(join(cycle(3), cycle(4))) == Dims{1, 0, 0, 1});
    CHECK(borel_moore(cone(rp2())) == Dims{1, 0, 0, 0});
}

TEST_CASE("tensor of cocycles") {
    auto r = rp2();
    auto o = orientation_cocycle(r);
    CHECK_FALSE(o.is_trivial());
    CHECK(tensor_cocycles(o, o).is_trivial());
    CHECK(tensor_cocycles(SignCocycle::trivial(r), o) == o);
    CHECK(tensor_power(r, o, 3) == o);
    CHECK(tensor_power(r, o, 4).is_trivial());
    CHECK_THROWS_AS((void)tensor_cocycles(o, SignCocycle::trivial(cycle(3))), resolvent::ReferenceError);
    CHECK_THROWS_AS((void)borel_moore(cycle(3), o), resolvent::ReferenceError);
}

TEST_CASE("boundary squared is checked") {
    SparseMatrix d1 = SparseMatrix::from_triplets(1, 1, {{0, 0, 1}});
    SparseMatrix d2 = SparseMatrix::from_triplets(1, 1, {{0, 0, 1}});
    CHECK_THROWS_AS(ChainComplexQ({1, 1, 1}, {d1, d2}), resolvent::IntegrityError);
    CHECK_THROWS_AS(ChainComplexQ({1, 2}, {d1}), resolvent::ShapeError);
    // a sign on one edge of a filled triangle is not flat
    auto tri = SimplicialPair::from_facets(3, {{0, 1, 2}});
    CHECK_THROWS_AS((void)boundary_matrices(tri, SignCocycle::from_edges(tri, {{1, 2, -1}})),
                    resolvent::IntegrityError);
}

TEST_CASE("gauge changes leave homology unchanged") {
    std::mt19937_64 rng(3);
    for (auto make : {rp2, moebius}) {
        auto p = make();
        for (auto base : {SignCocycle::trivial(p), orientation_cocycle(p)}) {
            const Dims expect = borel_moore(p, base);
            auto lambda = base;
            for (int i = 0; i < 8; ++i) {
                lambda = lambda.gauge_flip(p, static_cast<Vertex>(rng() % p.num_vertices()));
                CHECK(borel_moore(p, lambda) == expect);
            }
        }
    }
}

TEST_CASE("barycentric subdivision preserves borel-moore homology") {
    for (auto make : {rp2, moebius}) {
        auto p = make();
        auto sd = barycentric_subdivision(p).pair;
        CHECK(borel_moore(sd) == borel_moore(p));
        CHECK(borel_moore(sd, orientation_cocycle(sd)) == borel_moore(p, orientation_cocycle(p)));
    }
}

TEST_CASE("double cover of the circle splits into trivial and twisted parts") {
    auto cover = cycle(6);
    auto base = cycle(3);
    auto twist = SignCocycle::from_edges(base, {{0, 2, -1}});
    const Dims up = borel_moore(cover);
    const Dims triv = borel_moore(base), tw = borel_moore(base, twist);
    for (std::size_t i = 0; i < up.size(); ++i) CHECK(up[i] == triv[i] + tw[i]);
}

TEST_CASE("kunneth for small pairs") {
    auto seg = SimplicialPair::from_facets(2, {{0, 1}}, {{0}, {1}});
    auto c = cycle(3);
    CHECK(borel_moore(product(seg, c)) == convolve(borel_moore(seg), borel_moore(c)));
    CHECK(borel_moore(product(c, seg)) == convolve(borel_moore(c), borel_moore(seg)));
    CHECK(borel_moore(product(seg, seg)) == convolve(borel_moore(seg), borel_moore(seg)));
    CHECK(borel_moore(product(rp2(), c)) == convolve(borel_moore(rp2()), borel_moore(c)));
}

TEST_CASE("unordered pairs on a circle as an orbit complex") {
    auto sq = power(cycle(3), 2, true);
    auto sd = barycentric_subdivision(sq);
    std::vector<Vertex> swap(sq.num_vertices());
    for (Vertex v = 0; v < swap.size(); ++v) {
        auto c = power_coordinates(v, 3, 2);
        swap[v] = power_vertex({c[1], c[0]}, 3);
    }
    std::vector<Vertex> id(sd.pair.num_vertices());
    for (Vertex v = 0; v < id.size(); ++v) id[v] = v;
    auto q = orbit_quotient(sd.pair, {{id, 1}, {induced_action(sq, sd, swap), -1}});
    CHECK(borel_moore(q.pair) == Dims{0, 0, 0});
    CHECK(borel_moore(q.pair, q.sign_system) == Dims{0, 1, 1});
    CHECK(borel_moore(q.pair, orientation_cocycle(q.pair)) == Dims{0, 1, 1});
    // the open configuration space itself is the cover
    CHECK(borel_moore(sd.pair) == Dims{0, 1, 1});
}

TEST_CASE("text format round trip") {
    auto m = moebius();
    auto o = orientation_cocycle(m);
    auto parsed = parse_text(to_text(m, &o));
    CHECK(parsed.pair.fingerprint() == m.fingerprint());
    CHECK(parsed.pair.sub_facets() == m.sub_facets());
    REQUIRE(parsed.cocycle.has_value());
    CHECK(*parsed.cocycle == o);
    CHECK_THROWS_AS((void)parse_text("vertices 2\nX 0 1\n"), resolvent::DataError);
}
