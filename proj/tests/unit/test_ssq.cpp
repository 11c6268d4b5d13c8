#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <random>
#include <set>

#include "resolvent/errors.hpp"
#include "resolvent/ssq/render.hpp"

using namespace resolvent::ssq;
using resolvent::catalog::Parity;
using resolvent::catalog::quadratic_strata;

namespace {

std::set<Cell> cells(std::initializer_list<std::pair<int, int>> l) {
    std::set<Cell> s;
    for (auto [p, q] : l) s.insert(Cell{p, q});
    return s;
}

std::set<Cell> support_of(const E1Table& t) {
    auto v = t.support();
    return {v.begin(), v.end()};
}

E1Table quadratic_e1(int k) {
    return assemble_e1(quadratic_strata(k % 2 == 0 ? Parity::Even : Parity::Odd), k, 6 * k);
}

// Exponents of the closed formulas multiplied out by hand: the even product
// has six monomials, the odd sum 1 + t^{k-1} plus four from the triple product.
PoincarePolynomial hand_expanded(int k) {
    std::vector<int> e = k % 2 == 0 ? std::vector<int>{0, k - 1, 3 * k - 9, 4 * k - 10, 5 * k - 14, 6 * k - 15}
                                    : std::vector<int>{0, k - 1, 3 * k - 7, 4 * k - 12, 5 * k - 10, 6 * k - 15};
    PoincarePolynomial p;
    for (int d : e) p += PoincarePolynomial::monomial(d);
    return p;
}

}  // namespace

TEST_CASE("poincare polynomial arithmetic") {
    PoincarePolynomial a{{0, 1}, {3, 1}};
    CHECK(a * a == PoincarePolynomial{{0, 1}, {3, 2}, {6, 1}});
    CHECK((a + PoincarePolynomial::monomial(3, -1)) == PoincarePolynomial{{0, 1}});
    CHECK(PoincarePolynomial{{2, 0}}.is_zero());
    CHECK(PoincarePolynomial{{0, 2}, {5, 1}, {9, 2}}.to_string() == "2 + t^5 + 2t^9");
    CHECK_FALSE(PoincarePolynomial{{0, 1}, {-2, 1}}.nonnegative());
    CHECK_FALSE(PoincarePolynomial{{0, 1}, {2, -1}}.nonnegative());
    CHECK(a.total() == 2);
}

TEST_CASE("E1 supports") {
    const auto k6 = quadratic_e1(6);
    CHECK(support_of(k6) == cells({{1, 29}, {4, 22}, {6, 15}, {8, 11}, {9, 5}}));
    for (const auto& [c, d] : k6.entries()) CHECK(d == 1);
    CHECK(support_of(quadratic_e1(5)) == cells({{1, 24}, {4, 17}, {6, 15}, {7, 10}, {7, 7}, {8, 10}, {9, 5}}));
    CHECK(support_of(quadratic_e1(2)) == cells({{1, 9}, {4, 10}, {6, 7}, {8, 7}, {9, 5}}));
    CHECK_THROWS_AS((void)assemble_e1(quadratic_strata(Parity::Odd), 4, 24), resolvent::DataError);
}

TEST_CASE("applying differentials") {
    const auto k5 = quadratic_e1(5);
    CHECK(apply_differentials(k5, {}) == k5);
    const auto after = apply_differentials(k5, known_differentials(5));
    CHECK(support_of(after) == cells({{1, 24}, {4, 17}, {6, 15}, {7, 7}, {9, 5}}));
    CHECK_THROWS_AS((void)apply_differentials(k5, {differential(1, Cell{8, 10}, 2, Origin::Known)}),
                    resolvent::ContradictionError);
    DifferentialSpec bad = differential(1, Cell{8, 10}, 1, Origin::Known);
    bad.target = Cell{6, 15};
    CHECK_THROWS_AS((void)apply_differentials(k5, {bad}), resolvent::DataError);
}

TEST_CASE("k = 2 is forced by dimension") {
    const auto k2 = quadratic_e1(2);
    const auto forced = force_by_dimension(k2);
    REQUIRE(forced.size() == 2);
    const std::vector<DifferentialSpec> expected{differential(4, Cell{8, 7}, 1, Origin::Forced),
                                                 differential(3, Cell{9, 5}, 1, Origin::Forced)};
    for (const auto& e : expected) CHECK(std::find(forced.begin(), forced.end(), e) != forced.end());
    CHECK(expected[0].target == Cell{4, 10});
    CHECK(expected[1].target == Cell{6, 7});
    CHECK(support_of(apply_differentials(k2, forced)) == cells({{1, 9}}));
}

TEST_CASE("force_by_dimension edge cases") {
    CHECK(force_by_dimension(quadratic_e1(6)).empty());

    E1Table over(0, 6);
    over.set({3, 3}, 1);
    over.set({2, 3}, 1);
    over.set({1, 4}, 1);
    CHECK_THROWS_AS((void)force_by_dimension(over), resolvent::AmbiguityError);

    E1Table stuck(0, 6);
    stuck.set({1, 5}, 1);
    CHECK_THROWS_AS((void)force_by_dimension(stuck), resolvent::InconsistencyError);
}

TEST_CASE("pipeline matches the closed form for k = 2..12") {
    for (int k = 2; k <= 12; ++k) {
        CAPTURE(k);
        const auto r = quadratic_pipeline(k);
        CHECK(r.poincare == theorem1_closed_form(k));
        CHECK(r.poincare.nonnegative());
        for (const auto& [d, c] : r.poincare.coefficients()) {
            CHECK(d >= 0);
            CHECK(d <= 6 * k - 1);
        }
        // at k = 3 the factor t^{k-5} has a negative exponent and the top class is t^5
        if (k >= 4) CHECK(r.poincare.coefficients().rbegin()->first == 6 * k - 15);
        if (k == 3) CHECK(r.poincare.coefficients().rbegin()->first == 5);
        CHECK(r.e1.euler_characteristic() == r.einf.euler_characteristic());
    }
}

TEST_CASE("closed form expansions") {
    for (int k = 4; k <= 20; ++k) {
        CAPTURE(k);
        CHECK(theorem1_closed_form(k) == hand_expanded(k));
    }
    CHECK(theorem1_closed_form(6) == PoincarePolynomial{{0, 1}, {5, 1}, {9, 1}, {14, 1}, {16, 1}, {21, 1}});
    CHECK(theorem1_closed_form(3) == PoincarePolynomial{{0, 2}, {2, 2}, {3, 1}, {5, 1}});
    CHECK(theorem1_closed_form(3) == PoincarePolynomial{{0, 2}, {3, 1}} * PoincarePolynomial{{0, 1}, {2, 1}});
    CHECK(theorem1_closed_form(4) == PoincarePolynomial{{0, 1}, {3, 1}} * PoincarePolynomial{{0, 1}, {3, 1}, {6, 1}});
    CHECK(theorem1_closed_form(2) == PoincarePolynomial{{0, 1}, {1, 1}});
    CHECK_THROWS_AS((void)theorem1_closed_form(1), resolvent::DataError);
    CHECK_THROWS_AS((void)quadratic_pipeline(1), resolvent::DataError);
}

TEST_CASE("stiefel toy case") {
    for (int k = 3; k <= 10; ++k) {
        CAPTURE(k);
        CHECK(stiefel_poincare(k) == stiefel_closed_form(k));
    }
    CHECK(stiefel_poincare(4) == PoincarePolynomial{{0, 1}, {3, 2}, {6, 1}});
    CHECK(stiefel_poincare(3) == PoincarePolynomial{{0, 2}, {3, 2}});
    CHECK(stiefel_poincare(5) == PoincarePolynomial{{0, 1}, {2, 1}, {7, 1}, {9, 1}});
}

TEST_CASE("euler characteristic is preserved by any feasible pattern") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        E1Table t(0, 100);
        for (int i = 0; i < 6; ++i) {
            t.add(Cell{static_cast<int>(rng() % 5) + 1, static_cast<int>(rng() % 5)},
                  static_cast<std::size_t>(rng() % 3) + 1);
        }
        const auto patterns = enumerate_patterns(t, admissible_differentials(t));
        REQUIRE_FALSE(patterns.empty());
        const auto& pick = patterns[rng() % patterns.size()];
        CHECK(apply_differentials(t, pick).euler_characteristic() == t.euler_characteristic());
    }
}

TEST_CASE("solve_by_consistency") {
    E1Table t(0, 10);
    t.set({1, 0}, 1);
    CHECK(solve_by_consistency(t, GradedDims{{1, 1}}).differentials.empty());
    CHECK(solve_by_consistency(t, GradedDims{{1, 1}}).unknown_values.empty());
    CHECK_THROWS_AS((void)solve_by_consistency(t, GradedDims{{2, 1}}), resolvent::InconsistencyError);

    E1Table u(0, 10);
    u.set_unknown({1, 0}, 1);
    u.set_unknown({2, 0}, 1);
    CHECK_THROWS_AS((void)solve_by_consistency(u, GradedDims{}), resolvent::AmbiguityError);
}

TEST_CASE("link of the top stratum") {
    const auto link = link_computation();
    REQUIRE(link.k0_candidates.size() == 2);
    CHECK(std::find(link.k0_candidates.begin(), link.k0_candidates.end(),
                    GradedDims{{0, 1}, {8, 1}, {9, 1}, {13, 1}}) != link.k0_candidates.end());
    CHECK(std::find(link.k0_candidates.begin(), link.k0_candidates.end(), GradedDims{{0, 1}, {13, 1}}) !=
          link.k0_candidates.end());
    CHECK(link.k1_table.unknowns() == std::map<Cell, std::size_t>{{Cell{9, 0}, 1}, {Cell{9, 1}, 1}});
    CHECK(link.k1_table.dim(Cell{9, 5}) == 1);
    CHECK(link.k1.unknown_values == std::map<Cell, std::size_t>{{Cell{9, 0}, 0}, {Cell{9, 1}, 0}});
    REQUIRE(link.k0.differentials.size() == 1);
    CHECK(link.k0.differentials[0] == differential(2, Cell{6, 3}, 1, Origin::Solved));
    CHECK(link.k0.differentials[0].target == Cell{4, 4});
    CHECK(link.link_reduced == GradedDims{{13, 1}});
    // the k = 1 answer agrees with the stored ninth column
    CHECK(link.k1_table.resolved(link.k1.unknown_values).dim(Cell{9, 5}) ==
          quadratic_e1(1).dim(Cell{9, 5}));
}

TEST_CASE("self-join of a circle") {
    const int r_max = std::getenv("RESOLVENT_LONG") ? 4 : 3;
    for (int r = 1; r <= r_max; ++r) {
        CAPTURE(r);
        const auto res = self_join_pipeline(r, r <= 3);
        CHECK(res.bm_total == GradedDims{{0, 1}, {2 * r - 1, 1}});
        for (const auto& d : res.differentials) {
            CHECK(d.page == 1);
            CHECK(d.rank == 1);
        }
        CHECK(res.differentials.size() == static_cast<std::size_t>(r - 1));
    }
    CHECK_THROWS_AS((void)self_join_pipeline(7), resolvent::UnsupportedSizeError);
}

TEST_CASE("positional check") {
    E1Table t(3, 18);
    t.set({4, 1}, 1);
    t.set({2, 2}, 1);
    CHECK_THROWS_AS(check_positional(t), resolvent::InconsistencyError);
    E1Table ok(3, 18);
    ok.set({4, 1}, 1);
    CHECK_NOTHROW(check_positional(ok));
    E1Table high(0, 4);
    high.set({4, 1}, 1);
    CHECK_THROWS_AS((void)total_and_dualize(high), resolvent::IntegrityError);
}

TEST_CASE("json and text output") {
    const auto r = quadratic_pipeline(6);
    const auto j = pipeline_json(r);
    CHECK(j["k"] == 6);
    CHECK(j["parity"] == "even");
    CHECK(j["e1"].size() == 5);
    CHECK(j["e1"][0] == nlohmann::ordered_json{{"p", 1}, {"q", 29}, {"dim", 1}});
    CHECK(j["poincare"][1] == nlohmann::ordered_json::array({5, 1}));
    const auto text = render_table(r.e1);
    CHECK(text.find("  29 |  1") != std::string::npos);
    E1Table u(1, 6);
    u.set_unknown({9, 0}, 1);
    CHECK(render_table(u).find('?') != std::string::npos);
}
