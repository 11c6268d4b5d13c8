#include "resolvent/ssq/pipelines.hpp"

#include <set>
#include <string>

#include "resolvent/catalog/spaces.hpp"
#include "resolvent/chainlab/chain_complex.hpp"
#include "resolvent/errors.hpp"

namespace resolvent::ssq {

using catalog::Parity;
using catalog::parity_of;

namespace {

std::vector<DifferentialSpec> concat(std::vector<DifferentialSpec> a, const std::vector<DifferentialSpec>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Known differentials, then whatever the dimension count forces, then the
// positional check.
PipelineResult run(int k, E1Table e1, std::vector<DifferentialSpec> known) {
    PipelineResult r;
    r.k = k;
    r.parity = parity_of(k);
    r.e1 = std::move(e1);
    const E1Table after_known = apply_differentials(r.e1, known);
    r.differentials = concat(std::move(known), force_by_dimension(after_known));
    r.einf = apply_differentials(r.e1, r.differentials);
    check_positional(r.einf);
    r.bm_total = total_homology(r.einf);
    r.poincare = total_and_dualize(r.einf);
    return r;
}

PoincarePolynomial one_plus(int d) { return PoincarePolynomial{{0, 1}} + PoincarePolynomial::monomial(d); }

}  // namespace

std::vector<DifferentialSpec> known_differentials(int k) {
    if (k % 2 == 0) return {};
    return {differential(1, Cell{8, k + 5}, 1, Origin::Known,
                         "conic column over RP^2 maps isomorphically onto the two-line column (odd k)")};
}

PipelineResult quadratic_pipeline(int k) {
    if (k < 2) throw DataError("the quadratic pipeline needs k >= 2, got " + std::to_string(k));
    return run(k, assemble_e1(catalog::quadratic_strata(parity_of(k)), k, 6 * k), known_differentials(k));
}

PoincarePolynomial theorem1_closed_form(int k) {
    if (k < 2) throw DataError("closed form defined for k >= 2, got " + std::to_string(k));
    if (k == 2) return {{0, 1}, {1, 1}};
    if (k % 2 == 0) {
        return one_plus(k - 1) * PoincarePolynomial{{0, 1}, {3 * k - 9, 1}, {5 * k - 14, 1}};
    }
    return one_plus(k - 1) + PoincarePolynomial::monomial(3 * k - 7) * one_plus(k - 5) * one_plus(2 * k - 3);
}

PipelineResult linear_pipeline(int k) {
    if (k < 3) throw DataError("the linear pipeline needs k >= 3, got " + std::to_string(k));
    return run(k, assemble_e1(catalog::linear_strata(parity_of(k)), k, 3 * k), {});
}

PoincarePolynomial stiefel_poincare(int k) { return linear_pipeline(k).poincare; }

PoincarePolynomial stiefel_closed_form(int k) {
    if (k < 3) throw DataError("closed form defined for k >= 3, got " + std::to_string(k));
    if (k % 2 == 0) return one_plus(k - 1) * one_plus(2 * k - 5);
    return one_plus(k - 3) * one_plus(2 * k - 3);
}

PipelineResult self_join_pipeline(int r, bool verify_columns) {
    const auto strata = catalog::self_join_strata(r);
    if (verify_columns) {
        for (const auto& s : strata) {
            const auto rep = catalog::stratum_selfcheck(s, 0, true);
            if (rep.status == catalog::CheckStatus::Fail) {
                throw DataError("column " + std::to_string(s.p) + " of the self-join disagrees with its model");
            }
        }
    }
    const auto sphere = catalog::cyclic_polytope_boundary(static_cast<std::size_t>(2 * r + 2),
                                                          static_cast<std::size_t>(2 * r));
    const GradedDims target = catalog::to_graded(chainlab::borel_moore(sphere));

    PipelineResult res;
    res.k = 0;
    res.e1 = assemble_e1(strata, 0, 2 * r);
    const Assignment a = solve_by_consistency(res.e1, target);
    res.differentials = a.differentials;
    res.einf = apply_differentials(res.e1, res.differentials);
    check_positional(res.einf);
    res.bm_total = total_homology(res.einf);
    res.poincare = to_polynomial(res.bm_total);
    return res;
}

LinkComputation link_computation() {
    LinkComputation out;

    // k = 0, columns 1..8: each differential pattern gives a candidate link.
    auto strata0 = catalog::quadratic_strata(Parity::Even);
    strata0.pop_back();
    out.k0_table = assemble_e1(strata0, 0, 0);
    for (const auto& pattern : enumerate_patterns(out.k0_table, admissible_differentials(out.k0_table))) {
        out.k0_candidates.push_back(total_homology(apply_differentials(out.k0_table, pattern)));
    }

    // Ninth column at k = 1: reduced degree i-1 of the link sits in total
    // degree i. Degrees common to every candidate are certain; the rest are
    // unknown entries of size at most their largest candidate value.
    std::set<int> degrees;
    for (const auto& c : out.k0_candidates) {
        for (const auto& [d, n] : c) {
            if (d > 0) degrees.insert(d);
        }
    }
    auto strata1 = catalog::quadratic_strata(Parity::Odd);
    strata1.pop_back();
    E1Table t1 = assemble_e1(strata1, 1, 6);
    for (int d : degrees) {
        std::size_t lo = SIZE_MAX, hi = 0;
        for (const auto& c : out.k0_candidates) {
            const auto it = c.find(d);
            const std::size_t v = it == c.end() ? 0 : it->second;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        const Cell cell{9, d + 1 - 9};
        if (lo == hi) {
            t1.set(cell, lo);
        } else {
            t1.set_unknown(cell, hi);
        }
    }
    out.k1_table = t1;

    // The k = 1 complement is the positive and the negative definite forms.
    const auto known1 = known_differentials(1);
    out.k1 = solve_by_consistency(apply_differentials(t1, known1), GradedDims{{5, 1}});
    out.k1.differentials = concat(known1, out.k1.differentials);

    GradedDims target0{{0, 1}};
    for (int d : degrees) {
        const std::size_t v = t1.resolved(out.k1.unknown_values).dim(Cell{9, d + 1 - 9});
        if (v > 0) target0[d] = v;
    }
    out.k0 = solve_by_consistency(out.k0_table, target0);
    out.link_reduced = target0;
    out.link_reduced.erase(0);
    return out;
}

}  // namespace resolvent::ssq
