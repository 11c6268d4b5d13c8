#include "resolvent/ssq/engine.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "resolvent/errors.hpp"

namespace resolvent::ssq {

E1Table assemble_e1(const std::vector<catalog::StratumDescriptor>& strata, int k, int ambient_dim) {
    if (k < 0) throw DataError("k must be nonnegative");
    E1Table t(k, ambient_dim);
    int expect_p = strata.empty() ? 0 : strata.front().p;
    for (const auto& s : strata) {
        if (s.p != expect_p++) throw DataError("columns must be consecutive");
        for (const auto& [deg, dim] : s.bm_at(k)) t.add(Cell{s.p, deg - s.p}, dim);
    }
    return t;
}

E1Table apply_differentials(const E1Table& t, std::vector<DifferentialSpec> specs) {
    std::stable_sort(specs.begin(), specs.end(),
                     [](const DifferentialSpec& a, const DifferentialSpec& b) { return a.page < b.page; });
    E1Table out = t;
    for (const auto& d : specs) {
        if (d.target.p != d.source.p - d.page || d.target.q != d.source.q + d.page - 1) {
            throw DataError("differential " + to_string(d) + " has a malformed target");
        }
        if (d.rank == 0) continue;
        if (out.dim(d.source) < d.rank || out.dim(d.target) < d.rank) {
            throw ContradictionError("rank of " + to_string(d) + " exceeds the page at k=" + std::to_string(t.k()));
        }
        out.set(d.source, out.dim(d.source) - d.rank);
        out.set(d.target, out.dim(d.target) - d.rank);
    }
    return out;
}

std::vector<DifferentialSpec> admissible_differentials(const E1Table& t) {
    std::vector<DifferentialSpec> out;
    for (const auto& [s, ds] : t.entries()) {
        for (const auto& [g, dg] : t.entries()) {
            if (g.p < s.p && g.total() == s.total() - 1) {
                out.push_back(differential(s.p - g.p, s, 1, Origin::Solved));
            }
        }
    }
    return out;
}

std::vector<std::vector<DifferentialSpec>> enumerate_patterns(const E1Table& t,
                                                              const std::vector<DifferentialSpec>& candidates) {
    std::map<Cell, std::size_t> room;
    for (const auto& [c, d] : t.entries()) room[c] = d;
    std::vector<std::vector<DifferentialSpec>> out;
    std::vector<DifferentialSpec> current;
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == candidates.size()) {
            out.push_back(current);
            return;
        }
        walk(i + 1);  // rank 0
        DifferentialSpec d = candidates[i];
        const std::size_t cap = std::min(room[d.source], room[d.target]);
        for (std::size_t r = 1; r <= cap; ++r) {
            d.rank = r;
            room[d.source] -= r;
            room[d.target] -= r;
            current.push_back(d);
            walk(i + 1);
            current.pop_back();
            room[d.source] += r;
            room[d.target] += r;
        }
    };
    walk(0);
    return out;
}

namespace {

std::string list_patterns(const std::vector<std::vector<DifferentialSpec>>& patterns) {
    std::string s;
    for (const auto& p : patterns) {
        s += "\n  {";
        for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "; " : "") + to_string(p[i]);
        s += "}";
    }
    return s;
}

}  // namespace

std::vector<DifferentialSpec> force_by_dimension(const E1Table& t) {
    std::vector<DifferentialSpec> candidates;
    for (const auto& d : admissible_differentials(t)) {
        if (d.source.total() >= t.ambient_dim()) candidates.push_back(d);
    }
    std::vector<std::vector<DifferentialSpec>> hits;
    for (auto& pattern : enumerate_patterns(t, candidates)) {
        const E1Table after = apply_differentials(t, pattern);
        bool clean = true;
        for (const auto& [c, d] : after.entries()) {
            if (c.total() >= t.ambient_dim()) clean = false;
        }
        if (!clean) continue;
        for (auto& d : pattern) {
            d.origin = Origin::Forced;
            d.citation = "entries in degree >= " + std::to_string(t.ambient_dim()) + " must die";
        }
        hits.push_back(std::move(pattern));
    }
    if (hits.empty()) {
        throw InconsistencyError("no differentials clear degrees >= " + std::to_string(t.ambient_dim()) +
                                 " at k=" + std::to_string(t.k()));
    }
    if (hits.size() > 1) {
        throw AmbiguityError(std::to_string(hits.size()) + " differential patterns clear the top degrees at k=" +
                             std::to_string(t.k()) + ":" + list_patterns(hits));
    }
    return hits.front();
}

Assignment solve_by_consistency(const E1Table& t, const GradedDims& target) {
    std::vector<Cell> cells;
    for (const auto& [c, m] : t.unknowns()) cells.push_back(c);
    std::vector<Assignment> solutions;
    std::map<Cell, std::size_t> values;
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i < cells.size()) {
            for (std::size_t v = 0; v <= t.unknowns().at(cells[i]); ++v) {
                values[cells[i]] = v;
                walk(i + 1);
            }
            return;
        }
        const E1Table filled = t.resolved(values);
        for (auto& pattern : enumerate_patterns(filled, admissible_differentials(filled))) {
            if (total_homology(apply_differentials(filled, pattern)) != target) continue;
            for (auto& d : pattern) {
                d.origin = Origin::Solved;
                d.citation = "unique way to reach the known total";
            }
            solutions.push_back({values, std::move(pattern)});
        }
    };
    walk(0);
    if (solutions.empty()) {
        throw InconsistencyError("no assignment reaches the target total at k=" + std::to_string(t.k()));
    }
    if (solutions.size() > 1) {
        std::string msg = std::to_string(solutions.size()) + " assignments reach the target at k=" + std::to_string(t.k());
        for (const auto& s : solutions) {
            msg += "\n  ";
            for (const auto& [c, v] : s.unknown_values) msg += to_string(c) + "=" + std::to_string(v) + " ";
            for (const auto& d : s.differentials) msg += to_string(d) + "; ";
        }
        throw AmbiguityError(msg);
    }
    return solutions.front();
}

void check_positional(const E1Table& einf) {
    const auto left = admissible_differentials(einf);
    if (left.empty()) return;
    std::string msg = "undeclared differentials are possible at k=" + std::to_string(einf.k()) + ":";
    for (const auto& d : left) msg += " d" + std::to_string(d.page) + " " + to_string(d.source) + "->" + to_string(d.target);
    throw InconsistencyError(msg);
}

GradedDims total_homology(const E1Table& einf) {
    if (!einf.unknowns().empty()) throw DataError("table still has undetermined entries");
    GradedDims g;
    for (const auto& [c, d] : einf.entries()) g[c.total()] += d;
    return g;
}

PoincarePolynomial to_polynomial(const GradedDims& g) {
    PoincarePolynomial p;
    for (const auto& [d, n] : g) p += PoincarePolynomial::monomial(d, static_cast<long>(n));
    return p;
}

PoincarePolynomial total_and_dualize(const E1Table& einf) {
    PoincarePolynomial p = PoincarePolynomial::monomial(0, 1);
    for (const auto& [deg, n] : total_homology(einf)) {
        const int i = einf.ambient_dim() - deg - 1;
        if (i < 0) {
            throw IntegrityError("class in degree " + std::to_string(deg) + " has no dual inside R^" +
                                 std::to_string(einf.ambient_dim()));
        }
        p += PoincarePolynomial::monomial(i, static_cast<long>(n));
    }
    return p;
}

}  // namespace resolvent::ssq
