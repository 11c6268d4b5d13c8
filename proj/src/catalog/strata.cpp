#include "resolvent/catalog/strata.hpp"

#include <set>

#include "resolvent/errors.hpp"

namespace resolvent::catalog {

Parity parity_of(int k) { return (k % 2 == 0) ? Parity::Even : Parity::Odd; }

std::string parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Twist StratumDescriptor::twist(Parity parity) const {
    return tensor(cell_twist, tensor_power(summand_twist, parity == Parity::Even ? 0 : 1));
}

GradedDims StratumDescriptor::bm_at(int k) const {
    auto it = bm_homology.find(parity_of(k));
    if (it == bm_homology.end()) {
        throw DataError("column " + std::to_string(p) + " has no " + parity_name(parity_of(k)) + " branch");
    }
    GradedDims g;
    for (const auto& t : it->second) {
        if (t.dim != 0) g[t.offset + t.slope * k] += t.dim;
    }
    return g;
}

namespace {

using enum Twist;

StratumDescriptor column(int p, std::string label, std::string base, int d, int cell, Twist cell_twist,
                         Twist summand_twist, std::vector<DegreeTerm> even, std::vector<DegreeTerm> odd) {
    StratumDescriptor s;
    s.p = p;
    s.label = std::move(label);
    s.base = std::move(base);
    s.fiber_vector_dim = d;
    s.fiber_cell_dim = cell;
    s.cell_twist = cell_twist;
    s.summand_twist = summand_twist;
    s.bm_homology[Parity::Even] = std::move(even);
    s.bm_homology[Parity::Odd] = std::move(odd);
    return s;
}

// Drops the branch of the other parity.
std::vector<StratumDescriptor> keep_branch(std::vector<StratumDescriptor> v, Parity parity) {
    for (auto& s : v) s.bm_homology.erase(parity == Parity::Even ? Parity::Odd : Parity::Even);
    return v;
}

}  // namespace

std::vector<StratumDescriptor> quadratic_strata(Parity parity) {
    std::vector<StratumDescriptor> v;
    v.push_back(column(1, "a single point of RP^2", "rp2", 5, 0, Trivial, Trivial,
                       {{0, 5}}, {{0, 5}}));
    v.push_back(column(2, "two points", "b_rp2_2", 4, 1, Pm, Pm, {}, {}));
    v.push_back(column(3, "three points", "b_rp2_3", 3, 2, Pm, Pm, {}, {}));
    v.push_back(column(4, "a line (collinear quadruples merged in)", "rp2", 3, 6, Or, Or,
                       {{8, 3}}, {{6, 3}}));
    v.push_back(column(5, "four points, not all on one line",
                       "bx_rp2_4", 2, 3, Pm, Pm, {}, {}));
    v.back().provenance = Provenance::Trusted;
    v.push_back(column(6, "a line and a point off it", "rp2", 2, 9, Trivial, Or,
                       {{9, 2}}, {{11, 2}}));
    v.back().trusted_inputs.push_back("link of the column is a homology 6-sphere");
    v.push_back(column(7, "two distinct lines", "b_rp2_2", 1, 8, Trivial, Or,
                       {}, {{9, 1}, {12, 1}}));
    v.back().trusted_inputs.push_back("link of the column is a homology 7-sphere");
    v.push_back(column(8, "a nonsingular nonempty conic", "rp2", 1, 11, Or, Trivial,
                       {{13, 1}}, {{13, 1}}));
    v.back().trusted_inputs.push_back("orientation of the column fibre is the orientation of the base");
    v.push_back(column(9, "all of RP^2", "point", 0, 14, Trivial, Trivial, {{14, 0}}, {{14, 0}}));
    v.back().trusted_inputs.push_back("link of the last column is a homology 13-sphere (see the link computation)");
    return keep_branch(std::move(v), parity);
}

std::vector<StratumDescriptor> linear_strata(Parity parity) {
    std::vector<StratumDescriptor> v;
    v.push_back(column(1, "kernel is a line", "rp2", 2, 0, Trivial, Or, {{0, 2}}, {{2, 2}}));
    v.push_back(column(2, "kernel is a plane", "rp2", 1, 2, Or, Or, {{4, 1}}, {{2, 1}}));
    v.push_back(column(3, "kernel is everything", "point", 0, 5, Trivial, Trivial, {{5, 0}}, {{5, 0}}));
    v.back().trusted_inputs.push_back("link of the zero map is a 4-sphere");
    return keep_branch(std::move(v), parity);
}

std::vector<StratumDescriptor> self_join_strata(int r) {
    if (r < 1 || r > 6) throw UnsupportedSizeError("self-join order must be in 1..6");
    std::vector<StratumDescriptor> v;
    for (int j = 1; j <= r; ++j) {
        auto s = column(j, "open simplices spanned by " + std::to_string(j) + " points",
                        "b_s1_" + std::to_string(j), 0, j - 1, Pm, Trivial,
                        {{2 * j - 2, 0}, {2 * j - 1, 0}}, {{2 * j - 2, 0}, {2 * j - 1, 0}});
        if (space_model(s.base).provenance == Provenance::Trusted) s.provenance = Provenance::Trusted;
        v.push_back(std::move(s));
    }
    return v;
}

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Trusted: return "trusted";
        case CheckStatus::Deferred: return "deferred";
    }
    return "?";
}

SelfcheckReport stratum_selfcheck(const StratumDescriptor& d, int k, bool allow_long) {
    SelfcheckReport r;
    r.p = d.p;
    r.k = k;
    r.expected = d.bm_at(k);
    const SpaceModel& base = space_model(d.base);
    if (d.provenance == Provenance::Trusted || base.provenance == Provenance::Trusted) {
        r.status = CheckStatus::Trusted;
        r.note = base.citation;
        return r;
    }
    if (base.long_running && !allow_long) {
        r.status = CheckStatus::Deferred;
        r.note = "base model " + d.base + " needs the long-running checks";
        return r;
    }
    const int shift = d.fiber_vector_dim * k + d.fiber_cell_dim;
    for (const auto& [deg, dim] : model_homology(d.base, d.twist(parity_of(k)), allow_long)) {
        r.computed[deg + shift] = dim;
    }
    std::set<int> degrees;
    for (const auto& [deg, dim] : r.expected) degrees.insert(deg);
    for (const auto& [deg, dim] : r.computed) degrees.insert(deg);
    for (int deg : degrees) {
        const auto e = r.expected.count(deg) ? r.expected.at(deg) : 0;
        const auto c = r.computed.count(deg) ? r.computed.at(deg) : 0;
        if (e != c) r.mismatched_degrees.push_back(deg);
    }
    r.status = r.mismatched_degrees.empty() ? CheckStatus::Pass : CheckStatus::Fail;
    for (const auto& t : d.trusted_inputs) r.note += (r.note.empty() ? "uses: " : "; ") + t;
    return r;
}

}  // namespace resolvent::catalog
