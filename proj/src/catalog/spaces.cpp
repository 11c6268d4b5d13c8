#include "resolvent/catalog/spaces.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>

#include "resolvent/chainlab/chain_complex.hpp"
#include "resolvent/chainlab/constructions.hpp"
#include "resolvent/errors.hpp"

namespace resolvent::catalog {

using chainlab::GroupElement;
using chainlab::SignCocycle;
using chainlab::Simplex;
using chainlab::SimplicialPair;
using chainlab::Vertex;

Twist tensor(Twist a, Twist b) {
    return static_cast<Twist>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b));
}

Twist tensor_power(Twist a, int k) { return (k % 2 == 0) ? Twist::Trivial : a; }

std::string twist_name(Twist t) {
    switch (t) {
        case Twist::Trivial: return "trivial";
        case Twist::Or: return "or";
        case Twist::Pm: return "pm";
        case Twist::OrPm: return "or+pm";
    }
    return "?";
}

Twist parse_twist(const std::string& s) {
    if (s == "trivial") return Twist::Trivial;
    if (s == "or") return Twist::Or;
    if (s == "pm") return Twist::Pm;
    if (s == "or+pm" || s == "pm+or") return Twist::OrPm;
    throw DataError("unknown twist '" + s + "' (expected trivial, or, pm, or+pm)");
}

GradedDims to_graded(const std::vector<std::size_t>& dims, int shift) {
    GradedDims g;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] != 0) g[static_cast<int>(i) + shift] = dims[i];
    }
    return g;
}

SimplicialPair rp2_model() {
    return SimplicialPair::from_facets(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                           {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

SimplicialPair circle_model() { return SimplicialPair::from_facets(3, {{0, 1}, {1, 2}, {0, 2}}); }

SimplicialPair moebius_model() {
    // strip of triangles i, i+1, i+2 mod 5; edges i, i+2 form the rim
    std::vector<Simplex> tri, rim;
    for (Vertex i = 0; i < 5; ++i) {
        tri.push_back({i, (i + 1) % 5, (i + 2) % 5});
        rim.push_back({i, (i + 2) % 5});
    }
    return SimplicialPair::from_facets(5, tri, rim);
}

SimplicialPair open_interval_model() { return SimplicialPair::from_facets(2, {{0, 1}}, {{0}, {1}}); }

SimplicialPair cyclic_polytope_boundary(std::size_t n, std::size_t d) {
    if (d < 2 || n <= d) throw DataError("cyclic polytope needs n > d >= 2");
    std::vector<Simplex> facets;
    std::vector<char> pick(n, 0);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(d), pick.end(), 1);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (pick[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (pick[j]) continue;
                std::size_t between = 0;
                for (std::size_t t = i + 1; t < j; ++t) between += static_cast<std::size_t>(pick[t]);
                if (between % 2 != 0) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        Simplex f;
        for (std::size_t i = 0; i < n; ++i) {
            if (pick[i]) f.push_back(static_cast<Vertex>(i));
        }
        facets.push_back(std::move(f));
    } while (std::next_permutation(pick.begin(), pick.end()));
    return SimplicialPair::from_facets(n, facets);
}

SimplicialPair model_ordered_config(int j) {
    if (j != 2 && j != 3) {
        throw UnsupportedSizeError("ordered configurations of RP^2 are modeled for j = 2, 3 only");
    }
    return chainlab::power(rp2_model(), j, true);
}

BuiltModel unordered_config_model(const SimplicialPair& base, int j) {
    const std::size_t n = base.num_vertices();
    SimplicialPair cover = chainlab::power(base, j, true);
    BuiltModel out;
    if (j == 1) {
        out.pair = cover;
        out.cocycles.emplace(Twist::Trivial, SignCocycle::trivial(cover));
        out.cocycles.emplace(Twist::Pm, SignCocycle::trivial(cover));
        out.cocycles.emplace(Twist::Or, chainlab::orientation_cocycle(cover));
        out.cocycles.emplace(Twist::OrPm, chainlab::orientation_cocycle(cover));
        return out;
    }
    auto sd = chainlab::barycentric_subdivision(cover);
    std::vector<int> order(static_cast<std::size_t>(j));
    std::iota(order.begin(), order.end(), 0);
    std::vector<GroupElement> group;
    do {
        int inversions = 0;
        for (int a = 0; a < j; ++a)
            for (int b = a + 1; b < j; ++b) inversions += order[a] > order[b] ? 1 : 0;
        std::vector<Vertex> perm(cover.num_vertices());
        for (Vertex v = 0; v < perm.size(); ++v) {
            auto c = chainlab::power_coordinates(v, n, j);
            std::vector<Vertex> moved(c.size());
            for (int a = 0; a < j; ++a) moved[a] = c[order[a]];
            perm[v] = chainlab::power_vertex(moved, n);
        }
        group.push_back({chainlab::induced_action(cover, sd, perm), inversions % 2 == 0 ? 1 : -1});
    } while (std::next_permutation(order.begin(), order.end()));
    auto q = chainlab::orbit_quotient(sd.pair, group);
    out.pair = std::move(q.pair);
    const SignCocycle orient = chainlab::orientation_cocycle(out.pair);
    out.cocycles.emplace(Twist::Trivial, SignCocycle::trivial(out.pair));
    out.cocycles.emplace(Twist::Or, orient);
    out.cocycles.emplace(Twist::Pm, q.sign_system);
    out.cocycles.emplace(Twist::OrPm, chainlab::tensor_cocycles(orient, q.sign_system));
    return out;
}

namespace {

BuiltModel with_orientation(SimplicialPair p) {
    BuiltModel m;
    m.cocycles.emplace(Twist::Trivial, SignCocycle::trivial(p));
    m.cocycles.emplace(Twist::Or, chainlab::orientation_cocycle(p));
    m.pair = std::move(p);
    return m;
}

const std::string kCoverSummandNote =
    "trivial and sign summands of the pushforward from the ordered cover";

std::vector<SpaceModel> make_models() {
    using enum Twist;
    std::vector<SpaceModel> v;
    v.push_back({"point", "a single point", ModelKind::Complex, Provenance::Constructed, "", false, {Trivial}});
    v.push_back({"circle", "3-cycle", ModelKind::Complex, Provenance::Constructed, "", false, {Trivial, Or}});
    v.push_back({"open-interval", "segment relative to its endpoints", ModelKind::Complex, Provenance::Constructed,
                 "", false, {Trivial}});
    v.push_back({"rp2", "6-vertex projective plane (also used for the dual plane of lines)", ModelKind::Complex,
                 Provenance::Constructed, "", false, {Trivial, Or}});
    v.push_back({"moebius", "5-vertex Moebius band relative to its rim", ModelKind::Complex,
                 Provenance::Constructed, "", false, {Trivial, Or}});
    for (int j = 1; j <= 4; ++j) {
        v.push_back({"b_s1_" + std::to_string(j),
                     "unordered " + std::to_string(j) + "-point configurations on the circle",
                     ModelKind::Complex, Provenance::Constructed, "", j == 4, {Trivial, Or, Pm, OrPm}});
    }
    for (int j = 5; j <= 6; ++j) {
        v.push_back({"b_s1_" + std::to_string(j),
                     "unordered " + std::to_string(j) + "-point configurations on the circle",
                     ModelKind::ClosedForm, Provenance::Trusted,
                     "sign-twisted homology of the circle configuration space: bundle over the circle with "
                     "open-cell fibre, one class in degrees j-1 and j",
                     false, {Pm}});
    }
    v.push_back({"i_rp2_2", "ordered pairs of distinct points of RP^2", ModelKind::Complex,
                 Provenance::Constructed, "", false, {Trivial, Or}});
    v.push_back({"b_rp2_2", "unordered pairs of distinct points of RP^2", ModelKind::Complex,
                 Provenance::Constructed, "", false, {Trivial, Or, Pm, OrPm}});
    v.push_back({"i_rp2_3", "ordered triples of distinct points of RP^2", ModelKind::Complex,
                 Provenance::Constructed, "", true, {Trivial}});
    v.push_back({"b_rp2_3", "unordered triples of distinct points of RP^2", ModelKind::CoverSummand,
                 Provenance::Constructed, kCoverSummandNote, true, {Trivial, Pm}});
    v.push_back({"bx_rp2_4", "unordered quadruples of points of RP^2 in general position", ModelKind::ClosedForm,
                 Provenance::Trusted,
                 "twisted homology of four-point general-position configurations vanishes (finite covering "
                 "by a space with trivial rational homology, not re-proved here)",
                 false, {Trivial, Pm}});
    return v;
}

struct Cache {
    std::mutex mutex;
    std::map<std::string, std::unique_ptr<BuiltModel>> built;
    std::mutex homology_mutex;
    std::map<std::pair<std::string, Twist>, GradedDims> homology;
};

Cache& cache() {
    static Cache c;
    return c;
}

BuiltModel construct(const std::string& name) {
    if (name == "point") return with_orientation(SimplicialPair::from_facets(1, {{0}}));
    if (name == "circle") return with_orientation(circle_model());
    if (name == "open-interval") return with_orientation(open_interval_model());
    if (name == "rp2") return with_orientation(rp2_model());
    if (name == "moebius") return with_orientation(moebius_model());
    if (name.rfind("b_s1_", 0) == 0) return unordered_config_model(circle_model(), std::stoi(name.substr(5)));
    if (name == "i_rp2_2") return with_orientation(model_ordered_config(2));
    if (name == "i_rp2_3") {
        BuiltModel m;
        m.pair = model_ordered_config(3);
        m.cocycles.emplace(Twist::Trivial, SignCocycle::trivial(m.pair));
        return m;
    }
    if (name == "b_rp2_2") return unordered_config_model(rp2_model(), 2);
    throw DataError("model '" + name + "' is not a complex");
}

GradedDims closed_form(const std::string& name, Twist twist) {
    if (name == "bx_rp2_4") return {};
    if (name.rfind("b_s1_", 0) == 0 && twist == Twist::Pm) {
        const int j = std::stoi(name.substr(5));
        return {{j - 1, 1}, {j, 1}};
    }
    throw DataError("no stored homology for " + name + " with twist " + twist_name(twist));
}

}  // namespace

const std::vector<SpaceModel>& space_models() {
    static const std::vector<SpaceModel> models = make_models();
    return models;
}

const SpaceModel& space_model(const std::string& name) {
    for (const auto& m : space_models()) {
        if (m.name == name) return m;
    }
    throw DataError("unknown space model '" + name + "'");
}

const BuiltModel& build_model(const std::string& name, bool allow_long) {
    const SpaceModel& info = space_model(name);
    if (info.kind != ModelKind::Complex) throw DataError("model '" + name + "' has no complex");
    if (info.long_running && !allow_long) {
        throw UnsupportedSizeError("model '" + name + "' is long-running; enable long checks to build it");
    }
    Cache& c = cache();
    std::lock_guard<std::mutex> lock(c.mutex);
    auto it = c.built.find(name);
    if (it == c.built.end()) it = c.built.emplace(name, std::make_unique<BuiltModel>(construct(name))).first;
    return *it->second;
}

const BuiltModel& model_b_rp2_2() { return build_model("b_rp2_2"); }

GradedDims model_homology(const std::string& name, Twist twist, bool allow_long) {
    const SpaceModel& info = space_model(name);
    if (std::find(info.twists.begin(), info.twists.end(), twist) == info.twists.end()) {
        throw DataError("model '" + name + "' does not carry twist " + twist_name(twist));
    }
    switch (info.kind) {
        case ModelKind::ClosedForm: return closed_form(name, twist);
        case ModelKind::CoverSummand: {
            if (!allow_long) {
                throw UnsupportedSizeError("model '" + name + "' is long-running; enable long checks");
            }
            // The trivial and sign representations each occur once in the
            // regular representation, so both summands vanish with the cover.
            const GradedDims cover = model_homology("i_rp2_3", Twist::Trivial, true);
            if (!cover.empty()) throw UnsupportedSizeError("cover homology is nonzero; summand undetermined");
            return {};
        }
        case ModelKind::Complex: {
            Cache& c = cache();
            {
                std::lock_guard<std::mutex> lock(c.homology_mutex);
                auto it = c.homology.find({name, twist});
                if (it != c.homology.end()) return it->second;
            }
            const BuiltModel& m = build_model(name, allow_long);
            GradedDims g = to_graded(chainlab::borel_moore(m.pair, m.cocycles.at(twist)));
            std::lock_guard<std::mutex> lock(c.homology_mutex);
            c.homology.emplace(std::make_pair(name, twist), g);
            return g;
        }
    }
    return {};
}

}  // namespace resolvent::catalog
