// resolvent: command-line front end for the quadratic-resultant pipeline.
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "resolvent/catalog/strata.hpp"
#include "resolvent/certify/census.hpp"
#include "resolvent/chainlab/text_format.hpp"
#include "resolvent/errors.hpp"
#include "resolvent/ssq/render.hpp"

namespace {

using namespace resolvent;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kInconclusive = 3 };

std::string dims_text(const catalog::GradedDims& g) {
    if (g.empty()) return "0";
    std::string s;
    for (const auto& [d, n] : g) s += (s.empty() ? "" : ", ") + ("H" + std::to_string(d) + "=" + std::to_string(n));
    return s;
}

json dims_json(const catalog::GradedDims& g) {
    auto a = json::array();
    for (const auto& [d, n] : g) a.push_back({d, n});
    return a;
}

std::string format_double(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

unsigned resolve_threads(unsigned flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("RESOLVENT_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void print_pipeline(const ssq::PipelineResult& r) {
    std::cout << "k = " << r.k << " (" << catalog::parity_name(r.parity) << "), ambient R^" << r.e1.ambient_dim()
              << "\n\nE1\n"
              << ssq::render_table(r.e1) << "\ndifferentials\n";
    if (r.differentials.empty()) std::cout << "  none\n";
    for (const auto& d : r.differentials) {
        std::cout << "  " << ssq::to_string(d) << "  " << d.citation << '\n';
    }
    std::cout << "\nE-infinity\n"
              << ssq::render_table(r.einf) << "\nBorel-Moore homology of the resultant: " << dims_text(r.bm_total)
              << "\nPoincare polynomial of the complement: " << r.poincare.to_string() << '\n';
}

int cmd_tables(int k, bool as_json) {
    const auto r = ssq::quadratic_pipeline(k);
    if (as_json) {
        std::cout << ssq::pipeline_json(r).dump(2) << '\n';
    } else {
        print_pipeline(r);
    }
    return kOk;
}

int cmd_theorem(int k_min, int k_max, bool as_json) {
    int bad = 0;
    auto rows = json::array();
    for (int k = k_min; k <= k_max; ++k) {
        const auto got = ssq::quadratic_pipeline(k).poincare;
        const auto want = ssq::theorem1_closed_form(k);
        const bool ok = got == want;
        bad += ok ? 0 : 1;
        if (as_json) {
            rows.push_back({{"k", k}, {"pass", ok}, {"pipeline", ssq::poincare_json(got)},
                            {"closed_form", ssq::poincare_json(want)}});
        } else {
            std::cout << (ok ? "PASS" : "FAIL") << " k=" << k << "  pipeline " << got.to_string() << "  closed form "
                      << want.to_string() << '\n';
        }
    }
    if (as_json) std::cout << json{{"results", rows}, {"mismatches", bad}}.dump(2) << '\n';
    return bad == 0 ? kOk : kMismatch;
}

int cmd_stiefel(int k, bool as_json) {
    const auto r = ssq::linear_pipeline(k);
    const auto closed = ssq::stiefel_closed_form(k);
    const bool ok = r.poincare == closed;
    if (as_json) {
        auto j = ssq::pipeline_json(r);
        j["closed_form"] = ssq::poincare_json(closed);
        j["pass"] = ok;
        std::cout << j.dump(2) << '\n';
    } else {
        print_pipeline(r);
        std::cout << (ok ? "PASS" : "FAIL") << " closed form " << closed.to_string() << '\n';
    }
    return ok ? kOk : kMismatch;
}

int cmd_homology(const std::string& space, const std::string& twist_text, bool allow_long, bool as_json) {
    const auto twist = catalog::parse_twist(twist_text);
    const auto g = catalog::model_homology(space, twist, allow_long);
    if (as_json) {
        std::cout << json{{"space", space}, {"twist", catalog::twist_name(twist)}, {"bm_homology", dims_json(g)}}.dump(2)
                  << '\n';
    } else {
        std::cout << space << " with " << catalog::twist_name(twist) << " coefficients: " << dims_text(g) << '\n';
    }
    return kOk;
}

int cmd_selfjoin(int r, bool as_json) {
    const auto res = ssq::self_join_pipeline(r, true);
    const catalog::GradedDims sphere{{0, 1}, {2 * r - 1, 1}};
    const bool ok = res.bm_total == sphere;
    if (as_json) {
        auto j = ssq::pipeline_json(res);
        j.erase("k");
        j.erase("parity");
        j["r"] = r;
        j["homology"] = dims_json(res.bm_total);
        j["pass"] = ok;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "self-join of order " << r << " of a circle\n\nE1\n"
                  << ssq::render_table(res.e1) << '\n';
        for (const auto& d : res.differentials) std::cout << "  " << ssq::to_string(d) << '\n';
        std::cout << "homology: " << dims_text(res.bm_total) << '\n'
                  << (ok ? "PASS" : "FAIL") << " sphere of dimension " << 2 * r - 1 << '\n';
    }
    return ok ? kOk : kMismatch;
}

int cmd_verify_lemmas(bool allow_long) {
    using catalog::GradedDims;
    using catalog::Twist;
    int bad = 0;
    auto line = [&](bool ok, const std::string& what, const std::string& detail) {
        bad += ok ? 0 : 1;
        std::cout << (ok ? "PASS " : "FAIL ") << what << ": " << detail << '\n';
    };
    auto check_space = [&](const std::string& name, Twist t, const GradedDims& want) {
        const auto got = catalog::model_homology(name, t, allow_long);
        line(got == want, name + " (" + catalog::twist_name(t) + ")", dims_text(got));
    };
    check_space("i_rp2_2", Twist::Trivial, {});
    check_space("b_rp2_2", Twist::Or, {{1, 1}, {4, 1}});
    check_space("b_rp2_2", Twist::Trivial, {});
    check_space("b_rp2_2", Twist::Pm, {});
    check_space("moebius", Twist::Or, {{1, 1}, {2, 1}});
    for (int j = 1; j <= (allow_long ? 4 : 3); ++j) check_space("b_s1_" + std::to_string(j), Twist::Pm, {{j - 1, 1}, {j, 1}});
    if (allow_long) {
        check_space("i_rp2_3", Twist::Trivial, {});
        check_space("b_rp2_3", Twist::Pm, {});
    }
    for (int r = 2; r <= 3; ++r) {
        const auto res = ssq::self_join_pipeline(r, true);
        line(res.bm_total == GradedDims{{0, 1}, {2 * r - 1, 1}}, "self-join r=" + std::to_string(r),
             dims_text(res.bm_total));
    }
    const auto link = ssq::link_computation();
    line(link.link_reduced == GradedDims{{13, 1}}, "link of the top stratum (reduced)", dims_text(link.link_reduced));

    for (int k = 0; k <= 6; ++k) {
        const auto parity = catalog::parity_of(k);
        auto strata = catalog::quadratic_strata(parity);
        const auto lin = catalog::linear_strata(parity);
        strata.insert(strata.end(), lin.begin(), lin.end());
        for (const auto& s : strata) {
            const auto rep = catalog::stratum_selfcheck(s, k, allow_long);
            if (rep.status == catalog::CheckStatus::Fail) {
                line(false, "column " + std::to_string(s.p) + " at k=" + std::to_string(k), rep.note);
            }
        }
    }
    std::cout << (bad == 0 ? "all column data consistent with recomputed homology\n" : "");
    return bad == 0 ? kOk : kMismatch;
}

int cmd_census(const certify::CensusOptions& opt, bool as_json, bool meta) {
    const auto rep = certify::component_census(opt);
    if (as_json) {
        std::cout << certify::census_json(rep, meta).dump(2) << '\n';
    } else {
        std::cout << "k=" << opt.k << " seed=" << opt.seed << " depth=" << opt.depth << "\ndraws " << rep.draws
                  << ", certified " << rep.certified << ", witnesses " << rep.witnesses << ", inconclusive "
                  << rep.inconclusive << ", unclassified " << rep.unclassified << '\n';
        for (const auto& [d, n] : rep.classes) std::cout << "class degree " << d << ": " << n << '\n';
        std::cout << "paths within classes: " << rep.within.certified << "/" << rep.within.attempted
                  << " certified\npaths across classes: " << rep.across.certified << "/" << rep.across.attempted
                  << " certified\nviolations: " << rep.violations << '\n';
    }
    return rep.violations == 0 ? kOk : kMismatch;
}

int cmd_degree(const std::string& path, const std::vector<double>& value, int depth, bool as_json) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read " + path);
    const auto system = certify::system_from_json(json::parse(in));
    const auto cert = certify::certify_nonresultant(system, depth);
    if (const auto* w = std::get_if<certify::CommonZeroWitness>(&cert)) {
        std::cout << "common zero at (" << format_double(w->point[0]) << ", " << format_double(w->point[1]) << ", "
                  << format_double(w->point[2]) << "), residual " << format_double(w->residual) << '\n';
        return kMismatch;
    }
    if (!certify::is_certified(cert)) {
        std::cout << "inconclusive at depth " << depth << '\n';
        return kInconclusive;
    }
    const certify::Vec3 v(value[0], value[1], value[2]);
    const auto d = certify::mod2_degree(system, v, std::max(depth, 14));
    if (as_json) {
        auto roots = json::array();
        for (const auto& r : d.roots) {
            roots.push_back({{"point", {r.point[0], r.point[1], r.point[2]}}, {"positive", r.positive}});
        }
        json j{{"degree", d.degree},
               {"value", {d.value[0], d.value[1], d.value[2]}},
               {"retries", d.retries},
               {"roots", roots},
               {"min_lower_bound", std::get<certify::CertifiedNonResultant>(cert).min_lower_bound}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "mod-2 degree " << d.degree << " (" << d.roots.size() << " solutions, " << d.retries
                  << " retries)\n";
    }
    return kOk;
}

int cmd_catalog(const std::string& action, const std::string& name) {
    if (action == "list") {
        for (const auto& m : catalog::space_models()) {
            std::cout << std::left << std::setw(14) << m.name << ' ' << m.summary;
            if (m.provenance == catalog::Provenance::Trusted) std::cout << " [trusted: " << m.citation << "]";
            if (m.long_running) std::cout << " [long]";
            std::cout << '\n';
        }
        return kOk;
    }
    if (action != "dump" || name.empty()) throw DataError("usage: catalog list | catalog dump NAME");
    const auto& m = catalog::space_model(name);
    if (m.kind != catalog::ModelKind::Complex) throw DataError(name + " has no simplicial model");
    const auto& built = catalog::build_model(name, true);
    std::cout << chainlab::to_text(built.pair);
    for (const auto& [t, c] : built.cocycles) {
        if (t == catalog::Twist::Trivial) continue;
        std::cout << "# local system " << catalog::twist_name(t) << '\n';
        for (std::size_t e = 0; e < c.edge_count(); ++e) {
            if (c.sign_at(e) < 0) {
                const auto s = built.pair.simplex(1, e);
                std::cout << "edge " << s[0] << ' ' << s[1] << " -1\n";
            }
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational cohomology of spaces of quadratic systems without common zeros"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "JSON output");

    int k = 2;
    auto* tables = app.add_subcommand("tables", "E1 and E-infinity pages for k quadratic forms");
    tables->add_option("--k", k, "number of forms (>= 2)")->required()->check(CLI::Range(2, 200));
    tables->add_flag("--json", as_json);

    int k_min = 2, k_max = 12;
    auto* theorem = app.add_subcommand("theorem", "pipeline against the closed formula");
    theorem->add_option("--k-min", k_min)->check(CLI::Range(2, 200));
    theorem->add_option("--k-max", k_max)->check(CLI::Range(2, 200));
    theorem->add_flag("--json", as_json);

    auto* stiefel = app.add_subcommand("stiefel", "linear toy case (Stiefel manifolds)");
    stiefel->add_option("--k", k)->required()->check(CLI::Range(3, 200));
    stiefel->add_flag("--json", as_json);

    std::string space, twist = "trivial";
    bool allow_long = false;
    auto* homology = app.add_subcommand("homology", "Borel-Moore homology of a catalog space");
    homology->add_option("--space", space)->required();
    homology->add_option("--twist", twist)->check(CLI::IsMember({"trivial", "or", "pm", "or+pm"}));
    homology->add_flag("--long", allow_long, "allow long-running models");
    homology->add_flag("--json", as_json);

    int r = 2;
    auto* selfjoin = app.add_subcommand("selfjoin", "self-join of a circle is a sphere");
    selfjoin->add_option("--r", r)->required()->check(CLI::Range(1, 6));
    selfjoin->add_flag("--json", as_json);

    auto* lemmas = app.add_subcommand("verify-lemmas", "recompute the constructed strata and check stored data");
    lemmas->add_flag("--long", allow_long, "include the triple-configuration checks");

    certify::CensusOptions copt;
    bool no_meta = false;
    unsigned threads = 0;
    auto* census = app.add_subcommand("census", "sample systems and sort them into components");
    census->add_option("--k", copt.k)->check(CLI::IsMember({2, 3}));
    census->add_option("--samples", copt.samples)->check(CLI::Range(1, 1000000));
    census->add_option("--seed", copt.seed);
    census->add_option("--depth", copt.depth)->check(CLI::Range(1, 30));
    census->add_option("--threads", threads, "worker cap (fallback RESOLVENT_THREADS)");
    census->add_flag("--no-meta", no_meta, "omit the timestamp");
    census->add_flag("--json", as_json);

    std::string input;
    std::vector<double> value{0.0, 0.0, 1.0};
    int depth = 12;
    auto* degree = app.add_subcommand("degree", "mod-2 degree of a system of three forms");
    degree->add_option("--input", input)->required()->check(CLI::ExistingFile);
    degree->add_option("--value", value)->delimiter(',')->expected(3);
    degree->add_option("--depth", depth)->check(CLI::Range(1, 30));
    degree->add_flag("--json", as_json);

    std::string action, name;
    auto* cat = app.add_subcommand("catalog", "list or dump catalog spaces");
    cat->add_option("action", action)->required()->check(CLI::IsMember({"list", "dump"}));
    cat->add_option("name", name);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        (void)app.exit(e);
        return kUsage;
    }
    if (k_min > k_max) {
        std::cerr << "--k-min exceeds --k-max\n";
        return kUsage;
    }

    try {
        if (*tables) return cmd_tables(k, as_json);
        if (*theorem) return cmd_theorem(k_min, k_max, as_json);
        if (*stiefel) return cmd_stiefel(k, as_json);
        if (*homology) return cmd_homology(space, twist, allow_long, as_json);
        if (*selfjoin) return cmd_selfjoin(r, as_json);
        if (*lemmas) return cmd_verify_lemmas(allow_long);
        if (*census) {
            copt.threads = resolve_threads(threads);
            return cmd_census(copt, as_json, !no_meta);
        }
        if (*degree) return cmd_degree(input, value, depth, as_json);
        if (*cat) return cmd_catalog(action, name);
    } catch (const InconclusiveAtDepth& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return kInconclusive;
    } catch (const RegularValueNotFound& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return kInconclusive;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UnsupportedSizeError& e) {
        std::cerr << "error: " << e.what() << " (try --long)\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ArityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kMismatch;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: bad JSON: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
