#include "resolvent/certify/census.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "resolvent/certify/random.hpp"
#include "resolvent/errors.hpp"

namespace resolvent::certify {

namespace {

// Runs job(i) for i in 0..n-1 on up to `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& job) {
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) job(i);
        });
    }
    for (auto& t : pool) t.join();
}

void shuffle(std::vector<std::size_t>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

}  // namespace

CensusReport component_census(const CensusOptions& opt) {
    if (opt.k != 2 && opt.k != 3) throw DataError("the census supports k = 2 or 3");
    if (opt.samples == 0) throw PreconditionError("at least one sample is needed");
    CensusReport rep;
    rep.options = opt;

    Rng rng(opt.seed);
    std::vector<QuadraticSystem> kept;
    const std::size_t cap = 20 * opt.samples;
    while (kept.size() < opt.samples && rep.draws < cap) {
        const std::size_t batch = std::min(opt.samples - kept.size(), cap - rep.draws);
        std::vector<QuadraticSystem> draws;
        for (std::size_t i = 0; i < batch; ++i) draws.push_back(gaussian_system(rng, static_cast<std::size_t>(opt.k)));
        std::vector<CertResult> results(batch);
        parallel_for(batch, opt.threads, [&](std::size_t i) { results[i] = certify_nonresultant(draws[i], opt.depth); });
        rep.draws += batch;
        for (std::size_t i = 0; i < batch; ++i) {
            if (is_certified(results[i])) {
                kept.push_back(std::move(draws[i]));
            } else if (std::holds_alternative<CommonZeroWitness>(results[i])) {
                ++rep.witnesses;
            } else {
                ++rep.inconclusive;
            }
        }
    }
    rep.certified = kept.size();
    if (kept.empty()) throw InconclusiveAtDepth("no certified sample at depth " + std::to_string(opt.depth));

    // degree per sample; -1 when undetermined
    std::vector<int> degree(kept.size(), 0);
    if (opt.k == 3) {
        const std::uint64_t base = rng.bits();
        parallel_for(kept.size(), opt.threads, [&](std::size_t i) {
            Rng local(base + i);
            try {
                degree[i] = mod2_degree(kept[i], random_unit_vector(local), opt.depth, local.bits()).degree;
            } catch (const RegularValueNotFound&) {
                degree[i] = -1;
            }
        });
    }
    std::map<int, std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (degree[i] < 0) {
            ++rep.unclassified;
        } else {
            members[degree[i]].push_back(i);
        }
    }
    for (auto& [d, idx] : members) {
        rep.classes[d] = idx.size();
        shuffle(idx, rng);
    }

    struct Pair {
        std::size_t a, b;
        bool same;
    };
    std::vector<Pair> pairs;
    for (const auto& [d, idx] : members) {
        for (std::size_t i = 0; i + 1 < idx.size(); i += 2) pairs.push_back({idx[i], idx[i + 1], true});
    }
    for (auto a = members.begin(); a != members.end(); ++a) {
        for (auto b = std::next(a); b != members.end(); ++b) {
            const std::size_t n = std::min({opt.cross_pairs, a->second.size(), b->second.size()});
            for (std::size_t i = 0; i < n; ++i) pairs.push_back({a->second[i], b->second[i], false});
        }
    }
    std::vector<char> ok(pairs.size(), 0);
    parallel_for(pairs.size(), opt.threads, [&](std::size_t i) {
        ok[i] = certify_path(kept[pairs[i].a], kept[pairs[i].b], opt.depth).certified ? 1 : 0;
    });
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        PathTally& t = pairs[i].same ? rep.within : rep.across;
        ++t.attempted;
        ++(ok[i] ? t.certified : t.failed);
        if (ok[i] && degree[pairs[i].a] != degree[pairs[i].b]) ++rep.violations;
    }
    return rep;
}

nlohmann::ordered_json census_json(const CensusReport& r, bool meta) {
    auto classes = nlohmann::ordered_json::array();
    for (const auto& [d, n] : r.classes) classes.push_back({{"degree", d}, {"size", n}});
    auto tally = [](const PathTally& t) {
        return nlohmann::ordered_json{{"attempted", t.attempted}, {"certified", t.certified}, {"failed", t.failed}};
    };
    nlohmann::ordered_json j{{"k", r.options.k},
                     {"seed", r.options.seed},
                     {"depth", r.options.depth},
                     {"samples_requested", r.options.samples},
                     {"draws", r.draws},
                     {"certified", r.certified},
                     {"witnesses", r.witnesses},
                     {"inconclusive", r.inconclusive},
                     {"unclassified", r.unclassified},
                     {"classes", classes},
                     {"paths", {{"within_class", tally(r.within)}, {"across_classes", tally(r.across)}}},
                     {"violations", r.violations}};
    if (meta) {
        const auto now = std::chrono::system_clock::now().time_since_epoch();
        j["meta"] = {{"timestamp", std::chrono::duration_cast<std::chrono::seconds>(now).count()}};
    }
    return j;
}

}  // namespace resolvent::certify
