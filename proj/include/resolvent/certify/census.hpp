#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <json.hpp>

#include "resolvent/certify/certify.hpp"

namespace resolvent::certify {

struct CensusOptions {
    int k = 3;
    std::size_t samples = 200;  // certified samples wanted
    std::uint64_t seed = 7;
    int depth = 12;
    unsigned threads = 1;
    /// Cross-class pairs tried per pair of classes; each success is a violation.
    std::size_t cross_pairs = 10;
};

struct PathTally {
    std::size_t attempted = 0;
    std::size_t certified = 0;
    std::size_t failed = 0;
};

struct CensusReport {
    CensusOptions options;
    std::size_t draws = 0;
    std::size_t certified = 0;
    std::size_t witnesses = 0;
    std::size_t inconclusive = 0;
    std::size_t unclassified = 0;           // degree not determined
    std::map<int, std::size_t> classes;     // degree -> size; k = 2 uses class 0
    PathTally within;
    PathTally across;
    /// Certified paths joining samples of different degree.
    std::size_t violations = 0;
};

/**
 * Draws Gaussian systems until `samples` are certified (at most 20 draws per
 * requested sample), classifies them by mod-2 degree when k = 3, then tries
 * certified straight-line paths on a random matching inside each class and
 * on a few pairs across classes. The result depends only on the options, not
 * on the number of threads.
 */
[[nodiscard]] CensusReport component_census(const CensusOptions& opt);

/// Report as JSON; meta adds a timestamp field.
[[nodiscard]] nlohmann::ordered_json census_json(const CensusReport& r, bool meta);

}  // namespace resolvent::certify
