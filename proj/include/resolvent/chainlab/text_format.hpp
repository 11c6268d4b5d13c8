#pragma once

#include <optional>
#include <string>

#include "resolvent/chainlab/sign_cocycle.hpp"
#include "resolvent/chainlab/simplicial_pair.hpp"

namespace resolvent::chainlab {

// Line format:
//   vertices N
//   K v0 v1 ...      facet of K
//   L v0 v1 ...      facet of L
//   edge u v sign    one line per edge when a cocycle is attached
// Blank lines and lines starting with '#' are ignored.

[[nodiscard]] std::string to_text(const SimplicialPair& p, const SignCocycle* lambda = nullptr);

struct ParsedPair {
    SimplicialPair pair;
    std::optional<SignCocycle> cocycle;
};

/// Throws DataError with the offending line number on malformed input.
[[nodiscard]] ParsedPair parse_text(const std::string& text);

}  // namespace resolvent::chainlab
