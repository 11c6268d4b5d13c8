#pragma once

#include <string>

#include <json.hpp>

#include "resolvent/ssq/pipelines.hpp"

namespace resolvent::ssq {

[[nodiscard]] nlohmann::ordered_json table_json(const E1Table& t);
[[nodiscard]] nlohmann::ordered_json spec_json(const DifferentialSpec& d);
[[nodiscard]] nlohmann::ordered_json poincare_json(const PoincarePolynomial& p);

/// {"k","parity","e1","einf","differentials","poincare"}.
[[nodiscard]] nlohmann::ordered_json pipeline_json(const PipelineResult& r);

/// Grid with columns p left to right and rows q from top to bottom; empty
/// cells are dots, undetermined ones "?".
[[nodiscard]] std::string render_table(const E1Table& t);

}  // namespace resolvent::ssq
