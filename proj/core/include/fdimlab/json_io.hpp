#pragma once

#include <json.hpp>

#include "fdimlab/checks.hpp"

namespace fdimlab {

using ordered_json = nlohmann::ordered_json;

// JSON views are schema-stable and byte-deterministic for fixed inputs,
// caps, and seed: insertion-ordered objects, integers and strings only.
ordered_json to_json(const FindimEstimate& e);
ordered_json to_json(const BoundReport& r);
ordered_json to_json(const PdResult& p);
ordered_json gb_to_json(const AlgebraPipeline& p);
ordered_json algebra_to_json(const FDAlgebra& a, bool with_table);
ordered_json resolution_to_json(const Resolution& r);

}  // namespace fdimlab
