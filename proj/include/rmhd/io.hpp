#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rmhd/conservative.hpp"
#include "rmhd/cvs.hpp"
#include "rmhd/kernels.hpp"
#include "rmhd/state.hpp"
#include "rmhd/symmetric.hpp"

namespace rmhd::io {

using nlohmann::json;

/// Strict: exactly {"p","u","H","S","eos":{"gamma"}}; throws InvalidInput.
PrimitiveState state_from_json(const json& j);
json state_to_json(const PrimitiveState& U);

/// {"plus": <state>, "minus": <state>}
std::pair<PrimitiveState, PrimitiveState> sheet_pair_from_json(const json& j);

/// Parses text; malformed JSON becomes InvalidInput.
json parse(const std::string& text);

json to_json(const DerivedState& d, const AdmissibilityReport& r);
json to_json(const StabilityReport& r);
json to_json(const ResidualReport& r);

/// One matrix row per line, ordering recorded in the header.
std::string matrices_json(const MatrixQuadruple& quad, std::optional<double> lambda);
std::string matrices_csv(const MatrixQuadruple& quad, std::optional<double> lambda);
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// 17 significant digits, "nan" for NaN.
std::string format_number(double x);

}  // namespace rmhd::io
