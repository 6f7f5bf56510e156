// format.hpp: number formatting and JSON views of library results

#pragma once

#include "cvsteer/gaussian_state.hpp"
#include "cvsteer/measures.hpp"
#include "cvsteer/thresholds.hpp"

#include <json.hpp>

#include <string>

namespace cvsteer::cli {

/// %.12g; infinities print as "inf" / "-inf".
std::string format_number(double v);

/// Finite times as numbers, the unbounded sentinel as the string "inf".
nlohmann::json to_json(const ThresholdTime& t);

nlohmann::json to_json(const GaussianState& state);

/// Report plus signed margins (negative = steerable).
nlohmann::json report_json(const GaussianState& state, const SteeringReport& report);

/// `rate` converts times to the dimensionless columns (rate * t).
nlohmann::json to_json(const ThresholdResult& res, double rate);

} // namespace cvsteer::cli
