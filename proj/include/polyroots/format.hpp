#pragma once

#include <string>

#include <json.hpp>

#include "polyroots/poly.hpp"

namespace polyroots {

/// %.17g; "nan"/"inf" spelled out for text output.
std::string format_double(double v);
/// "re+imi" with %.17g parts.
std::string format_complex(Complex z);
/// Scientific notation with three significant digits.
std::string format_residual(double r);

/// Compact JSON with sorted keys and every float printed with %.17g, so
/// parsing and re-serializing reproduces the same bytes. Non-finite floats
/// become null.
std::string canonical_json(const nlohmann::json& j);

/// {"method", "roots": [{"re", "im", "residual", "branch"}], "warnings", "status"}
nlohmann::json report_to_json(const RootReport& report, const std::string& status);

}  // namespace polyroots
