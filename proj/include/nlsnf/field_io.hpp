#pragma once

// JSON and CSV serialization. Fields are stored as
//   {"K": int, "z": [[re, im], ...], "w": [[re, im], ...]}
// with coefficients ordered k = -K..K.

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nlsnf/phase_space.hpp"

namespace nlsnf::io {

nlohmann::json to_json(const SpectralField& f);
// Throws ValidationError with a diagnostic on malformed input.
SpectralField field_from_json(const nlohmann::json& j);

SpectralField read_field(const std::string& path);
void write_field(const std::string& path, const SpectralField& f);

// Shortest form that round-trips: 17 significant digits, '.' decimal
// separator whatever the global locale.
std::string format_double(double x);

nlohmann::json complex_to_json(cplx v);

// Pretty-printed JSON with a trailing newline.
void dump(std::ostream& os, const nlohmann::json& j);

}  // namespace nlsnf::io
