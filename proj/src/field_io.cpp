#include "nlsnf/field_io.hpp"

#include <cmath>
#include <fstream>
#include <locale>
#include <sstream>

#include "nlsnf/errors.hpp"

namespace nlsnf::io {

namespace {

std::vector<cplx> coefficient_list(const nlohmann::json& j, std::string_view key, int K) {
  const std::string name(key);
  if (!j.contains(name)) throw ValidationError("field JSON lacks \"" + name + "\"");
  const auto& arr = j.at(name);
  if (!arr.is_array()) throw ValidationError("\"" + name + "\" must be an array");
  if (arr.size() != static_cast<std::size_t>(2 * K + 1)) {
    throw DimensionError("\"" + name + "\" has " + std::to_string(arr.size()) +
                         " entries, expected 2K+1 = " + std::to_string(2 * K + 1));
  }
  std::vector<cplx> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& e = arr[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ValidationError("\"" + name + "\"[" + std::to_string(i) + "] must be [re, im]");
    }
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

}  // namespace

nlohmann::json complex_to_json(cplx v) { return nlohmann::json::array({v.real(), v.imag()}); }

nlohmann::json to_json(const SpectralField& f) {
  nlohmann::json z = nlohmann::json::array();
  nlohmann::json w = nlohmann::json::array();
  for (const cplx v : f.z_coeffs()) z.push_back(complex_to_json(v));
  for (const cplx v : f.w_coeffs()) w.push_back(complex_to_json(v));
  return {{"K", f.truncation()}, {"z", std::move(z)}, {"w", std::move(w)}};
}

SpectralField field_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("field JSON must be an object");
  if (!j.contains("K") || !j.at("K").is_number_integer()) {
    throw ValidationError("field JSON needs an integer \"K\"");
  }
  const int K = j.at("K").get<int>();
  if (K < 0) throw ValidationError("\"K\" must be non-negative");
  return SpectralField(K, coefficient_list(j, "z", K), coefficient_list(j, "w", K));
}

SpectralField read_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open field file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("cannot parse " + path + ": " + e.what());
  }
  return field_from_json(j);
}

void write_field(const std::string& path, const SpectralField& f) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  dump(out, to_json(f));
}

std::string format_double(double x) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << x;
  return os.str();
}

void dump(std::ostream& os, const nlohmann::json& j) { os << j.dump(2) << '\n'; }

}  // namespace nlsnf::io
