#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <locale>
#include <random>

#include "nlsnf/errors.hpp"
#include "nlsnf/field_io.hpp"
#include "oracles.hpp"

using namespace nlsnf;

TEST_CASE("field JSON round-trips exactly") {
  std::mt19937_64 rng(50);
  const auto f = oracle::random_field(5, 5, rng);
  CHECK(io::field_from_json(io::to_json(f)) == f);
  CHECK(io::field_from_json(nlohmann::json::parse(io::to_json(f).dump())) == f);

  const auto path = std::filesystem::temp_directory_path() / "nlsnf_io_roundtrip.json";
  io::write_field(path.string(), f);
  CHECK(io::read_field(path.string()) == f);
  std::filesystem::remove(path);
}

TEST_CASE("malformed field JSON is rejected with a diagnostic") {
  using nlohmann::json;
  CHECK_THROWS_AS(io::field_from_json(json::array()), ValidationError);
  CHECK_THROWS_AS(io::field_from_json(json{{"z", json::array()}}), ValidationError);
  CHECK_THROWS_AS(io::field_from_json(json{{"K", 1}, {"z", json::array()}, {"w", json::array()}}),
                  DimensionError);
  const json bad_entry = {{"K", 0}, {"z", {{1.0}}}, {"w", {{0.0, 0.0}}}};
  CHECK_THROWS_WITH_AS(io::field_from_json(bad_entry), doctest::Contains("[re, im]"), ValidationError);

  const auto path = std::filesystem::temp_directory_path() / "nlsnf_io_broken.json";
  std::ofstream(path) << "{\"K\": 1, \"z\": [";
  CHECK_THROWS_WITH_AS(io::read_field(path.string()), doctest::Contains("cannot parse"), ValidationError);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(io::read_field("/nonexistent/field.json"), ValidationError);
}

TEST_CASE("doubles are formatted with 17 digits and a dot") {
  const double x = 0.1 + 0.2;
  const std::string s = io::format_double(x);
  CHECK(s == "0.30000000000000004");
  CHECK(std::stod(s) == x);
  CHECK(io::format_double(-31.113875845590773) == "-31.113875845590773");

  // A comma-decimal global locale must not leak into the output.
  try {
    const std::locale old = std::locale::global(std::locale("de_DE.UTF-8"));
    CHECK(io::format_double(1.5) == "1.5");
    std::locale::global(old);
  } catch (const std::runtime_error&) {
    MESSAGE("de_DE.UTF-8 locale unavailable; locale independence only checked under the default");
  }
}
