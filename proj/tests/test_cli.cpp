#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nlsnf/cli.hpp"

using nlohmann::json;
namespace cli = nlsnf::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("obstruct examples") {
  const Run four = run({"obstruct", "--c-mod", "4"});
  REQUIRE(four.code == 0);
  const json r = json::parse(four.out);
  CHECK(r["verdict"] == "Obstructed");
  CHECK(r["real_pairs"] == 1);
  CHECK(r["jordan_at_zero"] == true);
  CHECK(r["tool"] == cli::kVersion);

  const Run one = run({"obstruct", "--c-mod", "1", "--json"});
  REQUIRE(one.code == 0);
  CHECK(json::parse(one.out)["verdict"] == "NoObstruction");
}

TEST_CASE("exit codes") {
  const Run excluded = run({"spectrum", "--c-mod", "3.14159265"});
  CHECK(excluded.code == 2);
  CHECK(excluded.err.find("Excluded amplitude") != std::string::npos);
  const Run unknown = run({"spectrum", "--c-mod", "4", "--frobnicate"});
  CHECK(unknown.code == 1);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(run({}).code == 1);
  CHECK(run({"teleport"}).code == 1);
  CHECK(run({"spectrum", "--c-mod", "-2"}).code == 2);
  CHECK(run({"spectrum", "--c-mod", "x"}).code == 2);
  CHECK(run({"growth", "--c-mod", "4", "--k", "2"}).code == 2);
  CHECK(run({"hamiltonian", "--which", "H", "--field", "/nonexistent.json"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--version"}).code == 0);
}

TEST_CASE("numerical failure maps to exit 3") {
  // A tolerance below round-off cannot be met.
  const Run r = run({"normal-form", "--c-mod", "4", "--K", "4", "--verify", "--tol", "1e-30"});
  CHECK(r.code == 3);
  CHECK(json::parse(r.out)["passed"] == false);
}

TEST_CASE("spectrum output formats") {
  const Run csv = run({"spectrum", "--c-mod", "4", "--K", "1", "--csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out ==
        "k,re_lambda,im_lambda,regime\n"
        "-1,-31.113875845590773,0,FocusFocus\n"
        "0,0,0,Jordan\n"
        "1,31.113875845590773,0,FocusFocus\n");
  const Run js = run({"spectrum", "--c-mod", "4", "--K", "1", "--json"});
  REQUIRE(js.code == 0);
  CHECK(json::parse(js.out)["rows"].size() == 3);
  CHECK(run({"spectrum", "--c-mod", "4", "--json", "--csv"}).code == 1);
}

TEST_CASE("identical runs give byte-identical output") {
  const std::vector<std::string> args = {"normal-form", "--c-mod", "4", "--K", "6", "--verify"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("config file values are overridden by flags") {
  const auto path = std::filesystem::temp_directory_path() / "nlsnf_cli_config.json";
  std::ofstream(path) << R"({"c-mod": 10, "K": 3})";
  const Run from_file = run({"--config", path.string(), "obstruct"});
  REQUIRE(from_file.code == 0);
  const json r = json::parse(from_file.out);
  CHECK(r["real_pairs"] == 3);
  CHECK(r["K"] == 3);
  const Run overridden = run({"--config", path.string(), "obstruct", "--c-mod", "1"});
  REQUIRE(overridden.code == 0);
  CHECK(json::parse(overridden.out)["verdict"] == "NoObstruction");
  CHECK(json::parse(overridden.out)["K"] == 3);
  std::filesystem::remove(path);
  CHECK(run({"--config", "/nonexistent.json", "obstruct", "--c-mod", "1"}).code == 2);
}

TEST_CASE("hamiltonian subcommand") {
  const auto path = std::filesystem::temp_directory_path() / "nlsnf_cli_field.json";
  std::ofstream(path) << R"({"K": 0, "z": [[1.0, 1.0]], "w": [[-1.0, 1.0]]})";
  const Run h1 = run({"hamiltonian", "--which", "H1", "--field", path.string()});
  REQUIRE(h1.code == 0);
  const json r = json::parse(h1.out);
  CHECK(r["name"] == "H1");
  CHECK(r["value"][0].get<double>() == doctest::Approx(2.0));
  CHECK(run({"hamiltonian", "--which", "Hc", "--field", path.string()}).code == 2);
  const Run hc = run({"hamiltonian", "--which", "Hc", "--field", path.string(), "--c", "1,1"});
  REQUIRE(hc.code == 0);
  CHECK(json::parse(hc.out)["value"][0].get<double>() == doctest::Approx(-4.0));
  CHECK(run({"hamiltonian", "--which", "Hc", "--field", path.string(), "--c", "1"}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("simulate writes a CSV trajectory") {
  const auto path = std::filesystem::temp_directory_path() / "nlsnf_cli_traj.csv";
  const Run r = run({"simulate", "--c-mod", "1", "--T", "0.01", "--dt", "1e-3", "--K", "4", "--N", "32",
                     "--stride", "5", "--perturb", "1,1e-3", "--out", path.string()});
  REQUIRE(r.code == 0);
  const json summary = json::parse(r.out);
  CHECK(summary["steps"] == 10);
  CHECK(summary["samples"] == 3);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("t,H,H1,abs_z_-4,", 0) == 0);
  std::filesystem::remove(path);
  CHECK(run({"simulate", "--c-mod", "1", "--K", "4", "--N", "8"}).code == 2);
}

TEST_CASE("verify-all quick mode") {
  const Run r = run({"verify-all", "--K", "8", "--json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["criteria"].size() == 12);
  CHECK(j["criteria"][9]["skipped"] == true);
}
