#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../tools/cli.hpp"

using namespace contact_index;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "contact-index");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// A fresh directory whose calibration path is exported for the duration of a test.
struct Workspace {
  fs::path dir;
  fs::path calibration;

  explicit Workspace(const std::string& name) {
    dir = fs::temp_directory_path() / ("contact_index_cli_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    calibration = dir / "calibration.json";
    ::setenv("CONTACT_INDEX_CALIBRATION", calibration.c_str(), 1);
  }
  ~Workspace() { fs::remove_all(dir); }
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  void calibrate() const { REQUIRE(run({"calibrate"}).code == kOk); }
};

}  // namespace

TEST_CASE("commands refuse to run without a calibration record") {
  Workspace ws("nocal");
  const Run r = run({"character", "--preset", "circle"});
  CHECK(r.code == kConfigError);
  CHECK(r.err.find("calibrate") != std::string::npos);
}

TEST_CASE("calibrate is idempotent") {
  Workspace ws("idem");
  const Run first = run({"calibrate"});
  CHECK(first.code == kOk);
  CHECK(first.out.find("poisson_sign=1") != std::string::npos);
  const std::string record = read_file(ws.calibration);
  const auto doc = nlohmann::json::parse(record);
  CHECK(doc["version"] == 1);
  CHECK(doc["todd_direction"] == "x/(1-e^{-x})");
  CHECK(run({"calibrate"}).code == kOk);
  CHECK(read_file(ws.calibration) == record);
}

TEST_CASE("a perturbed oracle fails calibration") {
  Workspace ws("perturb");
  CHECK(run({"calibrate", "--perturb-oracle", "1"}).code == kCalibrationFailure);
  CHECK_FALSE(fs::exists(ws.calibration));
}

TEST_CASE("a corrupted calibration record is a configuration error") {
  Workspace ws("corrupt");
  std::ofstream(ws.calibration) << "{\"version\": 7}";
  CHECK(run({"character", "--preset", "circle"}).code == kConfigError);
}

TEST_CASE("circle character as CSV") {
  Workspace ws("csv");
  ws.calibrate();
  const Run r = run({"character", "--preset", "circle", "--max-m", "5", "--format", "csv"});
  REQUIRE(r.code == kOk);
  std::string expected = "m,value\n";
  for (int m = -5; m <= 5; ++m) expected += std::to_string(m) + ",1\n";
  CHECK(r.out == expected);
}

TEST_CASE("germ reports") {
  Workspace ws("germ");
  ws.calibrate();
  const Run circle = run({"germ", "--preset", "circle", "--at", "0/1"});
  REQUIRE(circle.code == kOk);
  const auto doc = nlohmann::json::parse(circle.out);
  CHECK(doc["model_id"] == "circle");
  REQUIRE(doc["germs"].size() == 1);
  const auto& terms = doc["germs"][0]["germ"]["terms"];
  REQUIRE(terms.size() == 1);
  CHECK(terms[0]["scalar"] == "(2·ζ_4^0)·π^1");

  const Run off = run({"germ", "--preset", "hopf", "--n", "1", "--at", "1/2"});
  REQUIRE(off.code == kOk);
  CHECK(nlohmann::json::parse(off.out)["germs"][0]["germ"]["terms"].empty());

  const Run weighted = run({"germ", "--preset", "weighted-s3", "--weights", "1,2", "--at", "1/2"});
  REQUIRE(weighted.code == kOk);
  CHECK(nlohmann::json::parse(weighted.out)["germs"][0]["germ"]["terms"].size() == 1);

  CHECK(run({"germ", "--preset", "circle", "--at", "2/4"}).code == kConfigError);
  CHECK(run({"germ", "--preset", "circle", "--at", "x"}).code == kConfigError);
  CHECK(run({"germ", "--preset", "prequantum-cpn", "--n", "1", "--at", "0/1"}).code == kUnsupported);
}

TEST_CASE("dh command") {
  Workspace ws("dh");
  ws.calibrate();
  const Run r = run({"dh", "--preset", "hopf", "--n", "1"});
  REQUIRE(r.code == kOk);
  const auto terms = nlohmann::json::parse(r.out)["germs"][0]["germ"]["terms"];
  REQUIRE(terms.size() == 1);
  CHECK(terms[0]["derivative_order"] == 1);
}

TEST_CASE("verify exit codes") {
  Workspace ws("verify");
  ws.calibrate();
  CHECK(run({"verify", "--preset", "hopf", "--n", "1", "--max-m", "50"}).code == kOk);
  CHECK(run({"verify", "--preset", "weighted-s3", "--weights", "2,3", "--max-m", "100"}).code == kOk);
  CHECK(run({"verify", "--preset", "prequantum-cpn", "--n", "1", "--max-m", "10"}).code == kOk);
  CHECK(run({"verify", "--all", "--max-m", "30"}).code == kOk);
  CHECK(run({"verify", "--model", std::string(CONTACT_INDEX_TEST_DATA) + "/hopf_s5.json"}).code == kUnsupported);
}

TEST_CASE("configuration errors") {
  Workspace ws("config");
  ws.calibrate();
  CHECK(run({"character", "--preset", "torus"}).code == kConfigError);
  CHECK(run({"character"}).code == kConfigError);
  CHECK(run({"character", "--preset", "weighted-s3", "--weights", "2,4"}).code == kConfigError);
  CHECK(run({"character", "--preset", "circle", "--max-m", "0"}).code == kConfigError);
  CHECK(run({"character", "--preset", "circle", "--format", "xml"}).code == kConfigError);
  CHECK(run({"character", "--model", (ws.dir / "missing.json").string()}).code == kConfigError);
  CHECK(run({"frobnicate"}).code == kConfigError);
  CHECK(run({}).code == kConfigError);
}

TEST_CASE("custom model documents") {
  Workspace ws("model");
  ws.calibrate();
  const Run r = run({"character", "--model", std::string(CONTACT_INDEX_TEST_DATA) + "/hopf_s5.json", "--max-m", "4",
                     "--format", "csv"});
  REQUIRE(r.code == kOk);
  // χ(CP², O(−m)) for m = −4..4.
  CHECK(r.out == "m,value\n-4,15\n-3,10\n-2,6\n-1,3\n0,1\n1,0\n2,0\n3,1\n4,3\n");
  const fs::path bad = ws.dir / "bad.json";
  std::ofstream(bad) << R"({"rank": 1, "ambient_n": 0, "torsion_support": ["0/1"], "components": [)"
                     << R"({"at": "0/1", "dim": 1, "moment": {"mu": "0", "reeb_weight": [1]},)"
                     << R"( "pairing": [{"mono": [0], "value": "(2·ζ_4^0)·π^1"}]}]})";
  const Run invalid = run({"character", "--model", bad.string()});
  CHECK(invalid.code == kConfigError);
  CHECK(invalid.err.find("components[0].moment.mu") != std::string::npos);
}

TEST_CASE("output is deterministic and written to --out") {
  Workspace ws("determinism");
  ws.calibrate();
  const std::vector<std::string> args{"character", "--preset", "weighted-s3", "--weights", "3,4", "--max-m", "40"};
  const Run a = run(args);
  const Run b = run(args);
  REQUIRE(a.code == kOk);
  CHECK(a.out == b.out);
  const fs::path target = ws.dir / "report.json";
  auto with_out = args;
  with_out.insert(with_out.end(), {"--out", target.string()});
  const Run c = run(with_out);
  CHECK(c.code == kOk);
  CHECK(c.out.empty());
  CHECK(read_file(target) == a.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["oracle_match"].is_null());
  CHECK(doc["quasi_polynomial"]["period"] == 12);

  const Run cor1 = run({"corollary", "--preset", "prequantum-cpn", "--n", "1", "--max-m", "5"});
  const Run cor2 = run({"corollary", "--preset", "prequantum-cpn", "--n", "1", "--max-m", "5"});
  CHECK(cor1.code == kOk);
  CHECK(cor1.out == cor2.out);
}
