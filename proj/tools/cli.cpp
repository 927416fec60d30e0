#include "cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <optional>

#include "contact_index/calibration.hpp"
#include "contact_index/errors.hpp"
#include "contact_index/model_io.hpp"
#include "contact_index/oracle.hpp"
#include "contact_index/report.hpp"

namespace contact_index {

namespace {

struct RunConfig {
  std::string preset;
  int n = 1;
  std::string weights = "1,2";
  std::string model_path;
  std::string at = "0/1";
  long max_m = 50;
  long max_k = 20;
  std::string out_path;
  std::string format = "json";
  int digits = 3;
  bool all = false;
  long perturb_oracle = 0;
};

struct ResolvedModel {
  std::string id;
  std::string preset;
  int n = 0;
  long a = 0, b = 0;
  ContactModel model;
};

std::pair<long, long> parse_weights(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ValidationError("--weights", "expected a,b");
  try {
    std::size_t used = 0;
    const long a = std::stol(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("a");
    const std::string rest = text.substr(comma + 1);
    const long b = std::stol(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("b");
    return {a, b};
  } catch (const std::logic_error&) {
    throw ValidationError("--weights", "expected two integers a,b, got '" + text + "'");
  }
}

ResolvedModel resolve(const RunConfig& cfg) {
  ResolvedModel r;
  if (!cfg.model_path.empty() && !cfg.preset.empty()) throw ValidationError("--model", "give either --model or --preset");
  if (!cfg.model_path.empty()) {
    r.model = load_model(cfg.model_path);
    r.id = "model:" + std::filesystem::path(cfg.model_path).filename().string();
    return r;
  }
  r.preset = cfg.preset;
  try {
    if (cfg.preset == "circle") {
      r.model = preset_circle();
      r.id = "circle";
    } else if (cfg.preset == "hopf") {
      r.n = cfg.n;
      r.model = preset_hopf_sphere(cfg.n);
      r.id = "hopf-n" + std::to_string(cfg.n);
    } else if (cfg.preset == "weighted-s3") {
      std::tie(r.a, r.b) = parse_weights(cfg.weights);
      r.model = preset_weighted_s3(r.a, r.b);
      r.id = "weighted-s3-" + std::to_string(r.a) + "-" + std::to_string(r.b);
    } else if (cfg.preset == "prequantum-cpn") {
      r.n = cfg.n;
      r.model = preset_prequantum_cpn(cfg.n);
      r.id = "prequantum-cpn-n" + std::to_string(cfg.n);
    } else if (cfg.preset.empty()) {
      throw ValidationError("--preset", "a preset or --model is required");
    } else {
      throw ValidationError("--preset", "unknown preset '" + cfg.preset + "'");
    }
  } catch (const DomainError& e) {
    throw ValidationError("--preset", e.what());
  }
  return r;
}

std::map<long, Integer> character_oracle(const ResolvedModel& r, long max_m) {
  std::function<Integer(long)> f;
  if (r.preset == "circle") {
    f = [](long) { return Integer(1); };
  } else if (r.preset == "hopf") {
    f = [n = r.n](long m) { return cpn_chi(n, -m); };
  } else if (r.preset == "weighted-s3") {
    f = [a = r.a, b = r.b](long m) { return sphere_char_oracle(a, b, m); };
  } else {
    throw UnsupportedError("no oracle for " + r.id + "; verify supports the bundled presets");
  }
  std::map<long, Integer> out;
  for (long m = -max_m; m <= max_m; ++m) out.emplace(m, f(m));
  return out;
}

Conventions require_calibration() {
  const auto path = calibration_path();
  const auto conv = read_calibration(path);
  if (!conv) {
    throw ValidationError("calibration", "no calibration record at " + path.string() +
                                             "; run `contact-index calibrate` first");
  }
  return *conv;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    write_file_atomic(cfg.out_path, text);
  }
}

void check_bounds(const RunConfig& cfg) {
  if (cfg.max_m < 1) throw ValidationError("--max-m", "must be positive");
  if (cfg.max_k < 1) throw ValidationError("--max-k", "must be positive");
  if (cfg.digits < 0 || cfg.digits > 30) throw ValidationError("--digits", "must be between 0 and 30");
  if (cfg.format != "json" && cfg.format != "csv") throw ValidationError("--format", "must be json or csv");
}

TorsionPoint parse_at(const std::string& text) {
  try {
    const TorsionPoint t = parse_torsion_point(text);
    for (std::size_t start = 0; start <= text.size();) {
      const auto comma = text.find(',', start);
      const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      const Rational r = parse_rational(part);
      if (to_string(r) != part && to_string(r) + "/1" != part) throw ParseError("not a reduced fraction");
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return t;
  } catch (const ParseError& e) {
    throw ValidationError("--at", "expected a reduced fraction p/q, got '" + text + "' (" + e.what() + ")");
  }
}

void print_mismatches(const std::string& id, const std::vector<Mismatch>& mismatches, std::ostream& err) {
  err << id << ": " << mismatches.size() << " coefficients differ from the oracle\n";
  for (std::size_t i = 0; i < mismatches.size() && i < 10; ++i) {
    err << "  m=" << mismatches[i].m << " engine=" << mismatches[i].engine << " oracle=" << mismatches[i].oracle
        << "\n";
  }
}

int cmd_germ(const RunConfig& cfg, bool dh, std::ostream& out) {
  check_bounds(cfg);
  if (cfg.format != "json") throw ValidationError("--format", "germs are emitted as JSON only");
  const Conventions conv = require_calibration();
  const ResolvedModel r = resolve(cfg);
  std::vector<std::pair<TorsionPoint, DeltaGerm>> germs;
  if (dh) {
    germs.emplace_back(identity_point(1), dh_fourier(r.model, conv));
  } else {
    const TorsionPoint at = parse_at(cfg.at);
    if (at.size() != static_cast<std::size_t>(r.model.rank) || r.model.rank != 1) {
      throw UnsupportedError("germs are evaluated on rank-1 models at one angle p/q");
    }
    germs.emplace_back(at, germ_at(r.model, at, conv));
  }
  emit(cfg, dump(germ_report(r.id, conv, germs, cfg.digits)), out);
  return kOk;
}

int run_character(const RunConfig& cfg, const ResolvedModel& r, const Conventions& conv, bool verify,
                  std::ostream& out, std::ostream& err, bool write) {
  if (r.model.rank == 2) {
    if (cfg.format != "json") throw ValidationError("--format", "the corollary table is emitted as JSON only");
    const auto table = corollary_expand(r.model, cfg.max_m, conv);
    std::optional<std::map<long, std::map<long, Integer>>> oracle;
    if (verify) {
      if (r.preset != "prequantum-cpn") throw UnsupportedError("no oracle for " + r.id);
      oracle.emplace();
      for (long m = -cfg.max_m; m <= cfg.max_m; ++m) (*oracle)[m] = equivariant_cpn_character(r.n, m);
    }
    std::vector<Mismatch> mismatches;
    if (write) emit(cfg, dump(corollary_report(r.id, conv, table, cfg.max_k, oracle, &mismatches)), out);
    if (!mismatches.empty()) {
      print_mismatches(r.id, mismatches, err);
      return kMismatch;
    }
    return kOk;
  }
  const CharacterResult res = assemble_character(r.model, cfg.max_m, conv);
  std::optional<std::map<long, Integer>> oracle;
  if (verify) oracle = character_oracle(r, cfg.max_m);
  std::vector<Mismatch> mismatches;
  const auto doc = character_report(r.id, conv, res, cfg.digits, oracle, &mismatches);
  if (write) emit(cfg, cfg.format == "csv" ? character_csv(res.coefficients) : dump(doc), out);
  if (!mismatches.empty()) {
    print_mismatches(r.id, mismatches, err);
    return kMismatch;
  }
  if (verify && !res.non_integer.empty()) {
    err << r.id << ": " << res.non_integer.size() << " coefficients are not integers\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_character(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_bounds(cfg);
  const Conventions conv = require_calibration();
  const ResolvedModel r = resolve(cfg);
  if (r.model.rank != 1) throw UnsupportedError("character needs a rank-1 model; use corollary for " + r.id);
  return run_character(cfg, r, conv, false, out, err, true);
}

int cmd_corollary(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_bounds(cfg);
  const Conventions conv = require_calibration();
  const ResolvedModel r = resolve(cfg);
  if (r.model.rank != 2) throw UnsupportedError("corollary needs a rank-2 prequantum model");
  return run_character(cfg, r, conv, false, out, err, true);
}

std::vector<RunConfig> bundled_presets(const RunConfig& base) {
  std::vector<RunConfig> out;
  const auto add = [&](std::string preset, int n, std::string weights) {
    RunConfig c = base;
    c.preset = std::move(preset);
    c.n = n;
    c.weights = std::move(weights);
    c.model_path.clear();
    c.out_path.clear();
    out.push_back(c);
  };
  add("circle", 1, "");
  for (int n = 1; n <= 3; ++n) add("hopf", n, "");
  for (const char* w : {"1,1", "1,2", "2,3", "3,4"}) add("weighted-s3", 1, w);
  for (int n = 1; n <= 2; ++n) add("prequantum-cpn", n, "");
  return out;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_bounds(cfg);
  const Conventions conv = require_calibration();
  if (!cfg.all) return run_character(cfg, resolve(cfg), conv, true, out, err, true);
  if (!cfg.preset.empty() || !cfg.model_path.empty()) throw ValidationError("--all", "cannot be combined with a model");
  nlohmann::json summary = nlohmann::json::array();
  int code = kOk;
  for (const auto& c : bundled_presets(cfg)) {
    const ResolvedModel r = resolve(c);
    const int rc = run_character(c, r, conv, true, out, err, false);
    summary.push_back({{"model_id", r.id}, {"oracle_match", rc == kOk}});
    if (rc != kOk) code = rc;
  }
  emit(cfg, dump({{"calibration", calibration_to_json(conv)}, {"max_m", cfg.max_m}, {"results", summary}}), out);
  return code;
}

int cmd_calibrate(const RunConfig& cfg, std::ostream& out) {
  const Conventions conv = calibrate(cfg.perturb_oracle);
  const auto path = calibration_path();
  write_file_atomic(path, dump(calibration_to_json(conv)));
  out << "calibration written to " << path.string() << ": poisson_sign=" << conv.poisson_sign
      << " orientation_sign=" << conv.orientation_sign << " todd_direction=" << to_string(conv.todd) << "\n";
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact equivariant index calculator for contact manifolds with torus actions", "contact-index"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto model_options = [&cfg](CLI::App* sub) {
    sub->add_option("--preset", cfg.preset, "circle | hopf | weighted-s3 | prequantum-cpn");
    sub->add_option("--n", cfg.n, "dimension parameter of hopf and prequantum-cpn");
    sub->add_option("--weights", cfg.weights, "weights a,b of weighted-s3");
    sub->add_option("--model", cfg.model_path, "model document (JSON)");
    sub->add_option("--max-m", cfg.max_m, "largest |m| of Fourier coefficients");
    sub->add_option("--max-k", cfg.max_k, "largest |weight| shown in corollary tables");
    sub->add_option("--out", cfg.out_path, "output path (written atomically); stdout if omitted");
    sub->add_option("--format", cfg.format, "json | csv");
    sub->add_option("--digits", cfg.digits, "digits of approximate annotations");
  };
  auto* germ = app.add_subcommand("germ", "germ of the index at a torsion point");
  model_options(germ);
  germ->add_option("--at", cfg.at, "torsion point p/q");
  auto* character = app.add_subcommand("character", "Fourier coefficients and quasi-polynomial");
  model_options(character);
  auto* dh = app.add_subcommand("dh", "Duistermaat-Heckman germ at the identity");
  model_options(dh);
  auto* corollary = app.add_subcommand("corollary", "double expansion of a prequantum model");
  model_options(corollary);
  auto* verify = app.add_subcommand("verify", "compare against the brute-force oracles");
  model_options(verify);
  verify->add_flag("--all", cfg.all, "verify every bundled preset");
  auto* calibrate_cmd = app.add_subcommand("calibrate", "select and record the sign conventions");
  calibrate_cmd->add_option("--perturb-oracle", cfg.perturb_oracle, "test hook: offset added to the oracle values");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kConfigError;
  }

  try {
    if (germ->parsed()) return cmd_germ(cfg, false, out);
    if (dh->parsed()) return cmd_germ(cfg, true, out);
    if (character->parsed()) return cmd_character(cfg, out, err);
    if (corollary->parsed()) return cmd_corollary(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (calibrate_cmd->parsed()) return cmd_calibrate(cfg, out);
  } catch (const CalibrationError& e) {
    err << "calibration failure: " << e.what() << "\n";
    return kCalibrationFailure;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const FitError& e) {
    err << "fit failure: " << e.what() << "\n";
    return kMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace contact_index
