/* Copyright 2026 The lsc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// lsc: structure analysis, scheme construction and simulation for
// distributed linearly separable computation.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lsc/errors.h"
#include "lsc/serialize.h"

namespace {

using lsc::Cost;
using lsc::Rational;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitConstruction = 3;
constexpr int kExitVerification = 4;

struct RunConfig {
  std::string assignment_path;
  std::string cost = "1";
  std::string costs;
  std::string cost_range;
  std::string modulus = std::to_string(lsc::kMersenne61);
  bool allow_small_modulus = false;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 1;
  std::size_t length = 64;
  std::string format = "json";
  std::string out;
  std::string matrices = "full";
};

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(const std::string& text, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw lsc::UsageError(std::string(what) + " must be an unsigned integer, got '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw lsc::UsageError(std::string(what) + " does not fit in 64 bits");
  }
}

std::vector<Cost> parse_cost_list(const std::string& text) {
  std::vector<Cost> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Cost::parse(item));
  if (out.empty()) throw lsc::UsageError("--costs needs at least one cost");
  return out;
}

// lo..hi:step, all exact rationals.
std::vector<Cost> parse_cost_range(const std::string& text) {
  const auto dots = text.find("..");
  const auto colon = text.find(':', dots == std::string::npos ? 0 : dots);
  if (dots == std::string::npos || colon == std::string::npos) {
    throw lsc::ParseError("--cost-range must look like lo..hi:step");
  }
  const Rational lo = Cost::parse(text.substr(0, dots)).value();
  const Rational hi = Cost::parse(text.substr(dots + 2, colon - dots - 2)).value();
  const Rational step = Cost::parse(text.substr(colon + 1)).value();
  if (hi < lo) throw lsc::UsageError("--cost-range upper end is below the lower end");
  std::vector<Cost> out;
  for (Rational c = lo; c <= hi; c += step) {
    out.emplace_back(c.numerator(), c.denominator());
    if (out.size() > 100000) throw lsc::UsageError("--cost-range produces too many costs");
  }
  return out;
}

lsc::PrimeField make_field(const RunConfig& cfg) {
  return lsc::PrimeField(parse_u64(cfg.modulus, "--modulus"), cfg.allow_small_modulus);
}

std::uint64_t resolve_seed(const RunConfig& cfg) {
  if (cfg.seed) return *cfg.seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw lsc::UsageError("cannot open output file " + cfg.out);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string text_header(const json& prov) {
  std::string out;
  for (const char* key : {"tool", "version", "modulus", "seed", "assignment_hash"}) {
    out += std::string("# ") + key + ": " + prov.at(key).get<std::string>() + "\n";
  }
  return out;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw lsc::UsageError("format '" + cfg.format + "' is not supported by this command");
}

int cmd_analyze(const RunConfig& cfg) {
  require_format(cfg, {"json", "text"});
  const auto field = make_field(cfg);
  const std::uint64_t seed = resolve_seed(cfg);
  const auto a = lsc::Assignment::load(cfg.assignment_path);
  const auto rep = lsc::analyze(a, Cost::parse(cfg.cost));
  const json prov = lsc::provenance(a, field.modulus(), seed);
  if (cfg.format == "text") {
    emit(cfg, text_header(prov) + lsc::to_text(rep));
  } else {
    json j = prov;
    j["report"] = lsc::to_json(rep);
    emit(cfg, dump(j));
  }
  return kExitOk;
}

int cmd_build(const RunConfig& cfg) {
  require_format(cfg, {"json", "text"});
  if (cfg.matrices != "full" && cfg.matrices != "omit") {
    throw lsc::UsageError("--matrices must be full or omit");
  }
  const auto field = make_field(cfg);
  const std::uint64_t seed = resolve_seed(cfg);
  const auto a = lsc::Assignment::load(cfg.assignment_path);
  const auto scheme = lsc::build(a, Cost::parse(cfg.cost), seed, field);
  const auto enc = lsc::verify_encodability(scheme);
  const auto dec = lsc::verify_decodability(scheme);
  if (cfg.format == "text") {
    std::ostringstream os;
    os << text_header(lsc::provenance(a, field.modulus(), seed));
    os << "kc_pieces=" << scheme.kc_pieces << " rows=" << scheme.total_rows()
       << " virtual_datasets=" << scheme.virtual_datasets() << " retries_used=" << scheme.retries_used << "\n";
    os << "encodable=" << (enc.ok() ? "true" : "false") << " stack_rank=" << dec.rank << "/" << dec.required
       << " recovers_task=" << (dec.recovers_task ? "true" : "false") << "\n";
    emit(cfg, os.str());
  } else {
    emit(cfg, dump(lsc::to_json(scheme, cfg.matrices == "omit" ? lsc::MatrixMode::kOmit : lsc::MatrixMode::kFull)));
  }
  if (!enc.ok() || !dec.ok()) throw VerificationFailed("built scheme failed verification");
  return kExitOk;
}

int cmd_certify(const RunConfig& cfg) {
  require_format(cfg, {"json", "text"});
  const auto field = make_field(cfg);
  const std::uint64_t seed = resolve_seed(cfg);
  const auto a = lsc::Assignment::load(cfg.assignment_path);
  const auto w = lsc::certificate_realization(a, Cost::parse(cfg.cost), seed, field);
  const json prov = lsc::provenance(a, field.modulus(), seed);
  if (cfg.format == "text") {
    std::ostringstream os;
    os << text_header(prov);
    os << "branch=" << (w.mds_branch ? "mds" : "identity") << " stack_rank=" << w.stack_rank << "/"
       << w.stack.rows() << " stack_is_identity=" << (w.stack_is_identity ? "true" : "false")
       << " transversals=" << w.transversals.size() << "\n";
    emit(cfg, os.str());
  } else {
    json j = prov;
    j["certificate"] = lsc::to_json(w);
    emit(cfg, dump(j));
  }
  if (w.stack_rank != w.stack.rows()) throw VerificationFailed("certificate stack is rank deficient");
  return kExitOk;
}

int cmd_simulate(const RunConfig& cfg) {
  require_format(cfg, {"json", "text"});
  if (cfg.trials == 0) throw lsc::UsageError("--trials must be positive");
  const auto field = make_field(cfg);
  const std::uint64_t seed = resolve_seed(cfg);
  const auto a = lsc::Assignment::load(cfg.assignment_path);
  const Cost cost = Cost::parse(cfg.cost);
  const json prov = lsc::provenance(a, field.modulus(), seed);
  json j = prov;
  bool ok = true;
  std::string line;
  if (cfg.trials == 1) {
    const auto r = lsc::run_trial(a, cost, cfg.length, seed, field);
    j["trial"] = lsc::to_json(r);
    ok = r.success;
    line = std::string(r.success ? "success" : "FAILURE") + " load=" + std::to_string(r.max_load_symbols) + "/" +
           std::to_string(r.message_length) + " symbols retries=" + std::to_string(r.retries_used) + "\n";
  } else {
    const auto m = lsc::run_monte_carlo(a, cost, cfg.length, cfg.trials, seed, field);
    j["summary"] = lsc::to_json(m);
    ok = m.failures == 0;
    line = lsc::summary_line(m) + "\n";
  }
  emit(cfg, cfg.format == "text" ? text_header(prov) + line : dump(j));
  if (!ok) throw VerificationFailed("simulation produced mismatching results");
  return kExitOk;
}

int cmd_tradeoff(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  const auto field = make_field(cfg);
  const std::uint64_t seed = resolve_seed(cfg);
  const auto a = lsc::Assignment::load(cfg.assignment_path);
  std::vector<Cost> costs;
  if (!cfg.costs.empty()) {
    costs = parse_cost_list(cfg.costs);
  } else if (!cfg.cost_range.empty()) {
    costs = parse_cost_range(cfg.cost_range);
  } else {
    costs.push_back(Cost::parse(cfg.cost));
  }
  const auto rows = lsc::tradeoff_curve(a, costs);
  const json prov = lsc::provenance(a, field.modulus(), seed);
  if (cfg.format == "csv") {
    emit(cfg, text_header(prov) + lsc::to_csv(rows));
  } else {
    json j = prov;
    j["rows"] = lsc::to_json(rows);
    emit(cfg, dump(j));
  }
  return kExitOk;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_cost = true) {
  sub->add_option("assignment", cfg.assignment_path, "Data-assignment matrix (.dam)")->required();
  if (with_cost) sub->add_option("--cost", cfg.cost, "Communication cost, p/q or integer");
  sub->add_option("--modulus", cfg.modulus, "Prime field modulus");
  sub->add_flag("--allow-small-modulus", cfg.allow_small_modulus, "Permit moduli below 2^31");
  sub->add_option("--seed", cfg.seed, "RNG seed (random when omitted; always echoed)");
  sub->add_option("--format", cfg.format, "json | csv | text");
  sub->add_option("--out", cfg.out, "Output file (stdout when omitted)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed linearly separable computation toolkit"};
  app.set_config("--config", "", "TOML/INI config file (keys match long flags, e.g. modulus)");
  app.set_version_flag("--version", lsc::kToolVersion);
  app.require_subcommand(1);

  RunConfig cfg;
  auto* analyze = app.add_subcommand("analyze", "Structure report: Z, alpha, G', t and K_c bounds");
  add_common(analyze, cfg);
  auto* build = app.add_subcommand("build", "Construct and verify a randomized scheme");
  add_common(build, cfg);
  build->add_option("--matrices", cfg.matrices, "full | omit");
  auto* certify = app.add_subcommand("certify", "Explicit identity/MDS realization");
  add_common(certify, cfg);
  auto* simulate = app.add_subcommand("simulate", "End-to-end protocol simulation");
  add_common(simulate, cfg);
  simulate->add_option("--trials", cfg.trials, "Number of Monte-Carlo trials");
  simulate->add_option("--length", cfg.length, "Message length L in symbols");
  auto* tradeoff = app.add_subcommand("tradeoff", "K_c versus cost curve");
  add_common(tradeoff, cfg);
  tradeoff->add_option("--costs", cfg.costs, "Comma-separated costs, e.g. 1/2,1,3/2");
  tradeoff->add_option("--cost-range", cfg.cost_range, "lo..hi:step with exact rationals");

  // Config files may set modulus for any subcommand.
  app.add_option("--modulus", cfg.modulus, "Prime field modulus")->configurable();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(cfg);
    if (build->parsed()) return cmd_build(cfg);
    if (certify->parsed()) return cmd_certify(cfg);
    if (simulate->parsed()) return cmd_simulate(cfg);
    return cmd_tradeoff(cfg);
  } catch (const lsc::ParseError& e) {
    std::cerr << "lsc: parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const lsc::ValidationError& e) {
    std::cerr << "lsc: invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const lsc::UsageError& e) {
    std::cerr << "lsc: usage: " << e.what() << "\n";
    return kExitInput;
  } catch (const lsc::CapacityError& e) {
    std::cerr << "lsc: capacity: " << e.what() << "\n";
    return kExitInput;
  } catch (const lsc::ConstructionError& e) {
    std::cerr << "lsc: construction failed at stage " << e.stage() << " (final seed " << e.final_seed()
              << "): " << e.what() << "\n";
    return kExitConstruction;
  } catch (const lsc::StructuralFailure& e) {
    std::cerr << "lsc: structural failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const VerificationFailed& e) {
    std::cerr << "lsc: verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "lsc: error: " << e.what() << "\n";
    return kExitInput;
  }
}
