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

#include "lsc/serialize.h"

#include <cstdio>
#include <sstream>

#include "lsc/errors.h"

namespace lsc {

using nlohmann::json;

namespace {

json set_json(const IndexSet& s) { return json(s); }

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json cost_json(const Cost& c) { return rational_json(c.value()); }

json matrices_json(const std::vector<Matrix>& ms) {
  json out = json::array();
  for (const Matrix& m : ms) out.push_back(to_json(m));
  return out;
}

}  // namespace

std::string decimal_string(const Rational& r) {
  std::int64_t num = r.numerator();
  const std::int64_t den = r.denominator();
  std::string out;
  if (num < 0) {
    out += '-';
    num = -num;
  }
  out += std::to_string(num / den);
  std::int64_t rem = num % den;
  if (rem == 0) return out;
  out += '.';
  for (int digits = 0; rem != 0 && digits < 6; ++digits) {
    rem *= 10;
    out += static_cast<char>('0' + rem / den);
    rem %= den;
  }
  return out;
}

json rational_json(const Rational& r) {
  return {{"p", r.numerator()}, {"q", r.denominator()}, {"decimal", decimal_string(r)}};
}

json provenance(const Assignment& a, std::uint64_t modulus, std::uint64_t seed) {
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"modulus", std::to_string(modulus)},
          {"seed", std::to_string(seed)},
          {"assignment_hash", hex64(a.hash())}};
}

json to_json(const StructureReport& rep) {
  json family = json::array();
  for (const ZeroBlock& b : rep.z_family) {
    family.push_back({{"workers", set_json(b.workers)}, {"datasets", set_json(b.datasets)}});
  }
  return {{"cost", cost_json(rep.cost)},
          {"n_workers", rep.n_workers},
          {"n_datasets", rep.n_datasets},
          {"z_family", family},
          {"alpha", rep.alpha},
          {"g_prime", set_json(rep.g_prime)},
          {"t", rep.t},
          {"r", rep.r},
          {"kc_converse", rational_json(rep.kc_converse)},
          {"kc_achievable", rational_json(rep.kc_achievable)},
          {"converse_pieces", rep.converse_pieces},
          {"achievable_pieces", rep.achievable_pieces},
          {"optimal", rep.optimal}};
}

std::string to_text(const StructureReport& rep) {
  auto set_str = [](const IndexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
  };
  std::ostringstream os;
  os << "N=" << rep.n_workers << " K=" << rep.n_datasets << " C=" << rep.cost.str() << "\n";
  os << "Z (maximal representatives):";
  if (rep.z_family.empty()) os << " none";
  os << "\n";
  for (const ZeroBlock& b : rep.z_family) os << "  (" << set_str(b.workers) << ", " << set_str(b.datasets) << ")\n";
  os << "alpha=" << rep.alpha << " G'=" << set_str(rep.g_prime) << " t=" << rep.t << " r=" << rep.r << "\n";
  os << "K_c converse=" << decimal_string(rep.kc_converse) << " achievable=" << decimal_string(rep.kc_achievable)
     << " (pieces " << rep.converse_pieces << "/" << rep.achievable_pieces << ")\n";
  os << "optimal=" << (rep.optimal ? "true" : "false") << "\n";
  return os.str();
}

json to_json(const std::vector<TradeoffRow>& rows) {
  json out = json::array();
  for (const TradeoffRow& r : rows) {
    out.push_back({{"cost", cost_json(r.cost)},
                   {"kc_converse", rational_json(r.kc_converse)},
                   {"kc_achievable", rational_json(r.kc_achievable)},
                   {"kc_repetition", rational_json(r.kc_repetition)}});
  }
  return out;
}

std::string to_csv(const std::vector<TradeoffRow>& rows) {
  std::string out = "cost,cost_p,cost_q,kc_converse,kc_achievable,kc_repetition\n";
  for (const TradeoffRow& r : rows) {
    out += decimal_string(r.cost.value()) + "," + std::to_string(r.cost.p()) + "," + std::to_string(r.cost.q()) +
           "," + decimal_string(r.kc_converse) + "," + decimal_string(r.kc_achievable) + "," +
           decimal_string(r.kc_repetition) + "\n";
  }
  return out;
}

json to_json(const Scheme& s, MatrixMode mode) {
  json j = provenance(s.assignment, s.field.modulus(), s.seed);
  j["assignment"] = s.assignment.serialize();
  j["cost"] = cost_json(s.cost);
  j["dimensions"] = {{"n_workers", s.assignment.n_workers()},
                     {"n_datasets", s.assignment.n_datasets()},
                     {"p", s.p()},
                     {"q", s.q()},
                     {"kc_pieces", s.kc_pieces},
                     {"f_rows", s.total_rows()},
                     {"f_cols", s.virtual_datasets()}};
  j["g_prime"] = set_json(s.g_prime);
  j["t"] = s.t;
  j["retries_used"] = s.retries_used;
  if (mode == MatrixMode::kFull) {
    j["matrices"] = {{"f1", to_json(s.f1())},
                     {"f2", to_json(s.f2())},
                     {"s", matrices_json(s.s)},
                     {"e", matrices_json(s.e)},
                     {"decoder", to_json(s.decoder)}};
  }
  return j;
}

Scheme scheme_from_json(const json& j) {
  const Assignment a = Assignment::parse(j.at("assignment").get<std::string>());
  const Cost cost(j.at("cost").at("p").get<std::int64_t>(), j.at("cost").at("q").get<std::int64_t>());
  const std::uint64_t modulus = std::stoull(j.at("modulus").get<std::string>());
  const std::uint64_t seed = std::stoull(j.at("seed").get<std::string>());
  const PrimeField field(modulus, true);
  if (!j.contains("matrices")) return build(a, cost, seed, field);

  const json& m = j.at("matrices");
  const auto& dims = j.at("dimensions");
  const std::size_t rows = dims.at("f_rows").get<std::size_t>();
  const std::size_t cols = dims.at("f_cols").get<std::size_t>();
  const std::size_t p = dims.at("p").get<std::size_t>();

  auto sized = [&](const json& mj, std::size_t r, std::size_t c) {
    Matrix out(field, r, c);
    const Matrix parsed = matrix_from_json(field, mj);
    if (parsed.rows() != r || (r != 0 && parsed.cols() != c)) throw ParseError("scheme bundle: matrix shape mismatch");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < c; ++k) out.set(i, k, parsed(i, k));
    return out;
  };
  const std::size_t kc = dims.at("kc_pieces").get<std::size_t>();
  const Matrix f1 = sized(m.at("f1"), kc, cols);
  const Matrix f2 = sized(m.at("f2"), rows - kc, cols);
  const Matrix parts[] = {f1, f2};
  Matrix f = vstack(field, parts);
  std::vector<Matrix> s;
  std::vector<Matrix> e;
  for (const json& sj : m.at("s")) s.push_back(sized(sj, p, rows));
  for (const json& ej : m.at("e")) e.push_back(sized(ej, p, cols));
  Matrix decoder = sized(m.at("decoder"), kc, rows);
  Matrix inverse(field, rows, rows);
  try {
    inverse = invert(vstack(field, s));
  } catch (const SingularMatrixError&) {
    // Keep the bundle loadable so verify_decodability can report it.
  }
  return Scheme{a, cost, field, kc, j.at("g_prime").get<IndexSet>(), j.at("t").get<std::size_t>(),
                std::move(f), std::move(s), std::move(e), std::move(inverse), std::move(decoder), seed,
                j.at("retries_used").get<std::size_t>()};
}

json to_json(const CertificateWitness& w) {
  json tr = json::array();
  for (const WorkerTransversal& t : w.transversals) {
    tr.push_back({{"worker", t.worker}, {"columns", set_json(t.columns)}, {"rows", t.rows}});
  }
  return {{"cost", cost_json(w.cost)},
          {"g_prime", set_json(w.g_prime)},
          {"t", w.t},
          {"branch", w.mds_branch ? "mds" : "identity"},
          {"stack_order", w.stack_order},
          {"stack_rank", w.stack_rank},
          {"stack_size", w.stack.rows()},
          {"stack_is_identity", w.stack_is_identity},
          {"solved_columns", w.solved_columns},
          {"transversals", tr},
          {"retries_used", w.retries_used},
          {"stack", to_json(w.stack)}};
}

json to_json(const SimulationResult& r) {
  json mism = json::array();
  for (const auto& [row, col] : r.mismatch_positions) mism.push_back({row, col});
  return {{"success", r.success},
          {"seed", std::to_string(r.seed)},
          {"retries_used", r.retries_used},
          {"kc_pieces", r.kc_pieces},
          {"message_length", r.message_length},
          {"per_worker_symbols", r.per_worker_symbols},
          {"max_load_symbols", r.max_load_symbols},
          {"mismatch_positions", mism},
          {"elapsed_seconds", r.elapsed_seconds}};
}

json to_json(const MonteCarloSummary& m) {
  return {{"cost", cost_json(m.cost)},
          {"trials", m.trials},
          {"failures", m.failures},
          {"total_retries", m.total_retries},
          {"max_retries", m.max_retries},
          {"min_load_symbols", m.min_load_symbols},
          {"max_load_symbols", m.max_load_symbols},
          {"message_length", m.message_length},
          {"load_ratio", rational_json(Rational(static_cast<std::int64_t>(m.max_load_symbols),
                                                static_cast<std::int64_t>(m.message_length)))},
          {"elapsed_seconds", m.elapsed_seconds}};
}

std::string summary_line(const MonteCarloSummary& m) {
  std::ostringstream os;
  os << "C=" << m.cost.str() << " trials=" << m.trials << " failures=" << m.failures
     << " retries=" << m.total_retries << " load=" << m.max_load_symbols << "/" << m.message_length
     << " symbols elapsed=" << m.elapsed_seconds << "s";
  return os.str();
}

}  // namespace lsc
