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

// Acceptance gate: one PASS/FAIL line per criterion. Argument 1 is the path
// to the lsc executable, used for the determinism check.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "lsc/errors.h"
#include "lsc/serialize.h"
#include "test_util.h"

namespace {

using namespace lsc;
using testing::data_path;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void run(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out{false, ""};
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    out.pass = false;
    out.detail += " (over time limit " + std::to_string(limit_seconds) + "s)";
  }
  std::printf("[%s] criterion %d: %s: %s (%.3fs)\n", out.pass ? "PASS" : "FAIL", id, name.c_str(),
              out.detail.c_str(), secs);
  std::fflush(stdout);
  if (!out.pass) ++failures;
}

Assignment ref5x8() { return Assignment::load(data_path("ex851.dam")); }
Assignment ref3x5() { return Assignment::load(data_path("footnote3.dam")); }

Outcome reference_structure() {
  const auto rep = analyze(ref5x8(), Cost(1));
  const bool family = rep.z_family.size() == 2 && rep.z_family[0].workers == IndexSet{1, 2} &&
                      rep.z_family[0].datasets == IndexSet{1, 2, 3, 4} && rep.z_family[1].workers == IndexSet{3} &&
                      rep.z_family[1].datasets == IndexSet{4, 5, 6, 7, 8};
  const bool ok = family && rep.g_prime == IndexSet{1, 2, 3} && rep.t == 3 && rep.kc_achievable == Rational(2) &&
                  rep.alpha == 2 && rep.kc_converse == Rational(3) && !rep.optimal;
  return {ok, "G'=" + to_json(rep)["g_prime"].dump() + " t=" + std::to_string(rep.t) +
                  " alpha=" + std::to_string(rep.alpha) + " K_c=" + decimal_string(rep.kc_achievable) + ".." +
                  decimal_string(rep.kc_converse) + " optimal=" + (rep.optimal ? "true" : "false")};
}

Outcome small_optimality() {
  const auto rep = analyze(ref3x5(), Cost(1));
  const bool ok = rep.alpha == 2 && rep.t == 2 && rep.kc_converse == Rational(1) &&
                  rep.kc_achievable == Rational(1) && rep.optimal;
  return {ok, "alpha=" + std::to_string(rep.alpha) + " t=" + std::to_string(rep.t) +
                  " K_c*=" + decimal_string(rep.kc_achievable)};
}

Outcome end_to_end() {
  const Assignment a = ref5x8();
  std::size_t exact = 0, retries = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const SimulationResult r = run_trial(a, Cost(1), 64, seed);
    exact += r.success;
    retries += r.retries_used;
  }
  return {exact == 100 && retries == 0,
          std::to_string(exact) + "/100 exact, total retries " + std::to_string(retries)};
}

Outcome fractional_path() {
  const Assignment a = ref5x8();
  const Cost half(1, 2);
  const auto rep = analyze(a, half);
  const FamilySummary oracle = brute_force_family(a, half);
  const bool structure = oracle.alpha == rep.alpha && oracle.g_prime == rep.g_prime && rep.achievable_pieces == 1;
  std::size_t exact = 0;
  bool loads = true;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const SimulationResult r = run_trial(a, half, 64, seed);
    exact += r.success;
    loads = loads && r.kc_pieces == 1 && r.per_worker_symbols == std::vector<std::size_t>(5, 32);
  }
  return {structure && exact == 100 && loads, "qK_c=" + std::to_string(rep.achievable_pieces) + ", " +
                                                  std::to_string(exact) + "/100 exact, per-worker load " +
                                                  (loads ? "L/2" : "WRONG")};
}

Outcome sandwich() {
  Rng rng(5005);
  std::size_t checked = 0, violations = 0, equal_cases = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = testing::in_range(rng, 2, 8);
    const Assignment a = testing::random_assignment(rng, n, testing::in_range(rng, n, 10), 20 + rng.below(60));
    for (const Cost& c : testing::standard_costs()) {
      if (!a.cost_in_range(c)) continue;
      const auto rep = analyze(a, c);
      ++checked;
      if (rep.kc_achievable > rep.kc_converse) ++violations;
      if (rep.t == rep.alpha) {
        ++equal_cases;
        if (rep.kc_achievable != rep.kc_converse) ++violations;
      }
      if (rep.kc_achievable < repetition_kc(a, c)) ++violations;
    }
  }
  return {violations == 0, std::to_string(checked) + " (assignment, cost) pairs, " + std::to_string(equal_cases) +
                               " with t=alpha, " + std::to_string(violations) + " violations"};
}

Outcome oracle_equivalence() {
  Rng rng(6006);
  std::size_t checked = 0, mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Assignment a = testing::random_assignment(rng, testing::in_range(rng, 2, 10), testing::in_range(rng, 2, 10),
                                                     20 + rng.below(60));
    for (const Cost& c : testing::standard_costs()) {
      if (!a.cost_in_range(c)) continue;
      const auto rep = analyze(a, c);
      const FamilySummary lit = brute_force_family(a, c);
      ++checked;
      if (lit.alpha != rep.alpha || lit.g_prime != rep.g_prime) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(checked) + " comparisons, " + std::to_string(mismatches) + " mismatches"};
}

Outcome certificate() {
  const auto w1 = certificate_realization(ref5x8(), Cost(1), 1);
  const bool ex1 = w1.stack_is_identity && w1.stack_rank == 5;
  const auto w3 = certificate_realization(ref3x5(), Cost(1), 1);
  const bool f3 = w3.stack_rank == 3;
  Rng rng(7007);
  std::size_t ok = 0, identity = 0, mds = 0, failures_seen = 0;
  std::size_t done = 0;
  while (done < 100) {
    const std::size_t n = testing::in_range(rng, 2, 8);
    const Assignment a = testing::random_assignment(rng, n, testing::in_range(rng, n, 10), 20 + rng.below(60));
    const Cost c = testing::standard_costs()[rng.below(4)];
    if (!a.cost_in_range(c)) continue;
    ++done;
    try {
      const auto w = certificate_realization(a, c, rng.next());
      if (w.stack_rank == static_cast<std::size_t>(c.p()) * n) ++ok;
      (w.mds_branch ? mds : identity) += 1;
    } catch (const StructuralFailure&) {
      ++failures_seen;
    }
  }
  const bool pass = ex1 && f3 && ok == 100 && identity > 0 && mds > 0 && failures_seen == 0;
  return {pass, std::string("5x8 identity stack ") + (ex1 ? "yes" : "NO") + ", 3x5 rank " +
                    std::to_string(w3.stack_rank) + ", random " + std::to_string(ok) + "/100 full rank (" +
                    std::to_string(identity) + " identity, " + std::to_string(mds) + " MDS branch), " +
                    std::to_string(failures_seen) + " structural failures"};
}

Outcome locality() {
  const Assignment a = ref5x8();
  const PrimeField f;
  const Scheme s = build(a, Cost(1), 8008);
  Rng rng(8008);
  const MessageSet base = generate_messages(f, a.n_datasets(), 64, s.q(), rng);
  std::size_t pairs = 0, leaks = 0;
  for (std::size_t n = 1; n <= a.n_workers(); ++n) {
    const Matrix x = worker_encode(s, n, base);
    for (std::size_t k : a.complement(n)) {
      ++pairs;
      for (int rep = 0; rep < 50; ++rep) {
        MessageSet w = base;
        for (std::size_t c = 0; c < w.length; ++c) w.symbols.set(k - 1, c, f.sample(rng));
        if (!(worker_encode(s, n, w) == x)) ++leaks;
      }
    }
  }
  return {leaks == 0, std::to_string(pairs) + " (worker, dataset) pairs x 50 perturbations, " +
                          std::to_string(leaks) + " leaks"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism(const std::string& cli) {
  if (cli.empty()) return {false, "no lsc executable given"};
  const auto dir = std::filesystem::temp_directory_path();
  const auto first = dir / "lsc_acceptance_a.json";
  const auto second = dir / "lsc_acceptance_b.json";
  const std::string base = "\"" + cli + "\" build \"" + data_path("ex851.dam") + "\" --cost 3/2 --seed 4242";
  const int rc1 = std::system((base + " --out \"" + first.string() + "\"").c_str());
  const int rc2 = std::system((base + " --out \"" + second.string() + "\"").c_str());
  const std::string a = slurp(first), b = slurp(second);
  std::filesystem::remove(first);
  std::filesystem::remove(second);
  const bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
  return {ok, std::to_string(a.size()) + "-byte bundles " + (a == b ? "identical" : "DIFFER")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  run(1, "5x8 reference structure", 1.0, reference_structure);
  run(2, "3x5 reference optimality", 1.0, small_optimality);
  run(3, "end-to-end exactness", 10.0, end_to_end);
  run(4, "fractional path", 0, fractional_path);
  run(5, "sandwich and optimality properties", 60.0, sandwich);
  run(6, "oracle equivalence", 120.0, oracle_equivalence);
  run(7, "certificate mode", 0, certificate);
  run(8, "locality under perturbation", 0, locality);
  run(9, "determinism", 0, [&] { return determinism(cli); });
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
