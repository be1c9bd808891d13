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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lsc/simulate.h"
#include "lsc/structure.h"

namespace lsc {

inline constexpr const char* kToolName = "lsc";
inline constexpr const char* kToolVersion = "0.1.0";

/// {"p": .., "q": .., "decimal": ".."}; decimal is exact when the expansion
/// terminates, otherwise rounded to 6 places.
nlohmann::json rational_json(const Rational& r);
std::string decimal_string(const Rational& r);

/// Replay header embedded in every emission.
nlohmann::json provenance(const Assignment& a, std::uint64_t modulus, std::uint64_t seed);

nlohmann::json to_json(const StructureReport& rep);
std::string to_text(const StructureReport& rep);

nlohmann::json to_json(const std::vector<TradeoffRow>& rows);
/// cost,cost_p,cost_q,kc_converse,kc_achievable,kc_repetition
std::string to_csv(const std::vector<TradeoffRow>& rows);

enum class MatrixMode { kFull, kOmit };

/// Bundle with dimensions, seed and modulus; matrices as decimal strings
/// unless `mode` is kOmit.
nlohmann::json to_json(const Scheme& s, MatrixMode mode = MatrixMode::kFull);
/// Inverse of to_json. Bundles without matrices are rebuilt from their seed.
Scheme scheme_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CertificateWitness& w);
nlohmann::json to_json(const SimulationResult& r);
nlohmann::json to_json(const MonteCarloSummary& m);
std::string summary_line(const MonteCarloSummary& m);

}  // namespace lsc
