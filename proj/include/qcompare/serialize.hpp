/*
 * Copyright 2026 The qcompare Authors
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

// JSON schemas for state files, Gram files and reports.
//
//   state file: {"dim": D, "states": [[[re, im], ... D pairs], ...]}
//   gram file:  {"gram": [[[re, im], ...], ...]}  or a state file
//
// Complex numbers are [re, im] pairs. Matrices that must be re-checkable
// bit for bit carry a parallel hexadecimal ("%a") rendering.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcompare/comparison.hpp"
#include "qcompare/linalg.hpp"
#include "qcompare/monotones.hpp"
#include "qcompare/overlapcert.hpp"
#include "qcompare/states.hpp"
#include "qcompare/subspaces.hpp"

namespace qcompare {

using Json = nlohmann::ordered_json;

// Norm error tolerated in state files before renormalizing.
inline constexpr double kStateFileNormTol = 1e-6;

// Throw DomainError on malformed JSON or schema violations.
std::vector<PureState> parse_state_file(std::string_view text);
GramMatrix parse_gram_file(std::string_view text, double psd_tol = kDefaultPsdTol);

std::string hex_double(double x);

Json to_json(Complex z);
Json to_json(const ComplexMatrix& m);
Json to_json_exact(const ComplexMatrix& m);  // {"decimal": ..., "hex": ...}
Json to_json(const PureState& s);
Json to_json(std::span<const PureState> states);

Json to_json(const SubspaceDims& dims);
Json to_json(const MonteCarloReport& r);
Json to_json(const OutcomeCounts& c);
Json to_json(const PovmResiduals& r);
Json to_json(const IdenticalityPovm& p);
Json to_json(const FeasibilityResult& f);
Json to_json(const MonotoneReport& r);
Json to_json(const HadamardMarcusReport& r);
Json to_json(const SearchReport& r);
Json to_json(const DepolarizingCounterexample& c);
Json to_json(const SpanningCertificate& c);

}  // namespace qcompare
