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

#include "qcompare/serialize.hpp"

#include <cmath>
#include <cstdio>

#include "qcompare/errors.hpp"

namespace qcompare {
namespace {

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
}

Complex complex_from(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw DomainError(where + ": expected a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexVector vector_from(const Json& j, const std::string& where) {
  if (!j.is_array()) throw DomainError(where + ": expected an array of [re, im] pairs");
  ComplexVector v;
  v.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(complex_from(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

std::vector<PureState> states_from(const Json& doc) {
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw DomainError("state file: missing integer \"dim\"");
  const auto dim = doc["dim"].get<long long>();
  if (dim < 1) throw DomainError("state file: dim must be >= 1");
  if (!doc.contains("states") || !doc["states"].is_array() || doc["states"].empty())
    throw DomainError("state file: missing non-empty \"states\" array");

  std::vector<PureState> states;
  const Json& arr = doc["states"];
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string where = "states[" + std::to_string(k) + "]";
    ComplexVector v = vector_from(arr[k], where);
    if (static_cast<long long>(v.size()) != dim)
      throw DomainError(where + ": expected " + std::to_string(dim) + " amplitudes");
    try {
      states.push_back(PureState::from_amplitudes(std::move(v), kStateFileNormTol));
    } catch (const DomainError& e) {
      throw DomainError(where + ": " + e.what());
    }
  }
  return states;
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

std::vector<PureState> parse_state_file(std::string_view text) {
  const Json doc = parse(text);
  if (!doc.is_object()) throw DomainError("state file must be a JSON object");
  return states_from(doc);
}

GramMatrix parse_gram_file(std::string_view text, double psd_tol) {
  const Json doc = parse(text);
  if (!doc.is_object()) throw DomainError("gram file must be a JSON object");
  const bool has_gram = doc.contains("gram");
  const bool has_states = doc.contains("states");
  if (has_gram && has_states) throw DomainError("gram file has both \"gram\" and \"states\"");
  if (has_states) return gram(states_from(doc));
  if (!has_gram || !doc["gram"].is_array() || doc["gram"].empty())
    throw DomainError("gram file: missing non-empty \"gram\" array");

  const Json& rows = doc["gram"];
  const std::size_t n = rows.size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const ComplexVector row = vector_from(rows[i], "gram[" + std::to_string(i) + "]");
    if (row.size() != n) throw DomainError("gram matrix must be square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = row[j];
  }
  return GramMatrix::from_matrix(std::move(m), psd_tol);
}

std::string hex_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", x);
  return buf;
}

// Adding +0.0 turns a negative zero (from conjugating real entries) into +0.
Json to_json(Complex z) { return Json::array({z.real() + 0.0, z.imag() + 0.0}); }

Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json_exact(const ComplexMatrix& m) {
  Json hex = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({hex_double(m(i, j).real()), hex_double(m(i, j).imag())}));
    hex.push_back(std::move(row));
  }
  return Json{{"decimal", to_json(m)}, {"hex", std::move(hex)}};
}

Json to_json(const PureState& s) {
  Json v = Json::array();
  for (const Complex& z : s.amplitudes()) v.push_back(to_json(z));
  return v;
}

Json to_json(std::span<const PureState> states) {
  Json arr = Json::array();
  for (const auto& s : states) arr.push_back(to_json(s));
  return Json{{"dim", states.empty() ? 0 : states.front().dim()}, {"states", std::move(arr)}};
}

Json to_json(const SubspaceDims& d) {
  return Json{{"total", d.total}, {"sym", d.sym}, {"anti", d.anti},
              {"asym", d.asym},   {"na", d.na}};
}

Json to_json(const MonteCarloReport& r) {
  return Json{{"estimate", r.estimate},
              {"std_error", r.std_error},
              {"samples", r.samples},
              {"seed", r.seed},
              {"analytic_value", r.analytic_value ? Json(*r.analytic_value) : Json(nullptr)}};
}

Json to_json(const OutcomeCounts& c) {
  Json counts = Json::object();
  for (std::size_t i = 0; i < c.labels.size(); ++i) counts[c.labels[i]] = c.counts[i];
  return Json{{"shots", c.shots}, {"counts", std::move(counts)}};
}

Json to_json(const PovmResiduals& r) {
  return Json{{"valid", r.valid},
              {"min_eigenvalues", r.min_eigenvalues},
              {"identity_residual", r.identity_residual}};
}

Json to_json(const IdenticalityPovm& p) {
  Json j{{"feasible", p.feasible},
         {"num_states", p.num_states},
         {"n", p.n},
         {"dim", p.dim},
         {"success_probs", p.success_probs}};
  if (!p.reason.empty()) j["reason"] = p.reason;
  if (p.feasible) j["labels"] = p.povm.labels;
  return j;
}

Json to_json(const FeasibilityResult& f) {
  Json undetermined = Json::array();
  for (const auto& [i, j] : f.undetermined) undetermined.push_back(Json::array({i, j}));
  Json out{{"verdict", feasibility_name(f.verdict)},
           {"witness", f.pair.witness ? to_json(*f.pair.witness) : Json(nullptr)},
           {"undetermined", std::move(undetermined)},
           {"determined_psd", optional_bool(f.determined_psd)}};
  if (!f.reason.empty()) out["reason"] = f.reason;
  return out;
}

Json to_json(const MonotoneReport& r) {
  return Json{{"det_initial", r.det_initial}, {"det_final", r.det_final},
              {"per_initial", r.per_initial}, {"per_final", r.per_final},
              {"det_holds", r.det_holds},     {"per_holds", r.per_holds},
              {"per_asserted", r.per_asserted}, {"ok", r.ok}};
}

Json to_json(const HadamardMarcusReport& r) {
  return Json{{"det_value", r.det_value},       {"per_value", r.per_value},
              {"det_ok", r.det_ok},             {"per_ok", r.per_ok},
              {"det_equality", r.det_equality}, {"per_equality", r.per_equality},
              {"diagonal", r.diagonal}};
}

Json to_json(const SearchReport& r) {
  Json j{{"n", r.n},
         {"trials", r.trials},
         {"seed", r.seed},
         {"stream", r.stream},
         {"proven_case", r.proven_case},
         {"worst_margin", r.worst_margin},
         {"worst_margin_hex", hex_double(r.worst_margin)},
         {"worst_trial", r.worst_trial},
         {"violations", r.violations}};
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    j["counterexample"] = Json{{"trial", c.trial},
                               {"a", to_json_exact(c.a)},
                               {"b", to_json_exact(c.b)},
                               {"lhs", c.lhs},
                               {"rhs", c.rhs},
                               {"margin", c.margin},
                               {"lhs_hex", hex_double(c.lhs)},
                               {"rhs_hex", hex_double(c.rhs)}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

Json to_json(const DepolarizingCounterexample& c) {
  return Json{{"lhs", c.lhs},
              {"rhs", c.rhs},
              {"asserted", c.asserted},
              {"decreased", c.decreased}};
}

Json to_json(const SpanningCertificate& c) {
  Json family = Json::array();
  for (const auto& m : c.family)
    family.push_back(Json{{"a", to_json(m.a)}, {"b", to_json(m.b)}, {"overlap", m.overlap}});
  Json j{{"dim", c.dim},
         {"omega", c.omega},
         {"which", certificate_kind_name(c.which)}};
  if (c.which == CertificateKind::kYes) j["margin"] = c.margin;
  j["family"] = std::move(family);
  j["achieved_rank"] = c.achieved_rank;
  j["full_rank_needed"] = c.full_rank_needed;
  j["verdict"] = certificate_verdict_name(c.verdict);
  j["attempts"] = c.attempts;
  j["rejected"] = c.rejected;
  if (!c.diagnostics.empty()) j["diagnostics"] = c.diagnostics;
  return j;
}

}  // namespace qcompare
