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

// qcompare command-line front-end. Every subcommand goes through the C API
// in qcompare.h and prints one report on standard output.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcompare/qcompare.h"

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string format = "json";
  std::uint64_t seed = 0;
  unsigned threads = 1;
  double tol_psd = 1e-9;
  double tol_rank = 1e-8;

  std::size_t d = 2;
  std::size_t n = 2;
  std::string mode = "any";
  std::string states_path;
  std::string gram_path;
  std::string gram1_path;
  std::string gram2_path;
  std::uint64_t samples = 0;
  bool analytic_only = false;
  std::uint64_t shots = 1000;
  std::uint64_t trials = 10000;
  double omega = 0.5;
  double margin = 0.05;
  std::string which = "yes";
};

// Carries a status code out of a subcommand.
struct Failure {
  qc_status status;
  std::string message;
};

struct ContextDeleter {
  void operator()(qc_context* c) const { qc_context_free(c); }
};
struct StatesDeleter {
  void operator()(qc_states* s) const { qc_states_free(s); }
};
struct GramDeleter {
  void operator()(qc_gram* g) const { qc_gram_free(g); }
};
using ContextPtr = std::unique_ptr<qc_context, ContextDeleter>;
using StatesPtr = std::unique_ptr<qc_states, StatesDeleter>;
using GramPtr = std::unique_ptr<qc_gram, GramDeleter>;

void check(qc_context* ctx, qc_status status) {
  if (status != QC_OK) throw Failure{status, qc_context_last_error(ctx)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{QC_ERR_INVALID, "cannot read file '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parses a JSON report returned through the C API; evaluate the call that
// fills `text` before passing it here.
Json take_json(qc_context* ctx, qc_status status, char* text) {
  check(ctx, status);
  Json j = Json::parse(text);
  qc_string_free(text);
  return j;
}

qc_mode parse_mode(const std::string& m) { return m == "all" ? QC_MODE_ALL : QC_MODE_ANY; }

StatesPtr load_states(qc_context* ctx, const std::string& path) {
  const std::string text = read_file(path);
  qc_states* raw = nullptr;
  check(ctx, qc_states_from_json(ctx, text.c_str(), &raw));
  return StatesPtr(raw);
}

GramPtr load_gram(qc_context* ctx, const std::string& path) {
  const std::string text = read_file(path);
  qc_gram* raw = nullptr;
  check(ctx, qc_gram_from_json(ctx, text.c_str(), &raw));
  return GramPtr(raw);
}

Json run_dims(qc_context* ctx, const Config& c) {
  qc_dims dims{};
  check(ctx, qc_subspace_dims(ctx, c.d, c.n, &dims));
  return Json{{"sym", dims.sym},   {"anti", dims.anti}, {"total", dims.total},
              {"asym", dims.asym}, {"na", dims.na}};
}

Json run_prob(qc_context* ctx, const Config& c) {
  GramPtr g;
  if (!c.states_path.empty()) {
    StatesPtr s = load_states(ctx, c.states_path);
    qc_gram* raw = nullptr;
    check(ctx, qc_gram_from_states(ctx, s.get(), &raw));
    g.reset(raw);
  } else {
    g = load_gram(ctx, c.gram_path);
  }
  char* gram_text = nullptr;
  const qc_status gram_status = qc_gram_to_json(ctx, g.get(), &gram_text);
  Json gram = take_json(ctx, gram_status, gram_text);
  qc_probabilities p{};
  check(ctx, qc_probabilities_compute(ctx, g.get(), parse_mode(c.mode), &p));
  return Json{{"gram", std::move(gram["gram"])},
              {"permanent", p.permanent},
              {"determinant", p.determinant},
              {"conclusive", p.conclusive},
              {"inconclusive", p.inconclusive}};
}

Json run_avg(qc_context* ctx, const Config& c) {
  double analytic = 0.0;
  check(ctx, qc_analytic_avg(ctx, c.d, c.n, parse_mode(c.mode), &analytic));
  Json out{{"analytic", analytic}};
  if (c.samples > 0 && !c.analytic_only) {
    qc_mc_report r{};
    check(ctx, qc_monte_carlo_avg(ctx, c.d, c.n, parse_mode(c.mode), c.samples, c.seed, &r));
    out["monte_carlo"] = Json{{"estimate", r.estimate},
                              {"std_error", r.std_error},
                              {"samples", r.samples},
                              {"seed", r.seed},
                              {"deviation_in_std_errors",
                               r.std_error > 0.0 ? (r.estimate - r.analytic) / r.std_error : 0.0}};
  } else {
    out["monte_carlo"] = nullptr;
  }
  return out;
}

Json run_identicality(qc_context* ctx, const Config& c) {
  StatesPtr s = load_states(ctx, c.states_path);
  char* text = nullptr;
  const qc_status status = qc_identicality(ctx, s.get(), c.n, &text);
  return take_json(ctx, status, text);
}

Json run_simulate(qc_context* ctx, const Config& c) {
  StatesPtr s = load_states(ctx, c.states_path);
  qc_outcome_counts counts{};
  check(ctx, qc_simulate(ctx, s.get(), parse_mode(c.mode), c.shots, c.seed, &counts));
  const char* label = c.mode == "all" ? "all_different" : "different";
  return Json{{"shots", counts.shots},
              {"counts", Json{{label, counts.conclusive}, {"inconclusive", counts.inconclusive}}}};
}

Json run_monotone(qc_context* ctx, const Config& c) {
  GramPtr g1 = load_gram(ctx, c.gram1_path);
  GramPtr g2 = load_gram(ctx, c.gram2_path);
  char* text = nullptr;
  const qc_status status = qc_monotone(ctx, g1.get(), g2.get(), &text);
  return take_json(ctx, status, text);
}

Json run_conjecture(qc_context* ctx, const Config& c) {
  char* text = nullptr;
  const qc_status status = qc_conjecture_search(ctx, c.n, c.trials, c.seed, &text);
  return take_json(ctx, status, text);
}

Json run_counterexample(qc_context* ctx, const Config& c) {
  qc_counterexample r{};
  check(ctx, qc_depolarizing_counterexample(ctx, c.d, c.n, &r));
  return Json{{"lhs", r.lhs},
              {"rhs", r.rhs},
              {"asserted", r.asserted != 0},
              {"decreased", r.decreased != 0}};
}

Json run_overlap_cert(qc_context* ctx, const Config& c) {
  char* text = nullptr;
  const qc_which which = c.which == "no" ? QC_CERT_NO : QC_CERT_YES;
  const qc_status status =
      qc_overlap_certificate(ctx, c.d, c.omega, which, c.margin, c.seed, &text);
  return take_json(ctx, status, text);
}

void collect_options(const CLI::App& sub, Json& cfg) {
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt == sub.get_help_ptr() || opt->get_lnames().empty()) continue;
    const std::string& key = opt->get_lnames().front();
    if (opt->get_expected_min() == 0) {
      cfg[key] = opt->count() > 0;
      continue;
    }
    const std::string value = opt->count() > 0 ? opt->as<std::string>() : opt->get_default_str();
    if (value.empty()) {
      cfg[key] = nullptr;
      continue;
    }
    // Numbers stay numbers; everything else is kept verbatim.
    Json parsed = Json::parse(value, nullptr, false);
    cfg[key] = parsed.is_number() ? parsed : Json(value);
  }
  // Option groups are unnamed sub-apps holding their own options.
  for (const CLI::App* group :
       sub.get_subcommands([](const CLI::App* a) { return a->get_name().empty(); }))
    collect_options(*group, cfg);
}

Json resolved_config(const std::string& command, const Config& c, const CLI::App& sub) {
  Json cfg{{"command", command}, {"format", c.format}, {"seed", c.seed},
           {"threads", c.threads}, {"tol_psd", c.tol_psd}, {"tol_rank", c.tol_rank}};
  collect_options(sub, cfg);
  return cfg;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else {
    std::string value;
    if (j.is_string()) {
      value = j.get<std::string>();
    } else if (!j.is_null()) {
      value = j.dump();
    }
    out << csv_field(prefix) << ',' << csv_field(value) << "\r\n";
  }
}

const char* explain(qc_status status) {
  switch (status) {
    case QC_ERR_INVALID:
      return "The input was rejected: check the flags, the JSON schema of the input files "
             "and that every state vector is normalized.";
    case QC_ERR_NUMERICAL:
      return "A numerical-consistency check failed, for example a probability fell outside "
             "[0, 1] by more than the rounding allowance.";
    case QC_ERR_CAPACITY:
      return "The requested problem exceeds the dense-construction limits (d^n <= 4096, "
             "permanents up to 20x20).";
    default:
      return "An unexpected internal error occurred.";
  }
}

int report_error(qc_status status, const std::string& message) {
  Json line{{"error", qc_status_name(status)}, {"code", static_cast<int>(status)},
            {"message", message}};
  std::cerr << "qcompare: " << line.dump() << '\n' << explain(status) << '\n';
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Unambiguous quantum state comparison toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qc_version());
  app.add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", c.seed, "Random seed")->envname("QCOMPARE_SEED")->capture_default_str();
  app.add_option("--threads", c.threads, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_option("--tol-psd", c.tol_psd, "Relative PSD tolerance")->capture_default_str();
  app.add_option("--tol-rank", c.tol_rank, "Relative rank tolerance")->capture_default_str();

  auto mode_opt = [&](CLI::App* sub) {
    sub->add_option("--mode", c.mode, "any | all")
        ->check(CLI::IsMember({"any", "all"}))
        ->capture_default_str();
  };

  CLI::App* dims = app.add_subcommand("dims", "Symmetric/antisymmetric subspace dimensions");
  dims->add_option("--d", c.d, "Single-particle dimension")->required();
  dims->add_option("--n", c.n, "Number of particles")->required();

  CLI::App* prob = app.add_subcommand("prob", "Exact comparison probabilities");
  CLI::Option_group* source = prob->add_option_group("source", "Exactly one input file");
  source->add_option("--states", c.states_path, "State file");
  source->add_option("--gram", c.gram_path, "Gram file");
  source->require_option(1);
  mode_opt(prob);

  CLI::App* avg = app.add_subcommand("avg", "Minimum Haar-averaged inconclusive probability");
  avg->add_option("--d", c.d)->required();
  avg->add_option("--n", c.n)->required();
  mode_opt(avg);
  CLI::Option* samples_opt =
      avg->add_option("--samples", c.samples, "Monte Carlo samples (>= 100)");
  avg->add_flag("--analytic-only", c.analytic_only, "Skip Monte Carlo")->excludes(samples_opt);

  CLI::App* ident = app.add_subcommand("identicality", "Identicality-confirmation POVM");
  ident->add_option("--states", c.states_path)->required();
  ident->add_option("--n", c.n)->required();

  CLI::App* sim = app.add_subcommand("simulate", "Sample measurement outcomes");
  sim->add_option("--states", c.states_path)->required();
  mode_opt(sim);
  sim->add_option("--shots", c.shots)->capture_default_str();

  CLI::App* mono = app.add_subcommand("monotone", "Pure-state map feasibility and monotones");
  mono->add_option("--gram1", c.gram1_path, "Initial Gram or state file")->required();
  mono->add_option("--gram2", c.gram2_path, "Final Gram or state file")->required();

  CLI::App* conj = app.add_subcommand("conjecture", "Random search on per(A o B) <= per(A) prod b_ii");
  conj->add_option("--n", c.n)->required();
  conj->add_option("--trials", c.trials)->capture_default_str();

  CLI::App* cex = app.add_subcommand("counterexample616",
                                     "Symmetric-projector expectation under depolarization");
  cex->add_option("--d", c.d)->required();
  cex->add_option("--n", c.n)->required();

  CLI::App* cert = app.add_subcommand("overlap-cert", "Overlap-filtering spanning certificate");
  cert->add_option("--d", c.d)->required();
  cert->add_option("--omega", c.omega)->required();
  cert->add_option("--which", c.which)->check(CLI::IsMember({"yes", "no"}))->required();
  CLI::Option* margin_opt = cert->add_option("--margin", c.margin)->capture_default_str();

  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error(QC_ERR_INVALID, e.what());
  }

  if (c.which == "no" && margin_opt->count() > 0)
    return report_error(QC_ERR_INVALID, "--margin applies only to --which yes");

  ContextPtr ctx(qc_context_create());
  if (!ctx) return report_error(QC_ERR_INTERNAL, "cannot allocate context");

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  try {
    check(ctx.get(), qc_context_set_tolerances(ctx.get(), c.tol_psd, c.tol_rank));
    check(ctx.get(), qc_context_set_threads(ctx.get(), c.threads));

    Json result;
    if (chosen == dims) result = run_dims(ctx.get(), c);
    else if (chosen == prob) result = run_prob(ctx.get(), c);
    else if (chosen == avg) result = run_avg(ctx.get(), c);
    else if (chosen == ident) result = run_identicality(ctx.get(), c);
    else if (chosen == sim) result = run_simulate(ctx.get(), c);
    else if (chosen == mono) result = run_monotone(ctx.get(), c);
    else if (chosen == conj) result = run_conjecture(ctx.get(), c);
    else if (chosen == cex) result = run_counterexample(ctx.get(), c);
    else result = run_overlap_cert(ctx.get(), c);

    Json report{{"tool", "qcompare"},
                {"version", qc_version()},
                {"config", resolved_config(command, c, *chosen)},
                {"seed", c.seed},
                {"result", std::move(result)}};
    if (c.format == "csv") {
      std::cout << "key,value\r\n";
      flatten(report, "", std::cout);
    } else {
      std::cout << report.dump(2) << '\n';
    }
  } catch (const Failure& f) {
    return report_error(f.status, f.message);
  } catch (const Json::exception& e) {
    return report_error(QC_ERR_INTERNAL, e.what());
  }
  return 0;
}
