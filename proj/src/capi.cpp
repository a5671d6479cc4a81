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

#include "qcompare/qcompare.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "qcompare/comparison.hpp"
#include "qcompare/errors.hpp"
#include "qcompare/monotones.hpp"
#include "qcompare/overlapcert.hpp"
#include "qcompare/serialize.hpp"

#ifndef QCOMPARE_VERSION
#define QCOMPARE_VERSION "0.0.0"
#endif

struct qc_context {
  double psd_tol = qcompare::kDefaultPsdTol;
  double rank_tol = qcompare::kDefaultRankTol;
  unsigned threads = 1;
  std::string last_error;
};

struct qc_states {
  std::vector<qcompare::PureState> states;
};

struct qc_gram {
  qcompare::GramMatrix gram;
};

namespace {

using namespace qcompare;

// POVM residuals need a dense eigensolve per element; skip beyond this size.
constexpr std::size_t kMaxValidatedDim = 256;

qc_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
      return QC_ERR_INVALID;
    case ErrorKind::kNumerical:
      return QC_ERR_NUMERICAL;
    case ErrorKind::kCapacity:
      return QC_ERR_CAPACITY;
  }
  return QC_ERR_INTERNAL;
}

template <class F>
qc_status guarded(qc_context* ctx, F&& body) {
  if (ctx == nullptr) return QC_ERR_INVALID;
  try {
    body();
    ctx->last_error.clear();
    return QC_OK;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "capacity error: out of memory";
    return QC_ERR_CAPACITY;
  } catch (const std::exception& e) {
    ctx->last_error = std::string("internal error: ") + e.what();
    return QC_ERR_INTERNAL;
  }
}

template <class T>
void require(const T* p, const char* what) {
  if (p == nullptr) throw PreconditionError(std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Mode to_mode(qc_mode mode) {
  switch (mode) {
    case QC_MODE_ANY:
      return Mode::kAnyDifferent;
    case QC_MODE_ALL:
      return Mode::kAllDifferent;
  }
  throw DomainError("unknown mode");
}

}  // namespace

extern "C" {

const char* qc_version(void) { return QCOMPARE_VERSION; }

const char* qc_status_name(qc_status status) {
  switch (status) {
    case QC_OK:
      return "ok";
    case QC_ERR_INTERNAL:
      return "internal";
    case QC_ERR_INVALID:
      return "invalid-input";
    case QC_ERR_NUMERICAL:
      return "numerical";
    case QC_ERR_CAPACITY:
      return "capacity";
  }
  return "unknown";
}

qc_context* qc_context_create(void) { return new (std::nothrow) qc_context(); }

void qc_context_free(qc_context* ctx) { delete ctx; }

qc_status qc_context_set_tolerances(qc_context* ctx, double psd_tol, double rank_tol) {
  return guarded(ctx, [&] {
    if (!(psd_tol > 0.0) || !(rank_tol > 0.0)) throw DomainError("tolerances must be positive");
    ctx->psd_tol = psd_tol;
    ctx->rank_tol = rank_tol;
  });
}

qc_status qc_context_set_threads(qc_context* ctx, unsigned threads) {
  return guarded(ctx, [&] {
    if (threads == 0) throw DomainError("thread count must be >= 1");
    ctx->threads = threads;
  });
}

const char* qc_context_last_error(const qc_context* ctx) {
  return ctx == nullptr ? "null context" : ctx->last_error.c_str();
}

void qc_string_free(char* s) { std::free(s); }

qc_status qc_states_from_json(qc_context* ctx, const char* json, qc_states** out) {
  return guarded(ctx, [&] {
    require(json, "json");
    require(out, "out");
    *out = new qc_states{parse_state_file(json)};
  });
}

qc_status qc_states_from_amplitudes(qc_context* ctx, size_t dim, size_t count,
                                    const double* re_im, qc_states** out) {
  return guarded(ctx, [&] {
    require(re_im, "re_im");
    require(out, "out");
    if (dim == 0 || count == 0) throw DomainError("dim and count must be positive");
    std::vector<PureState> states;
    for (size_t k = 0; k < count; ++k) {
      ComplexVector v(dim);
      for (size_t i = 0; i < dim; ++i)
        v[i] = {re_im[2 * (k * dim + i)], re_im[2 * (k * dim + i) + 1]};
      states.push_back(PureState::from_amplitudes(std::move(v), kStateFileNormTol));
    }
    *out = new qc_states{std::move(states)};
  });
}

void qc_states_free(qc_states* states) { delete states; }

size_t qc_states_count(const qc_states* states) {
  return states == nullptr ? 0 : states->states.size();
}

size_t qc_states_dim(const qc_states* states) {
  return states == nullptr || states->states.empty() ? 0 : states->states.front().dim();
}

qc_status qc_gram_from_states(qc_context* ctx, const qc_states* states, qc_gram** out) {
  return guarded(ctx, [&] {
    require(states, "states");
    require(out, "out");
    *out = new qc_gram{gram(states->states)};
  });
}

qc_status qc_gram_from_json(qc_context* ctx, const char* json, qc_gram** out) {
  return guarded(ctx, [&] {
    require(json, "json");
    require(out, "out");
    *out = new qc_gram{parse_gram_file(json, ctx->psd_tol)};
  });
}

void qc_gram_free(qc_gram* gram) { delete gram; }

size_t qc_gram_size(const qc_gram* gram) { return gram == nullptr ? 0 : gram->gram.size(); }

qc_status qc_gram_entry(const qc_gram* gram, size_t i, size_t j, double* re, double* im) {
  if (gram == nullptr || re == nullptr || im == nullptr) return QC_ERR_INVALID;
  if (i >= gram->gram.size() || j >= gram->gram.size()) return QC_ERR_INVALID;
  *re = gram->gram(i, j).real();
  *im = gram->gram(i, j).imag();
  return QC_OK;
}

qc_status qc_gram_to_json(qc_context* ctx, const qc_gram* gram, char** out) {
  return guarded(ctx, [&] {
    require(gram, "gram");
    require(out, "out");
    *out = copy_string(Json{{"gram", to_json(gram->gram.matrix())}}.dump());
  });
}

qc_status qc_subspace_dims(qc_context* ctx, size_t d, size_t n, qc_dims* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    const SubspaceDims dims = subspace_dims(d, n);
    *out = qc_dims{dims.total, dims.sym, dims.anti, dims.asym, dims.na};
  });
}

qc_status qc_probabilities_compute(qc_context* ctx, const qc_gram* gram, qc_mode mode,
                                   qc_probabilities* out) {
  return guarded(ctx, [&] {
    require(gram, "gram");
    require(out, "out");
    const Mode m = to_mode(mode);
    qc_probabilities p{};
    p.inconclusive = prob_inconclusive(gram->gram, m);
    p.conclusive = prob_conclusive(gram->gram, m);
    p.permanent = permanent(gram->gram.matrix()).real();
    p.determinant = determinant(gram->gram.matrix()).real();
    *out = p;
  });
}

qc_status qc_analytic_avg(qc_context* ctx, size_t d, size_t n, qc_mode mode, double* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    if (d < 1 || n < 1) throw DomainError("d and n must be >= 1");
    *out = analytic_min_avg_inconclusive(d, n, to_mode(mode));
  });
}

qc_status qc_monte_carlo_avg(qc_context* ctx, size_t d, size_t n, qc_mode mode,
                             uint64_t samples, uint64_t seed, qc_mc_report* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    SamplingSpec spec{d, n, seed, SamplingDistribution::kUniformHaarIndependent};
    const MonteCarloReport r =
        monte_carlo_avg_inconclusive(spec, to_mode(mode), samples, ctx->threads);
    *out = qc_mc_report{r.estimate, r.std_error, r.analytic_value.value_or(0.0), r.samples,
                        r.seed};
  });
}

qc_status qc_mixed_avg(qc_context* ctx, size_t d, size_t n, const double* spectra, qc_mode mode,
                       double* out) {
  return guarded(ctx, [&] {
    require(spectra, "spectra");
    require(out, "out");
    std::vector<std::vector<double>> s(n);
    for (size_t k = 0; k < n; ++k) s[k].assign(spectra + k * d, spectra + (k + 1) * d);
    *out = mixed_avg_inconclusive(s, to_mode(mode));
  });
}

qc_status qc_simulate(qc_context* ctx, const qc_states* states, qc_mode mode, uint64_t shots,
                      uint64_t seed, qc_outcome_counts* out) {
  return guarded(ctx, [&] {
    require(states, "states");
    require(out, "out");
    Rng rng(seed);
    const OutcomeCounts c =
        simulate_outcomes(ProductState(states->states), to_mode(mode), shots, rng);
    *out = qc_outcome_counts{c.counts[0], c.counts[1], c.shots};
  });
}

qc_status qc_identicality(qc_context* ctx, const qc_states* states, size_t n, char** out_json) {
  return guarded(ctx, [&] {
    require(states, "states");
    require(out_json, "out_json");
    const IdenticalityPovm povm = build_identicality_povm(states->states, n, ctx->rank_tol);
    Json j = to_json(povm);
    if (povm.feasible) {
      const std::size_t total = povm.povm.elements.front().rows();
      if (total <= kMaxValidatedDim) {
        j["residuals"] = to_json(validate_povm(povm.povm, ctx->psd_tol));
        const UnambiguityPattern pattern = unambiguity_pattern(povm, states->states);
        j["unambiguity"] = Json{{"max_off_pattern", pattern.max_off_pattern},
                                {"min_on_pattern", pattern.min_on_pattern}};
      } else {
        j["residuals"] = nullptr;
        j["unambiguity"] = nullptr;
      }
    }
    *out_json = copy_string(j.dump());
  });
}

qc_status qc_monotone(qc_context* ctx, const qc_gram* initial, const qc_gram* final_,
                      char** out_json) {
  return guarded(ctx, [&] {
    require(initial, "initial");
    require(final_, "final");
    require(out_json, "out_json");
    const FeasibilityResult f = cptp_pure_map_feasible(initial->gram, final_->gram, ctx->psd_tol);
    Json j{{"feasibility", to_json(f)}};
    j["monotone"] = f.pair.witness ? to_json(check_monotone_pair(f.pair)) : Json(nullptr);
    j["hadamard_marcus"] = Json{{"initial", to_json(check_hadamard_marcus(initial->gram))},
                                {"final", to_json(check_hadamard_marcus(final_->gram))}};
    *out_json = copy_string(j.dump());
  });
}

qc_status qc_conjecture_search(qc_context* ctx, size_t n, uint64_t trials, uint64_t seed,
                               char** out_json) {
  return guarded(ctx, [&] {
    require(out_json, "out_json");
    const SearchReport r = bapat_sunder_search(n, trials, Rng(seed), ctx->threads);
    *out_json = copy_string(to_json(r).dump());
  });
}

qc_status qc_overlap_certificate(qc_context* ctx, size_t d, double omega, qc_which which,
                                 double margin, uint64_t seed, char** out_json) {
  return guarded(ctx, [&] {
    require(out_json, "out_json");
    Rng rng(seed);
    SpanningCertificate cert;
    switch (which) {
      case QC_CERT_YES:
        cert = yes_certificate(d, omega, margin, rng);
        break;
      case QC_CERT_NO:
        cert = no_certificate(d, omega, rng);
        break;
      default:
        throw DomainError("unknown certificate kind");
    }
    *out_json = copy_string(to_json(cert).dump());
  });
}

qc_status qc_depolarizing_counterexample(qc_context* ctx, size_t d, size_t n,
                                         qc_counterexample* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    const DepolarizingCounterexample c = depolarizing_counterexample(d, n);
    *out = qc_counterexample{c.lhs, c.rhs, c.asserted ? 1 : 0, c.decreased ? 1 : 0};
  });
}

}  // extern "C"
