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

// Unambiguous comparison measurements on N-particle product states.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcompare/linalg.hpp"
#include "qcompare/rng.hpp"
#include "qcompare/states.hpp"
#include "qcompare/subspaces.hpp"

namespace qcompare {

// kAnyDifferent: detect that at least two particles differ (symmetric
// projector is the inconclusive element). kAllDifferent: detect that all
// particles differ (antisymmetric projector is the conclusive element).
enum class Mode { kAnyDifferent, kAllDifferent };

const char* mode_name(Mode mode);

struct Povm {
  std::vector<std::string> labels;
  std::vector<ComplexMatrix> elements;
};

struct PovmResiduals {
  std::vector<double> min_eigenvalues;  // per element
  double identity_residual = 0.0;       // max |sum E_k - 1| elementwise
  bool valid = false;
};

PovmResiduals validate_povm(const Povm& povm, double tol = kDefaultPsdTol);

// {E_diff, E_?} built from the subspace projectors.
Povm comparison_povm(Mode mode, std::size_t d, std::size_t n);

// per(G)/N!.
double prob_inconclusive_any(const GramMatrix& g);
// det(G)/N!. A numerically singular Gram (|det| <= kSingularDet) yields 0.
double prob_all_different(const GramMatrix& g);
inline constexpr double kSingularDet = 1e-12;

double prob_inconclusive(const GramMatrix& g, Mode mode);
double prob_conclusive(const GramMatrix& g, Mode mode);

// Minimum Haar-averaged inconclusive probability:
// any-diff C(d+n-1, n)/d^n, all-diff 1 - C(d, n)/d^n.
double analytic_min_avg_inconclusive(std::size_t d, std::size_t n, Mode mode);

struct MonteCarloReport {
  double estimate = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(samples)
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::optional<double> analytic_value;
};

// Samples are split into fixed-size shards; shard k draws from
// Rng(seed).fork(k). The reduction runs in shard order, so the report is
// bit-identical for any thread count.
inline constexpr std::uint64_t kMonteCarloShard = 1024;

MonteCarloReport monte_carlo_avg_inconclusive(const SamplingSpec& spec, Mode mode,
                                              std::uint64_t samples, unsigned threads = 1);

// Average inconclusive probability for mixed inputs diagonal in a common
// basis. Equal spectra use h_N / 1 - e_N; unequal spectra use the explicit
// tensor trace against the dense projector.
double mixed_avg_inconclusive(std::span<const std::vector<double>> spectra, Mode mode);

struct OutcomeCounts {
  std::vector<std::string> labels;
  std::vector<std::uint64_t> counts;
  std::uint64_t shots = 0;

  std::uint64_t count(const std::string& label) const;
};

OutcomeCounts simulate_outcomes(const ProductState& psi, Mode mode, std::uint64_t shots,
                                Rng& rng);

// Identicality confirmation over M known single-particle states.
struct IdenticalityPovm {
  Povm povm;                         // outcomes "same", "?"; empty when infeasible
  std::vector<double> success_probs;  // p_mu for each state index
  bool feasible = false;
  std::string reason;
  std::size_t num_states = 0;
  std::size_t n = 0;
  std::size_t dim = 0;
};

IdenticalityPovm build_identicality_povm(std::span<const PureState> states, std::size_t n,
                                         double rank_tol = kDefaultRankTol);

// <Psi_lambda|E_same|Psi_lambda> over every index tuple lambda in [M]^n.
struct UnambiguityPattern {
  double max_off_pattern = 0.0;  // tuples that are not all equal
  double min_on_pattern = 0.0;   // all-equal tuples
};

UnambiguityPattern unambiguity_pattern(const IdenticalityPovm& povm,
                                       std::span<const PureState> states);

// Tensor vector of states[idx[0]] (x) ... (x) states[idx[n-1]].
ComplexVector product_vector(std::span<const PureState> states,
                             std::span<const std::size_t> indices);

}  // namespace qcompare
