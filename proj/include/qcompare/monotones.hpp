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

// Distinguishability monotones for pure-state sets: Gram determinant and
// permanent behaviour under deterministic pure-to-pure maps, the
// Hadamard/Marcus bounds, the Bapat-Sunder permanental inequality and the
// depolarizing counterexample for mixed inputs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcompare/linalg.hpp"
#include "qcompare/rng.hpp"
#include "qcompare/states.hpp"

namespace qcompare {

// Gram matrices before and after a map, with the positive matrix Pi
// satisfying initial = final o Pi when it is known.
struct TransformPair {
  GramMatrix gram_initial;
  GramMatrix gram_final;
  std::optional<ComplexMatrix> witness;
};

enum class Feasibility { kFeasible, kInfeasible, kIndeterminate };

const char* feasibility_name(Feasibility f);

struct FeasibilityResult {
  TransformPair pair;
  Feasibility verdict = Feasibility::kInfeasible;
  std::string reason;
  // Entrywise quotients; undetermined entries are left at 0.
  ComplexMatrix candidate;
  std::vector<std::pair<std::size_t, std::size_t>> undetermined;  // i < j
  // PSD status of the determined principal submatrices (indeterminate case).
  std::optional<bool> determined_psd;
};

// Entries with modulus at or below this are treated as zero when dividing.
inline constexpr double kZeroEntryTol = 1e-12;

FeasibilityResult cptp_pure_map_feasible(const GramMatrix& initial, const GramMatrix& final_,
                                         double psd_tol = kDefaultPsdTol);

inline constexpr double kMonotoneSlack = 1e-9;

struct MonotoneReport {
  double det_initial = 0.0;
  double det_final = 0.0;
  double per_initial = 0.0;
  double per_final = 0.0;
  bool det_holds = false;      // det(initial) >= det(final)
  bool per_holds = false;      // per(initial) <= per(final)
  bool per_asserted = false;   // N <= 3: the permanent direction is a theorem
  bool ok = false;             // det_holds && (per_holds || !per_asserted)
};

// Throws PreconditionError when the pair has no witness.
MonotoneReport check_monotone_pair(const TransformPair& pair);

struct HadamardMarcusReport {
  bool det_ok = false;  // det <= 1
  bool per_ok = false;  // per >= 1
  double det_value = 0.0;
  double per_value = 0.0;
  bool det_equality = false;
  bool per_equality = false;
  bool diagonal = false;  // all off-diagonal entries vanish (1e-9)
};

HadamardMarcusReport check_hadamard_marcus(const GramMatrix& g);

// per(A o B) against per(A) prod b_ii.
struct BapatSunderEvaluation {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // (lhs - rhs) / max(1, rhs); positive means violated
};

BapatSunderEvaluation bapat_sunder_evaluate(const ComplexMatrix& a, const ComplexMatrix& b,
                                            Summation summation = Summation::kPlain);

struct BapatSunderCounterexample {
  ComplexMatrix a;
  ComplexMatrix b;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  std::uint64_t trial = 0;
};

struct SearchReport {
  std::size_t n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  double worst_margin = 0.0;
  std::uint64_t worst_trial = 0;
  std::uint64_t violations = 0;
  bool proven_case = false;  // n <= 3
  std::optional<BapatSunderCounterexample> counterexample;
};

// W^dagger W for W with i.i.d. standard complex normal entries.
ComplexMatrix random_wishart(std::size_t n, Rng& rng);
// D^{-1/2} B D^{-1/2} with D = diag(B).
ComplexMatrix unit_diagonal(const ComplexMatrix& b);
// Positive matrix with unit diagonal (normalized Wishart).
ComplexMatrix random_correlation_matrix(std::size_t n, Rng& rng);

// Trial t draws (A, B) from root.fork(t). A violation must exceed
// 1e-9 * max(1, rhs) and persist under compensated summation.
SearchReport bapat_sunder_search(std::size_t n, std::uint64_t trials, const Rng& root,
                                 unsigned threads = 1);

struct DepolarizingCounterexample {
  double lhs = 0.0;  // Tr[(1/D)^{(x) N} P_sym] = C(D+N-1, N)/D^N
  double rhs = 0.0;  // Tr[(|psi><psi|)^{(x) N} P_sym] = 1
  bool asserted = false;  // D > 1
  bool decreased = false;  // lhs < rhs
};

DepolarizingCounterexample depolarizing_counterexample(std::size_t d, std::size_t n);

}  // namespace qcompare
