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

// Symmetric and antisymmetric subspaces of (C^d)^{(x) n}.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qcompare/linalg.hpp"
#include "qcompare/states.hpp"

namespace qcompare {

// Dense projectors are limited to this many basis states.
inline constexpr std::uint64_t kMaxTensorDim = 4096;
// Clamp window for probabilities computed in floating point.
inline constexpr double kProbabilityOvershoot = 1e-9;

enum class SubspaceKind { kSymmetric, kAntisymmetric };

struct Projector {
  std::size_t d = 0;
  std::size_t n = 0;
  SubspaceKind label = SubspaceKind::kSymmetric;
  ComplexMatrix matrix;

  std::size_t dim_total() const noexcept { return matrix.rows(); }
};

struct SubspaceDims {
  std::uint64_t total = 0;  // d^n
  std::uint64_t sym = 0;    // C(d+n-1, n)
  std::uint64_t anti = 0;   // C(d, n)
  std::uint64_t asym = 0;   // total - sym
  std::uint64_t na = 0;     // total - anti
};

// Exact binomial coefficient; throws CapacityError on 64-bit overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
// d^n; throws CapacityError on 64-bit overflow.
std::uint64_t integer_power(std::uint64_t d, std::uint64_t n);

SubspaceDims subspace_dims(std::size_t d, std::size_t n);

// Dense projectors. Column |j> of P_sym is the uniform average over the
// distinct rearrangements of j's digits; column |j> of P_anti is the signed
// average over all n! rearrangements (zero when j repeats a digit). This is
// entrywise the permutation-operator sum (1/n!) sum_sigma (sign) U_sigma.
// Throws CapacityError when d^n > kMaxTensorDim.
Projector sym_projector(std::size_t d, std::size_t n);
Projector anti_projector(std::size_t d, std::size_t n);
Projector make_projector(SubspaceKind kind, std::size_t d, std::size_t n);

// Walks permutations of {0..n-1} in lexicographic order tracking the sign.
class PermutationWalker {
 public:
  explicit PermutationWalker(std::size_t n);
  const std::vector<std::size_t>& current() const noexcept { return perm_; }
  int sign() const noexcept { return sign_; }
  // Advances to the next permutation; false once all n! have been visited.
  bool next();

 private:
  std::vector<std::size_t> perm_;
  int sign_ = 1;
};

// Matrix-free (1/n!) sum_sigma (sign) U_sigma v, for v in (C^d)^{(x) n}.
ComplexVector apply_permutation_average(SubspaceKind kind, std::size_t d, std::size_t n,
                                        std::span<const Complex> v);

// <Psi|P|Psi> through the dense projector.
double expectation(const Projector& p, const ProductState& psi);
// Same quantity through apply_permutation_average, never forming P.
double expectation_matrix_free(SubspaceKind kind, const ProductState& psi);

// Clamps p into [0, 1] when it overshoots by at most kProbabilityOvershoot;
// larger excursions throw NumericalError.
double clamp_probability(double p);

enum class SymmetricPolynomial { kComplete, kElementary };

// h_n or e_n of a density-operator spectrum, by the additive recurrence
// over eigenvalues. Throws DomainError for negative eigenvalues or a
// spectrum that does not sum to 1 (both at 1e-9).
double symmetric_polynomial_trace(std::span<const double> eigenvalues, std::size_t n,
                                  SymmetricPolynomial kind);

// Tr[(rho_1 (x) ... (x) rho_n) P] for explicit density matrices.
double tensor_trace(std::span<const ComplexMatrix> rhos, const Projector& p);

}  // namespace qcompare
