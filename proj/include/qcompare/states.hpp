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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qcompare/linalg.hpp"
#include "qcompare/rng.hpp"

namespace qcompare {

// Unit vector in C^dim. The global phase is kept as given.
class PureState {
 public:
  // Accepts `amplitudes` only if its norm is within `norm_tol` of 1, then
  // rescales to unit norm. Throws DomainError otherwise.
  static PureState from_amplitudes(ComplexVector amplitudes, double norm_tol = 1e-12);
  // Rescales any nonzero vector to unit norm.
  static PureState normalized(ComplexVector amplitudes);
  static PureState basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  explicit PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {}
  ComplexVector amplitudes_;
};

Complex overlap(const PureState& a, const PureState& b);

// Same ray: |<a|b>| = 1 within tol.
bool same_state(const PureState& a, const PureState& b, double tol = 1e-9);

// Ordered tensor product |psi_1> (x) ... (x) |psi_N>.
class ProductState {
 public:
  explicit ProductState(std::vector<PureState> factors);

  std::size_t size() const noexcept { return factors_.size(); }
  std::size_t dim() const noexcept { return factors_.front().dim(); }
  const std::vector<PureState>& factors() const noexcept { return factors_; }
  const PureState& operator[](std::size_t i) const { return factors_[i]; }

  // Full vector in C^(dim^N); the first factor is the most significant digit.
  ComplexVector tensor_vector() const;

 private:
  std::vector<PureState> factors_;
};

// Gram matrix of pure states: Hermitian, unit diagonal, positive.
class GramMatrix {
 public:
  // Validates the invariants, throwing DomainError on failure.
  static GramMatrix from_matrix(ComplexMatrix entries, double psd_tol = kDefaultPsdTol);

  std::size_t size() const noexcept { return entries_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return entries_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

 private:
  explicit GramMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {}
  friend GramMatrix gram(std::span<const PureState> states);
  ComplexMatrix entries_;
};

enum class SamplingDistribution { kUniformHaarIndependent };

struct SamplingSpec {
  std::size_t dim = 2;
  std::size_t n_particles = 2;
  std::uint64_t seed = 0;
  SamplingDistribution distribution = SamplingDistribution::kUniformHaarIndependent;

  // Throws DomainError unless dim >= 2 and n_particles >= 2.
  void validate() const;
};

// Normalized vector of i.i.d. complex Gaussians: Haar-distributed.
PureState haar_random_state(std::size_t dim, Rng& rng);
ProductState haar_product_state(std::size_t dim, std::size_t n, Rng& rng);

// |z> = omega e^{i theta}|anchor> + sqrt(1 - omega^2)|anchor_perp>, with theta
// uniform and anchor_perp Haar in the orthocomplement of anchor.
PureState state_with_overlap(const PureState& anchor, double omega, Rng& rng);

// Haar unitary whose columns come from Gram-Schmidt on Gaussian columns.
ComplexMatrix haar_unitary(std::size_t dim, Rng& rng);

// U diag(spectrum) U^dagger for a Haar U.
ComplexMatrix random_density_matrix(std::span<const double> spectrum, Rng& rng);

GramMatrix gram(std::span<const PureState> states);
inline GramMatrix gram(const ProductState& psi) { return gram(psi.factors()); }

bool linearly_independent(std::span<const PureState> states, double tol = kDefaultRankTol);

std::vector<ComplexVector> amplitude_columns(std::span<const PureState> states);

}  // namespace qcompare
