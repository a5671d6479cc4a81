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

#include "qcompare/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcompare/errors.hpp"

namespace qcompare {
namespace {

void project_out(ComplexVector& v, std::span<const Complex> unit) {
  const Complex c = inner_product(unit, v);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * unit[i];
}

void require_equal_dims(std::span<const PureState> states) {
  for (const auto& s : states)
    if (s.dim() != states.front().dim())
      throw DimensionError("states have unequal dimensions");
}

}  // namespace

PureState PureState::from_amplitudes(ComplexVector amplitudes, double norm_tol) {
  if (amplitudes.empty()) throw DomainError("state must have dimension >= 1");
  const double n = norm(amplitudes);
  if (!std::isfinite(n) || std::abs(n - 1.0) > norm_tol) {
    throw DomainError("state is not normalized (norm " + std::to_string(n) + ")");
  }
  for (auto& z : amplitudes) z /= n;
  return PureState(std::move(amplitudes));
}

PureState PureState::normalized(ComplexVector amplitudes) {
  if (amplitudes.empty()) throw DomainError("state must have dimension >= 1");
  const double n = norm(amplitudes);
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("cannot normalize a zero vector");
  for (auto& z : amplitudes) z /= n;
  return PureState(std::move(amplitudes));
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DomainError("basis index out of range");
  ComplexVector v(dim, 0.0);
  v[index] = 1.0;
  return PureState(std::move(v));
}

Complex overlap(const PureState& a, const PureState& b) {
  return inner_product(a.amplitudes(), b.amplitudes());
}

bool same_state(const PureState& a, const PureState& b, double tol) {
  return a.dim() == b.dim() && std::abs(std::abs(overlap(a, b)) - 1.0) <= tol;
}

ProductState::ProductState(std::vector<PureState> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw DomainError("product state needs at least one factor");
  require_equal_dims(factors_);
}

ComplexVector ProductState::tensor_vector() const {
  ComplexVector v(factors_.front().amplitudes().begin(), factors_.front().amplitudes().end());
  for (std::size_t k = 1; k < factors_.size(); ++k)
    v = kronecker_product(v, factors_[k].amplitudes());
  return v;
}

GramMatrix GramMatrix::from_matrix(ComplexMatrix entries, double psd_tol) {
  if (!entries.is_square() || entries.rows() == 0)
    throw DomainError("Gram matrix must be square and non-empty");
  if (!is_hermitian(entries, 1e-9)) throw DomainError("Gram matrix is not Hermitian");
  for (std::size_t i = 0; i < entries.rows(); ++i) {
    if (std::abs(entries(i, i) - Complex(1.0)) > 1e-9)
      throw DomainError("Gram matrix diagonal entry " + std::to_string(i) + " is not 1");
    entries(i, i) = 1.0;
    for (std::size_t j = 0; j < entries.cols(); ++j)
      if (std::abs(entries(i, j)) > 1.0 + 1e-9)
        throw DomainError("Gram matrix entry exceeds 1 in modulus");
  }
  if (!psd_check(entries, psd_tol)) throw DomainError("Gram matrix is not positive semidefinite");
  return GramMatrix(std::move(entries));
}

void SamplingSpec::validate() const {
  if (dim < 2) throw DomainError("sampling requires dim >= 2");
  if (n_particles < 2) throw DomainError("sampling requires at least 2 particles");
}

PureState haar_random_state(std::size_t dim, Rng& rng) {
  if (dim == 0) throw DomainError("Haar state requires dim >= 1");
  ComplexVector v(dim);
  for (auto& z : v) z = rng.complex_normal();
  return PureState::normalized(std::move(v));
}

ProductState haar_product_state(std::size_t dim, std::size_t n, Rng& rng) {
  std::vector<PureState> factors;
  factors.reserve(n);
  for (std::size_t k = 0; k < n; ++k) factors.push_back(haar_random_state(dim, rng));
  return ProductState(std::move(factors));
}

PureState state_with_overlap(const PureState& anchor, double omega, Rng& rng) {
  if (!(omega >= 0.0 && omega <= 1.0)) throw DomainError("overlap must lie in [0, 1]");
  const double theta = 2.0 * std::numbers::pi * rng.uniform();
  const Complex phase = std::polar(1.0, theta);
  const std::size_t dim = anchor.dim();
  if (dim == 1) {
    if (omega < 1.0) throw DomainError("no orthocomplement in dimension 1");
    return PureState::normalized({phase * anchor[0]});
  }

  ComplexVector perp;
  double perp_norm = 0.0;
  do {
    perp.assign(dim, 0.0);
    for (auto& z : perp) z = rng.complex_normal();
    // Two passes keep the residual along the anchor at rounding level.
    project_out(perp, anchor.amplitudes());
    project_out(perp, anchor.amplitudes());
    perp_norm = norm(perp);
  } while (perp_norm < 1e-6);

  const double s = std::sqrt(1.0 - omega * omega);
  ComplexVector z(dim);
  for (std::size_t i = 0; i < dim; ++i)
    z[i] = omega * phase * anchor[i] + s * perp[i] / perp_norm;
  return PureState::normalized(std::move(z));
}

ComplexMatrix haar_unitary(std::size_t dim, Rng& rng) {
  std::vector<ComplexVector> cols;
  cols.reserve(dim);
  while (cols.size() < dim) {
    ComplexVector v(dim);
    for (auto& z : v) z = rng.complex_normal();
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& c : cols) project_out(v, c);
    const double n = norm(v);
    if (n < 1e-8) continue;
    for (auto& z : v) z /= n;
    cols.push_back(std::move(v));
  }
  return ComplexMatrix::from_columns(cols);
}

ComplexMatrix random_density_matrix(std::span<const double> spectrum, Rng& rng) {
  const ComplexMatrix u = haar_unitary(spectrum.size(), rng);
  ComplexMatrix rho = u * ComplexMatrix::diagonal(spectrum) * u.adjoint();
  // Exact Hermiticity keeps downstream eigen checks clean.
  for (std::size_t i = 0; i < rho.rows(); ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < rho.cols(); ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return rho;
}

GramMatrix gram(std::span<const PureState> states) {
  if (states.empty()) throw DomainError("Gram matrix of an empty state list");
  require_equal_dims(states);
  const std::size_t n = states.size();
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      g(i, j) = overlap(states[i], states[j]);
      g(j, i) = std::conj(g(i, j));
    }
  }
  return GramMatrix(std::move(g));
}

std::vector<ComplexVector> amplitude_columns(std::span<const PureState> states) {
  std::vector<ComplexVector> cols;
  cols.reserve(states.size());
  for (const auto& s : states) cols.emplace_back(s.amplitudes().begin(), s.amplitudes().end());
  return cols;
}

bool linearly_independent(std::span<const PureState> states, double tol) {
  if (states.empty()) return true;
  require_equal_dims(states);
  if (states.size() > states.front().dim()) return false;
  return numeric_rank(amplitude_columns(states), tol) == states.size();
}

}  // namespace qcompare
