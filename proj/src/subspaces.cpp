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

#include "qcompare/subspaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qcompare/errors.hpp"

namespace qcompare {
namespace {

std::vector<std::size_t> digits_of(std::size_t index, std::size_t d, std::size_t n) {
  std::vector<std::size_t> digits(n);
  for (std::size_t k = n; k-- > 0;) {
    digits[k] = index % d;
    index /= d;
  }
  return digits;
}

std::size_t index_of(std::span<const std::size_t> digits, std::size_t d) {
  std::size_t index = 0;
  for (std::size_t digit : digits) index = index * d + digit;
  return index;
}

// +1 for an even number of inversions, -1 for odd.
int inversion_sign(std::span<const std::size_t> seq) {
  int sign = 1;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) sign = -sign;
  return sign;
}

std::size_t checked_tensor_dim(std::size_t d, std::size_t n) {
  if (d == 0) throw DomainError("local dimension must be >= 1");
  if (n == 0) throw DomainError("particle count must be >= 1");
  const std::uint64_t total = integer_power(d, n);
  if (total > kMaxTensorDim) {
    throw CapacityError("d^n = " + std::to_string(total) + " exceeds dense limit " +
                        std::to_string(kMaxTensorDim));
  }
  return static_cast<std::size_t>(total);
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is always an integer.
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max())
      throw CapacityError("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t integer_power(std::uint64_t d, std::uint64_t n) {
  unsigned __int128 result = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    result *= d;
    if (result > std::numeric_limits<std::uint64_t>::max())
      throw CapacityError("d^n overflows 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

SubspaceDims subspace_dims(std::size_t d, std::size_t n) {
  SubspaceDims dims;
  dims.total = integer_power(d, n);
  dims.sym = d == 0 ? (n == 0 ? 1 : 0) : binomial(d + n - 1, n);
  dims.anti = binomial(d, n);
  dims.asym = dims.total - dims.sym;
  dims.na = dims.total - dims.anti;
  return dims;
}

Projector sym_projector(std::size_t d, std::size_t n) {
  const std::size_t total = checked_tensor_dim(d, n);
  Projector p{d, n, SubspaceKind::kSymmetric, ComplexMatrix(total, total)};
  std::vector<std::size_t> rows;
  for (std::size_t j = 0; j < total; ++j) {
    std::vector<std::size_t> digits = digits_of(j, d, n);
    std::sort(digits.begin(), digits.end());
    rows.clear();
    do {
      rows.push_back(index_of(digits, d));
    } while (std::next_permutation(digits.begin(), digits.end()));
    const double weight = 1.0 / static_cast<double>(rows.size());
    for (std::size_t i : rows) p.matrix(i, j) = weight;
  }
  return p;
}

Projector anti_projector(std::size_t d, std::size_t n) {
  const std::size_t total = checked_tensor_dim(d, n);
  Projector p{d, n, SubspaceKind::kAntisymmetric, ComplexMatrix(total, total)};
  if (n > d) return p;
  const double weight = 1.0 / factorial(n);
  for (std::size_t j = 0; j < total; ++j) {
    const std::vector<std::size_t> original = digits_of(j, d, n);
    std::vector<std::size_t> digits = original;
    std::sort(digits.begin(), digits.end());
    if (std::adjacent_find(digits.begin(), digits.end()) != digits.end()) continue;
    const int sign_j = inversion_sign(original);
    do {
      p.matrix(index_of(digits, d), j) = weight * sign_j * inversion_sign(digits);
    } while (std::next_permutation(digits.begin(), digits.end()));
  }
  return p;
}

Projector make_projector(SubspaceKind kind, std::size_t d, std::size_t n) {
  return kind == SubspaceKind::kSymmetric ? sym_projector(d, n) : anti_projector(d, n);
}

PermutationWalker::PermutationWalker(std::size_t n) : perm_(n) {
  for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
}

bool PermutationWalker::next() {
  const std::size_t n = perm_.size();
  if (n < 2) return false;
  std::size_t k = n - 1;
  while (k > 0 && perm_[k - 1] >= perm_[k]) --k;
  if (k == 0) return false;
  --k;
  std::size_t l = n - 1;
  while (perm_[l] <= perm_[k]) --l;
  std::swap(perm_[k], perm_[l]);
  sign_ = -sign_;
  const std::size_t suffix = n - k - 1;
  std::reverse(perm_.begin() + static_cast<std::ptrdiff_t>(k + 1), perm_.end());
  if ((suffix / 2) % 2 == 1) sign_ = -sign_;
  return true;
}

ComplexVector apply_permutation_average(SubspaceKind kind, std::size_t d, std::size_t n,
                                        std::span<const Complex> v) {
  const std::size_t total = checked_tensor_dim(d, n);
  if (v.size() != total) throw DimensionError("vector length is not d^n");
  if (factorial(n) * static_cast<double>(total) > 1e9)
    throw CapacityError("matrix-free permutation sum too large");

  ComplexVector out(total, 0.0);
  std::vector<std::vector<std::size_t>> digits(total);
  for (std::size_t x = 0; x < total; ++x) digits[x] = digits_of(x, d, n);

  std::vector<std::size_t> permuted(n);
  PermutationWalker walker(n);
  do {
    const auto& sigma = walker.current();
    const double sign = kind == SubspaceKind::kAntisymmetric ? walker.sign() : 1.0;
    for (std::size_t x = 0; x < total; ++x) {
      for (std::size_t k = 0; k < n; ++k) permuted[k] = digits[x][sigma[k]];
      out[index_of(permuted, d)] += sign * v[x];
    }
  } while (walker.next());

  const double scale = 1.0 / factorial(n);
  for (auto& z : out) z *= scale;
  return out;
}

double clamp_probability(double p) {
  if (!std::isfinite(p) || p < -kProbabilityOvershoot || p > 1.0 + kProbabilityOvershoot) {
    throw NumericalError("probability " + std::to_string(p) + " lies outside [0, 1]");
  }
  return std::clamp(p, 0.0, 1.0);
}

double expectation(const Projector& p, const ProductState& psi) {
  if (psi.dim() != p.d || psi.size() != p.n)
    throw DimensionError("product state does not match projector dimensions");
  const ComplexVector v = psi.tensor_vector();
  return clamp_probability(expectation_value(p.matrix, v).real());
}

double expectation_matrix_free(SubspaceKind kind, const ProductState& psi) {
  const ComplexVector v = psi.tensor_vector();
  const ComplexVector pv = apply_permutation_average(kind, psi.dim(), psi.size(), v);
  return clamp_probability(inner_product(v, pv).real());
}

double symmetric_polynomial_trace(std::span<const double> eigenvalues, std::size_t n,
                                  SymmetricPolynomial kind) {
  double sum = 0.0;
  for (double lambda : eigenvalues) {
    if (!(lambda >= -1e-9)) throw DomainError("negative eigenvalue in density spectrum");
    sum += lambda;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw DomainError("density spectrum does not sum to 1");

  // poly[k] holds h_k (resp. e_k) of the eigenvalues processed so far.
  std::vector<double> poly(n + 1, 0.0);
  poly[0] = 1.0;
  for (double lambda : eigenvalues) {
    lambda = std::max(lambda, 0.0);
    if (kind == SymmetricPolynomial::kComplete) {
      for (std::size_t k = 1; k <= n; ++k) poly[k] += lambda * poly[k - 1];
    } else {
      for (std::size_t k = n; k >= 1; --k) poly[k] += lambda * poly[k - 1];
    }
  }
  return poly[n];
}

double tensor_trace(std::span<const ComplexMatrix> rhos, const Projector& p) {
  if (rhos.size() != p.n) throw DimensionError("number of density matrices differs from n");
  ComplexMatrix joint = ComplexMatrix::identity(1);
  for (const auto& rho : rhos) {
    if (rho.rows() != p.d || rho.cols() != p.d)
      throw DimensionError("density matrix dimension differs from d");
    joint = kronecker_product(joint, rho);
  }
  Complex t = 0.0;
  const std::size_t total = p.dim_total();
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j) t += joint(i, j) * p.matrix(j, i);
  return clamp_probability(t.real());
}

}  // namespace qcompare
