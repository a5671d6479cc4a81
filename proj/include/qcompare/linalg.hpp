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

// Dense complex linear algebra for the small matrices that appear in state
// comparison: Gram matrices, permutation projectors and POVM elements.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qcompare {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr double kDefaultPsdTol = 1e-9;
inline constexpr double kDefaultRankTol = 1e-8;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr std::size_t kMaxPermanentSize = 20;

// Row-major dense complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix ones(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(std::span<const double> values);
  // Columns of the result are the given vectors.
  static ComplexMatrix from_columns(std::span<const ComplexVector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Complex> data() const noexcept { return entries_; }
  std::span<Complex> data() noexcept { return entries_; }
  std::span<const Complex> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double max_abs() const;
  // Elementwise max |a_ij - b_ij|; shapes must agree.
  double max_abs_diff(const ComplexMatrix& other) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

// Real eigenvalues of a Hermitian matrix in descending order.
struct HermitianSpectrum {
  std::vector<double> eigenvalues;

  double max() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
  double min() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
  double max_abs() const;
};

// Eigenvalues (descending) and the matching orthonormal eigenvectors, stored
// as the columns of `vectors`.
struct HermitianEigensystem {
  HermitianSpectrum spectrum;
  ComplexMatrix vectors;
};

enum class Summation { kPlain, kCompensated };

// Permanent by Ryser's inclusion-exclusion formula with Gray-code subset
// updates, O(2^n n). Throws DimensionError for non-square input and
// CapacityError above kMaxPermanentSize.
Complex permanent(const ComplexMatrix& a, Summation summation = Summation::kPlain);

// LU with partial pivoting.
Complex determinant(const ComplexMatrix& a);

// Solves a x = b for every column of b. Throws NumericalError when a pivot
// falls below `singular_tol` relative to the largest entry of a.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b, double singular_tol = 1e-13);

// Cyclic complex Jacobi. The input is symmetrized as (A + A^dagger)/2 after
// checking it is Hermitian within kHermitianTol (relative to max(1, |A|max)).
HermitianSpectrum hermitian_eigenvalues(const ComplexMatrix& a);
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);

// min eigenvalue >= -tol * max(1, max |eigenvalue|).
bool psd_check(const ComplexMatrix& a, double tol = kDefaultPsdTol);

// Singular values (descending) by one-sided Jacobi on the columns.
std::vector<double> singular_values(const ComplexMatrix& a);

// Number of singular values of the matrix whose columns are `columns` that
// exceed tol * sigma_max. An empty list has rank 0.
std::size_t numeric_rank(std::span<const ComplexVector> columns, double tol = kDefaultRankTol);
std::size_t numeric_rank(const ComplexMatrix& a, double tol = kDefaultRankTol);

ComplexMatrix hadamard_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kronecker_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kronecker_product(std::span<const Complex> a, std::span<const Complex> b);

// <a|b>, conjugate-linear in the first argument.
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);
ComplexVector apply(const ComplexMatrix& a, std::span<const Complex> v);
// <v|A|v>
Complex expectation_value(const ComplexMatrix& a, std::span<const Complex> v);
// |v><v|
ComplexMatrix outer_product(std::span<const Complex> v);

// n! as a double; exact for n <= 22.
double factorial(std::size_t n);

}  // namespace qcompare
