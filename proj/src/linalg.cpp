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

#include "qcompare/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "qcompare/errors.hpp"

namespace qcompare {
namespace {

void require_square(const ComplexMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw DimensionError(std::string(op) + " requires a square matrix, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                         "x" + std::to_string(b.cols()));
  }
}

// Kahan accumulator for complex sums.
struct CompensatedSum {
  double re = 0.0, im = 0.0, c_re = 0.0, c_im = 0.0;

  void add(Complex v) {
    double y = v.real() - c_re;
    double t = re + y;
    c_re = (t - re) - y;
    re = t;
    y = v.imag() - c_im;
    t = im + y;
    c_im = (t - im) - y;
    im = t;
  }
  Complex value() const { return {re, im}; }
};

ComplexMatrix symmetrized(const ComplexMatrix& a) {
  require_square(a, "hermitian eigensolver");
  if (!is_hermitian(a)) throw DimensionError("matrix is not Hermitian within tolerance");
  ComplexMatrix h(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return h;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionError("entry count " + std::to_string(entries_.size()) +
                         " does not match " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::ones(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols, Complex(1.0)));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_columns(std::span<const ComplexVector> columns) {
  if (columns.empty()) return {};
  const std::size_t rows = columns.front().size();
  ComplexMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionError("columns have unequal lengths");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

Complex ComplexMatrix::trace() const {
  require_square(*this, "trace");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  require_same_shape(*this, other, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    m = std::max(m, std::abs(entries_[k] - other.entries_[k]));
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

double HermitianSpectrum::max_abs() const {
  double m = 0.0;
  for (double v : eigenvalues) m = std::max(m, std::abs(v));
  return m;
}

Complex permanent(const ComplexMatrix& a, Summation summation) {
  require_square(a, "permanent");
  const std::size_t n = a.rows();
  if (n == 0) return 1.0;
  if (n > kMaxPermanentSize) {
    throw CapacityError("permanent limited to n <= " + std::to_string(kMaxPermanentSize));
  }

  // row_sums[i] = sum_{j in S} a_ij for the current Gray-code subset S.
  std::vector<Complex> row_sums(n, 0.0);
  CompensatedSum compensated;
  Complex plain = 0.0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int col = std::countr_zero(k);
    const std::uint64_t bit = std::uint64_t{1} << col;
    gray ^= bit;
    const double dir = (gray & bit) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n; ++i) row_sums[i] += dir * a(i, static_cast<std::size_t>(col));

    Complex prod = 1.0;
    for (std::size_t i = 0; i < n; ++i) prod *= row_sums[i];
    if (std::popcount(gray) % 2 == 1) prod = -prod;
    if (summation == Summation::kCompensated) {
      compensated.add(prod);
    } else {
      plain += prod;
    }
  }
  Complex total = summation == Summation::kCompensated ? compensated.value() : plain;
  return n % 2 == 1 ? -total : total;
}

Complex determinant(const ComplexMatrix& a) {
  require_square(a, "determinant");
  const std::size_t n = a.rows();
  ComplexMatrix lu = a;
  Complex det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(pivot, k))) pivot = i;
    if (lu(pivot, k) == Complex(0.0)) return 0.0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(pivot, j));
      det = -det;
    }
    det *= lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = lu(i, k) / lu(k, k);
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return det;
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b, double singular_tol) {
  require_square(a, "solve");
  if (b.rows() != a.rows()) throw DimensionError("solve: right-hand side has wrong row count");
  const std::size_t n = a.rows();
  const double scale = std::max(a.max_abs(), 1e-300);
  ComplexMatrix lu = a;
  ComplexMatrix x = b;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(pivot, k))) pivot = i;
    if (std::abs(lu(pivot, k)) <= singular_tol * scale)
      throw NumericalError("solve: matrix is numerically singular");
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(pivot, j));
      for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(k, j), x(pivot, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = lu(i, k) / lu(k, k);
      if (f == Complex(0.0)) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
      for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) -= f * x(k, j);
    }
  }
  for (std::size_t kk = n; kk-- > 0;) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      Complex s = x(kk, j);
      for (std::size_t m = kk + 1; m < n; ++m) s -= lu(kk, m) * x(m, j);
      x(kk, j) = s / lu(kk, kk);
    }
  }
  return x;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  const double bound = tol * std::max(1.0, a.max_abs());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > bound) return false;
  return true;
}

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& input) {
  ComplexMatrix a = symmetrized(input);
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);

  double frob = 0.0;
  for (const auto& z : a.data()) frob += std::norm(z);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) off += std::norm(a(i, j));
    if (off <= 1e-30 * frob || off == 0.0) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double b = std::abs(apq);
        if (b < 1e-300) continue;
        // D = diag(1, e^{-i phi}) makes the (p,q) block real symmetric; R is
        // the classical Jacobi rotation for that block. U = D R.
        const Complex phase = std::conj(apq) / b;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * b);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex u_pp = c, u_pq = s, u_qp = -s * phase, u_qq = c * phase;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * u_pp + akq * u_qp;
          a(k, q) = akp * u_pq + akq * u_qq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
          a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * u_pp + vkq * u_qp;
          v(k, q) = vkp * u_pq + vkq * u_qq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  HermitianEigensystem result;
  result.spectrum.eigenvalues.reserve(n);
  result.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    result.spectrum.eigenvalues.push_back(a(order[k], order[k]).real());
    for (std::size_t i = 0; i < n; ++i) result.vectors(i, k) = v(i, order[k]);
  }
  return result;
}

HermitianSpectrum hermitian_eigenvalues(const ComplexMatrix& a) {
  return hermitian_eigensystem(a).spectrum;
}

bool psd_check(const ComplexMatrix& a, double tol) {
  const HermitianSpectrum spectrum = hermitian_eigenvalues(a);
  if (spectrum.eigenvalues.empty()) return true;
  return spectrum.min() >= -tol * std::max(1.0, spectrum.max_abs());
}

std::vector<double> singular_values(const ComplexMatrix& input) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  // Work column-major: cols vectors of length rows.
  std::vector<ComplexVector> c(cols, ComplexVector(rows));
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) c[j][i] = input(i, j);

  for (int sweep = 0; sweep < 80; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < cols; ++i) {
      for (std::size_t j = i + 1; j < cols; ++j) {
        double alpha = 0.0, beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t k = 0; k < rows; ++k) {
          alpha += std::norm(c[i][k]);
          beta += std::norm(c[j][k]);
          gamma += std::conj(c[i][k]) * c[j][k];
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= 1e-15 * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Complex phase = std::conj(gamma) / g;  // c_j e^{-i phi}
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        for (std::size_t k = 0; k < rows; ++k) {
          const Complex xi = c[i][k];
          const Complex xj = c[j][k] * phase;
          c[i][k] = cs * xi - sn * xj;
          c[j][k] = sn * xi + cs * xj;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma(cols);
  for (std::size_t j = 0; j < cols; ++j) sigma[j] = norm(c[j]);
  std::sort(sigma.begin(), sigma.end(), std::greater<>());
  return sigma;
}

std::size_t numeric_rank(const ComplexMatrix& a, double tol) {
  if (a.empty()) return 0;
  const std::vector<double> sigma = singular_values(a);
  if (sigma.empty() || sigma.front() == 0.0) return 0;
  const double cutoff = tol * sigma.front();
  return static_cast<std::size_t>(
      std::count_if(sigma.begin(), sigma.end(), [&](double s) { return s > cutoff; }));
}

std::size_t numeric_rank(std::span<const ComplexVector> columns, double tol) {
  if (columns.empty()) return 0;
  return numeric_rank(ComplexMatrix::from_columns(columns), tol);
}

ComplexMatrix hadamard_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "hadamard_product");
  ComplexMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * b(i, j);
  return c;
}

ComplexMatrix kronecker_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return c;
}

ComplexVector kronecker_product(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexVector out;
  out.reserve(a.size() * b.size());
  for (const Complex& x : a)
    for (const Complex& y : b) out.push_back(x * y);
  return out;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DimensionError("inner product of unequal lengths");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s);
}

ComplexVector apply(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) throw DimensionError("apply: vector length mismatch");
  ComplexVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex s = 0.0;
    const auto r = a.row(i);
    for (std::size_t j = 0; j < v.size(); ++j) s += r[j] * v[j];
    out[i] = s;
  }
  return out;
}

Complex expectation_value(const ComplexMatrix& a, std::span<const Complex> v) {
  return inner_product(v, apply(a, v));
}

ComplexMatrix outer_product(std::span<const Complex> v) {
  ComplexMatrix m(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

}  // namespace qcompare
