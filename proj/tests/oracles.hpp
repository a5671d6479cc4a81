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

// Independent reference implementations used only by the tests. They follow
// the textbook definitions literally and make no attempt to be fast.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <vector>

#include "qcompare/linalg.hpp"
#include "qcompare/rng.hpp"
#include "qcompare/states.hpp"

namespace qcompare::oracle {

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

// sum over sigma of prod_i a(i, sigma(i)), with or without the sign.
inline Complex permutation_sum(const ComplexMatrix& a, bool signed_sum) {
  std::vector<std::size_t> p(a.rows());
  std::iota(p.begin(), p.end(), 0);
  Complex total = 0.0;
  do {
    Complex term = signed_sum ? static_cast<double>(permutation_sign(p)) : 1.0;
    for (std::size_t i = 0; i < p.size(); ++i) term *= a(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline Complex naive_permanent(const ComplexMatrix& a) { return permutation_sum(a, false); }
inline Complex naive_determinant(const ComplexMatrix& a) { return permutation_sum(a, true); }

// Base-d digits of index, most significant first.
inline std::vector<std::size_t> digits(std::size_t index, std::size_t d, std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t k = n; k-- > 0;) {
    out[k] = index % d;
    index /= d;
  }
  return out;
}

inline std::size_t undigits(const std::vector<std::size_t>& dig, std::size_t d) {
  std::size_t index = 0;
  for (std::size_t x : dig) index = index * d + x;
  return index;
}

// (1/n!) sum_sigma (sign) U_sigma, with U_sigma permuting tensor factors.
inline ComplexMatrix permutation_projector(std::size_t d, std::size_t n, bool antisymmetric) {
  std::size_t dim = 1;
  for (std::size_t k = 0; k < n; ++k) dim *= d;
  ComplexMatrix p(dim, dim);
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  double count = 0.0;
  do {
    const double weight = antisymmetric ? permutation_sign(sigma) : 1.0;
    for (std::size_t col = 0; col < dim; ++col) {
      const auto in = digits(col, d, n);
      std::vector<std::size_t> out(n);
      for (std::size_t k = 0; k < n; ++k) out[sigma[k]] = in[k];
      p(undigits(out, d), col) += weight;
    }
    count += 1.0;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return p * Complex(1.0 / count);
}

// Hermitian test matrices: random complex Gaussian entries, symmetrized.
inline ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.complex_normal();
  return (a + a.adjoint()) * Complex(0.5);
}

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng.complex_normal();
  return a;
}

// Elementary/complete symmetric polynomials by explicit multiset sums.
inline double brute_symmetric_polynomial(const std::vector<double>& x, std::size_t n,
                                         bool complete) {
  double total = 0.0;
  std::vector<std::size_t> idx(n, 0);
  const std::size_t d = x.size();
  std::size_t combos = 1;
  for (std::size_t k = 0; k < n; ++k) combos *= d;
  for (std::size_t c = 0; c < combos; ++c) {
    idx = digits(c, d, n);
    bool ok = true;
    for (std::size_t k = 1; k < n; ++k)
      if (complete ? idx[k] < idx[k - 1] : idx[k] <= idx[k - 1]) ok = false;
    if (!ok) continue;
    double term = 1.0;
    for (std::size_t k : idx) term *= x[k];
    total += term;
  }
  return total;
}

// Gram pair (initial, final) related by a deterministic map: final from
// random states, initial = final o Pi with Pi the Gram matrix of a second
// random family (positive with unit diagonal by construction).
struct SampledPair {
  ComplexMatrix initial;
  ComplexMatrix final_;
  ComplexMatrix pi;
};

inline SampledPair sample_transform_pair(std::size_t n, std::size_t d, Rng& rng) {
  std::vector<PureState> a, b;
  for (std::size_t k = 0; k < n; ++k) a.push_back(haar_random_state(d, rng));
  for (std::size_t k = 0; k < n; ++k) b.push_back(haar_random_state(n, rng));
  SampledPair s;
  s.final_ = gram(a).matrix();
  s.pi = gram(b).matrix();
  s.initial = hadamard_product(s.final_, s.pi);
  return s;
}

}  // namespace qcompare::oracle
