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


#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "qcompare/errors.hpp"
#include "qcompare/rng.hpp"
#include "qcompare/states.hpp"
#include "qcompare/subspaces.hpp"

namespace qcompare {
namespace {

TEST(Projectors, MatchPermutationSum) {
  for (std::size_t d = 1; d <= 4; ++d) {
    for (std::size_t n = 1; n <= 4; ++n) {
      if (integer_power(d, n) > 256) continue;
      EXPECT_LE(sym_projector(d, n).matrix.max_abs_diff(oracle::permutation_projector(d, n, false)),
                1e-13)
          << d << "," << n;
      EXPECT_LE(anti_projector(d, n).matrix.max_abs_diff(oracle::permutation_projector(d, n, true)),
                1e-13)
          << d << "," << n;
    }
  }
}

TEST(Projectors, TraceExamples) {
  EXPECT_NEAR(sym_projector(2, 2).matrix.trace().real(), 3.0, 1e-12);
  EXPECT_NEAR(sym_projector(2, 3).matrix.trace().real(), 4.0, 1e-12);
  EXPECT_LE(sym_projector(3, 1).matrix.max_abs_diff(ComplexMatrix::identity(3)), 0.0);
  EXPECT_NEAR(anti_projector(2, 2).matrix.trace().real(), 1.0, 1e-12);
  EXPECT_EQ(anti_projector(2, 3).matrix.max_abs(), 0.0);
  EXPECT_NEAR(anti_projector(3, 2).matrix.trace().real(), 3.0, 1e-12);
}

TEST(Projectors, IdempotentAndComplementary) {
  const auto s = sym_projector(3, 3).matrix;
  const auto a = anti_projector(3, 3).matrix;
  EXPECT_LE((s * s).max_abs_diff(s), 1e-12);
  EXPECT_LE((a * a).max_abs_diff(a), 1e-12);
  EXPECT_LE((s * a).max_abs(), 1e-12);
  EXPECT_TRUE(is_hermitian(s));
}

TEST(Projectors, Capacity) {
  EXPECT_NO_THROW(sym_projector(2, 12));
  EXPECT_THROW(sym_projector(2, 13), CapacityError);
  EXPECT_THROW(sym_projector(0, 2), DomainError);
}

TEST(SubspaceDims, Examples) {
  const auto a = subspace_dims(2, 2);
  EXPECT_EQ(a.sym, 3u);
  EXPECT_EQ(a.anti, 1u);
  EXPECT_EQ(a.total, 4u);
  EXPECT_EQ(a.asym, 1u);
  EXPECT_EQ(a.na, 3u);
  EXPECT_EQ(subspace_dims(3, 3).sym, 10u);
  EXPECT_EQ(subspace_dims(3, 3).anti, 1u);
  EXPECT_EQ(subspace_dims(2, 3).sym, 4u);
  EXPECT_EQ(subspace_dims(2, 3).anti, 0u);
}

TEST(Binomial, ExactAndOverflow) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(2, 3), 0u);
  EXPECT_EQ(binomial(60, 30), 118264581564861424ull);
  EXPECT_THROW(binomial(200, 100), CapacityError);
  EXPECT_THROW(integer_power(10, 30), CapacityError);
}

TEST(PermutationWalker, VisitsAllWithSigns) {
  PermutationWalker w(4);
  int count = 0, sign_sum = 0;
  do {
    ++count;
    sign_sum += w.sign();
    EXPECT_EQ(w.sign(), oracle::permutation_sign(w.current()));
  } while (w.next());
  EXPECT_EQ(count, 24);
  EXPECT_EQ(sign_sum, 0);
}

TEST(Expectation, Examples) {
  Rng rng(1);
  const auto s = haar_random_state(3, rng);
  const ProductState same({s, s, s});
  EXPECT_NEAR(expectation(sym_projector(3, 3), same), 1.0, 1e-12);
  const auto t = haar_random_state(3, rng);
  const ProductState repeat({t, s, t});
  EXPECT_NEAR(expectation(anti_projector(3, 3), repeat), 0.0, 1e-12);
  const ProductState orth({PureState::basis(2, 0), PureState::basis(2, 1)});
  EXPECT_NEAR(expectation(sym_projector(2, 2), orth), 0.5, 1e-14);
}

TEST(Expectation, DenseAgreesWithMatrixFree) {
  Rng rng(2);
  for (std::size_t d : {2u, 3u}) {
    for (std::size_t n : {2u, 3u, 4u}) {
      const auto ps = sym_projector(d, n);
      const auto pa = anti_projector(d, n);
      for (int rep = 0; rep < 10; ++rep) {
        const auto psi = haar_product_state(d, n, rng);
        EXPECT_NEAR(expectation(ps, psi),
                    expectation_matrix_free(SubspaceKind::kSymmetric, psi), 1e-10);
        EXPECT_NEAR(expectation(pa, psi),
                    expectation_matrix_free(SubspaceKind::kAntisymmetric, psi), 1e-10);
      }
    }
  }
}

TEST(ClampProbability, Window) {
  EXPECT_EQ(clamp_probability(1.0 + 5e-10), 1.0);
  EXPECT_EQ(clamp_probability(-5e-10), 0.0);
  EXPECT_EQ(clamp_probability(0.25), 0.25);
  EXPECT_THROW(clamp_probability(1.0 + 1e-6), NumericalError);
  EXPECT_THROW(clamp_probability(-1e-6), NumericalError);
}

TEST(SymmetricPolynomial, Examples) {
  const std::vector<double> half{0.5, 0.5};
  EXPECT_NEAR(symmetric_polynomial_trace(half, 2, SymmetricPolynomial::kComplete), 0.75, 1e-15);
  EXPECT_NEAR(symmetric_polynomial_trace(half, 2, SymmetricPolynomial::kElementary), 0.25, 1e-15);
  const std::vector<double> pure{1.0, 0.0};
  for (std::size_t n = 2; n <= 5; ++n)
    EXPECT_EQ(symmetric_polynomial_trace(pure, n, SymmetricPolynomial::kElementary), 0.0);
  const std::vector<double> negative{1.1, -0.1};
  EXPECT_THROW(symmetric_polynomial_trace(negative, 2, SymmetricPolynomial::kComplete),
               DomainError);
  const std::vector<double> unnormalized{0.5, 0.6};
  EXPECT_THROW(symmetric_polynomial_trace(unnormalized, 2, SymmetricPolynomial::kComplete),
               DomainError);
}

TEST(SymmetricPolynomial, MatchesMultisetSum) {
  Rng rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t d = 2 + rep % 3;
    std::vector<double> x(d);
    double total = 0.0;
    for (double& v : x) total += (v = rng.uniform());
    for (double& v : x) v /= total;
    for (std::size_t n = 1; n <= 5; ++n) {
      EXPECT_NEAR(symmetric_polynomial_trace(x, n, SymmetricPolynomial::kComplete),
                  oracle::brute_symmetric_polynomial(x, n, true), 1e-13);
      EXPECT_NEAR(symmetric_polynomial_trace(x, n, SymmetricPolynomial::kElementary),
                  oracle::brute_symmetric_polynomial(x, n, false), 1e-13);
    }
  }
}

}  // namespace
}  // namespace qcompare
