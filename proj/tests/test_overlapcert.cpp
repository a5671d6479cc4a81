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

#include "qcompare/errors.hpp"
#include "qcompare/overlapcert.hpp"
#include "qcompare/rng.hpp"
#include "qcompare/subspaces.hpp"

namespace qcompare {
namespace {

TEST(YesCertificate, Examples) {
  Rng rng(1);
  const auto a = yes_certificate(2, 0.5, 0.1, rng);
  EXPECT_EQ(a.achieved_rank, 4u);
  EXPECT_EQ(a.verdict, CertificateVerdict::kForcedZero);
  for (const auto& m : a.family) EXPECT_GE(std::abs(m.overlap - 0.5), 0.1);

  const auto b = yes_certificate(3, 0.0, kDefaultYesMargin, rng);
  EXPECT_EQ(b.achieved_rank, 9u);
  EXPECT_EQ(b.verdict, CertificateVerdict::kForcedZero);

  const auto c = yes_certificate(2, 1.0, 0.1, rng);
  EXPECT_EQ(c.verdict, CertificateVerdict::kForcedZero);
}

TEST(YesCertificate, Preconditions) {
  Rng rng(2);
  EXPECT_THROW(yes_certificate(2, 0.5, 0.0, rng), DomainError);
  EXPECT_THROW(yes_certificate(2, 0.5, 0.3, rng), DomainError);
  EXPECT_THROW(yes_certificate(1, 0.5, 0.1, rng), DomainError);
  EXPECT_THROW(yes_certificate(2, 1.5, 0.1, rng), DomainError);
}

TEST(NoCertificate, Examples) {
  Rng rng(3);
  const auto a = no_certificate(2, 0.5, rng);
  EXPECT_EQ(a.achieved_rank, 4u);
  EXPECT_EQ(a.verdict, CertificateVerdict::kForcedZero);
  for (const auto& m : a.family) EXPECT_NEAR(m.overlap, 0.5, 1e-10);

  const auto b = no_certificate(2, 1.0, rng);
  EXPECT_EQ(b.achieved_rank, 3u);
  EXPECT_EQ(b.verdict, CertificateVerdict::kNotForced);
  EXPECT_FALSE(b.diagnostics.empty());

  EXPECT_EQ(no_certificate(3, 1.0, rng).achieved_rank, 6u);
}

TEST(NoCertificate, OverlapOneStaysInSymmetricSubspace) {
  for (std::size_t d : {2u, 3u, 4u}) {
    Rng rng(4 + d);
    const auto cert = no_certificate(d, 1.0, rng);
    EXPECT_EQ(cert.achieved_rank, binomial(d + 1, 2));
    EXPECT_EQ(numeric_rank(family_vectors(cert)), cert.achieved_rank);
    EXPECT_EQ(cert.attempts, 50u * d * d);
  }
}

TEST(Annihilator, AsymmetricProjectorAnnihilatesOverlapOneFamily) {
  Rng rng(8);
  for (std::size_t d : {2u, 3u}) {
    const auto cert = no_certificate(d, 1.0, rng);
    const ComplexMatrix asym = ComplexMatrix::identity(d * d) - sym_projector(d, 2).matrix;
    const auto check = check_annihilator(asym, cert);
    EXPECT_LE(check.max_expectation, 1e-9);
    EXPECT_NEAR(check.trace, static_cast<double>(binomial(d, 2)), 1e-12);
    EXPECT_TRUE(check.psd);
  }
}

TEST(Annihilator, RandomAnnihilatorIsNonzeroOnlyWhenNotForced) {
  Rng rng(9);
  const auto open = no_certificate(2, 1.0, rng);
  const auto e = random_annihilator(open, rng);
  const auto c = check_annihilator(e, open);
  EXPECT_LE(c.max_expectation, 1e-9);
  EXPECT_GT(c.trace, 1e-6);
  EXPECT_TRUE(c.psd);

  const auto closed = no_certificate(2, 0.25, rng);
  const auto z = random_annihilator(closed, rng);
  EXPECT_LE(z.max_abs(), 1e-9);
}

TEST(OrthocomplementProjector, Basic) {
  const std::vector<ComplexVector> v{{1.0, 0.0, 0.0}, {1.0, 1.0, 0.0}, {2.0, 2.0, 0.0}};
  const ComplexMatrix q = orthocomplement_projector(v);
  EXPECT_NEAR(q.trace().real(), 1.0, 1e-14);
  EXPECT_NEAR(q(2, 2).real(), 1.0, 1e-14);
  EXPECT_THROW(orthocomplement_projector(std::vector<ComplexVector>{}), DomainError);
}

TEST(Certificates, Reproducible) {
  Rng a(10), b(10);
  const auto x = yes_certificate(3, 0.75, 0.05, a);
  const auto y = yes_certificate(3, 0.75, 0.05, b);
  ASSERT_EQ(x.family.size(), y.family.size());
  for (std::size_t i = 0; i < x.family.size(); ++i)
    EXPECT_EQ(x.family[i].overlap, y.family[i].overlap);
  EXPECT_EQ(x.attempts, y.attempts);
}

}  // namespace
}  // namespace qcompare
