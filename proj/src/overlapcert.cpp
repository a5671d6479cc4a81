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

#include "qcompare/overlapcert.hpp"

#include <algorithm>
#include <cmath>

#include "qcompare/errors.hpp"

namespace qcompare {
namespace {

SpanningCertificate start(std::size_t d, double omega, CertificateKind which) {
  if (d < 2) throw DomainError("certificates need d >= 2");
  if (!(omega >= 0.0 && omega <= 1.0)) throw DomainError("omega must lie in [0, 1]");
  SpanningCertificate cert;
  cert.dim = d;
  cert.omega = omega;
  cert.which = which;
  cert.full_rank_needed = d * d;
  return cert;
}

// Appends the member if its tensor vector raises the family's rank.
void offer(SpanningCertificate& cert, std::vector<ComplexVector>& vectors, PureState a,
           PureState b) {
  vectors.push_back(kronecker_product(a.amplitudes(), b.amplitudes()));
  const std::size_t rank = numeric_rank(vectors);
  if (rank > cert.achieved_rank) {
    cert.achieved_rank = rank;
    const double ov = std::abs(overlap(a, b));
    cert.family.push_back(CertificateMember{std::move(a), std::move(b), ov});
  } else {
    vectors.pop_back();
  }
}

void finish(SpanningCertificate& cert) {
  if (cert.achieved_rank == cert.full_rank_needed) {
    cert.verdict = CertificateVerdict::kForcedZero;
    return;
  }
  cert.verdict = CertificateVerdict::kNotForced;
  cert.diagnostics = "rank " + std::to_string(cert.achieved_rank) + " of " +
                     std::to_string(cert.full_rank_needed) + " after " +
                     std::to_string(cert.attempts) + " draws (" +
                     std::to_string(cert.rejected) + " rejected)";
}

}  // namespace

const char* certificate_kind_name(CertificateKind k) {
  return k == CertificateKind::kYes ? "yes" : "no";
}

const char* certificate_verdict_name(CertificateVerdict v) {
  return v == CertificateVerdict::kForcedZero ? "forced-zero" : "not-forced";
}

SpanningCertificate yes_certificate(std::size_t d, double omega, double margin, Rng& rng) {
  if (!(margin > 0.0 && margin <= 0.2)) throw DomainError("margin must lie in (0, 0.2]");
  SpanningCertificate cert = start(d, omega, CertificateKind::kYes);
  cert.margin = margin;
  const std::uint64_t cap = 50 * static_cast<std::uint64_t>(d * d);
  std::vector<ComplexVector> vectors;
  while (cert.achieved_rank < cert.full_rank_needed && cert.attempts < cap) {
    ++cert.attempts;
    PureState a = haar_random_state(d, rng);
    PureState b = haar_random_state(d, rng);
    if (std::abs(std::abs(overlap(a, b)) - omega) < margin) {
      ++cert.rejected;
      continue;
    }
    offer(cert, vectors, std::move(a), std::move(b));
  }
  finish(cert);
  return cert;
}

SpanningCertificate no_certificate(std::size_t d, double omega, Rng& rng) {
  SpanningCertificate cert = start(d, omega, CertificateKind::kNo);
  const std::uint64_t cap = 50 * static_cast<std::uint64_t>(d * d);
  std::vector<ComplexVector> vectors;
  while (cert.achieved_rank < cert.full_rank_needed && cert.attempts < cap) {
    ++cert.attempts;
    PureState a = haar_random_state(d, rng);
    PureState b = state_with_overlap(a, omega, rng);
    if (std::abs(std::abs(overlap(a, b)) - omega) > kExactOverlapTol) {
      ++cert.rejected;
      continue;
    }
    offer(cert, vectors, std::move(a), std::move(b));
  }
  finish(cert);
  return cert;
}

std::vector<ComplexVector> family_vectors(const SpanningCertificate& cert) {
  std::vector<ComplexVector> out;
  out.reserve(cert.family.size());
  for (const auto& m : cert.family)
    out.push_back(kronecker_product(m.a.amplitudes(), m.b.amplitudes()));
  return out;
}

ComplexMatrix orthocomplement_projector(std::span<const ComplexVector> vectors, double tol) {
  if (vectors.empty()) throw DomainError("empty vector family");
  const std::size_t dim = vectors.front().size();
  double scale = 0.0;
  for (const auto& v : vectors) scale = std::max(scale, norm(v));

  std::vector<ComplexVector> basis;
  for (const auto& v : vectors) {
    if (v.size() != dim) throw DimensionError("family vectors have unequal lengths");
    ComplexVector w = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        const Complex c = inner_product(q, w);
        for (std::size_t i = 0; i < dim; ++i) w[i] -= c * q[i];
      }
    }
    const double n = norm(w);
    if (n <= tol * scale) continue;
    for (auto& z : w) z /= n;
    basis.push_back(std::move(w));
  }

  ComplexMatrix q = ComplexMatrix::identity(dim);
  for (const auto& b : basis) q -= outer_product(b);
  return q;
}

AnnihilationCheck check_annihilator(const ComplexMatrix& op, const SpanningCertificate& cert) {
  AnnihilationCheck check;
  for (const auto& v : family_vectors(cert))
    check.max_expectation = std::max(check.max_expectation, std::abs(expectation_value(op, v)));
  check.trace = op.trace().real();
  check.psd = psd_check(op);
  return check;
}

ComplexMatrix random_annihilator(const SpanningCertificate& cert, Rng& rng) {
  const ComplexMatrix q = orthocomplement_projector(family_vectors(cert));
  const std::size_t dim = q.rows();
  ComplexMatrix w(dim, dim);
  for (auto& z : w.data()) z = rng.complex_normal();
  ComplexMatrix e = q * w * w.adjoint() * q;
  for (std::size_t i = 0; i < dim; ++i) {
    e(i, i) = e(i, i).real();
    for (std::size_t j = i + 1; j < dim; ++j) e(j, i) = std::conj(e(i, j));
  }
  return e;
}

}  // namespace qcompare
