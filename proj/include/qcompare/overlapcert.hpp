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

// Finite certificates for overlap filtering on pairs of pure states.
//
// An unambiguous "yes" (overlap equals omega) element must vanish on every
// product state whose overlap differs from omega, and a "no" element on every
// product state whose overlap equals omega. A positive operator that vanishes
// on a family of vectors spanning H (x) H is zero, so a family of such
// constraint states with rank d^2 forces the element to be zero.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qcompare/linalg.hpp"
#include "qcompare/rng.hpp"
#include "qcompare/states.hpp"

namespace qcompare {

enum class CertificateKind { kYes, kNo };
enum class CertificateVerdict { kForcedZero, kNotForced };

const char* certificate_kind_name(CertificateKind k);
const char* certificate_verdict_name(CertificateVerdict v);

inline constexpr double kDefaultYesMargin = 0.05;
inline constexpr double kExactOverlapTol = 1e-10;

struct CertificateMember {
  PureState a;
  PureState b;
  double overlap = 0.0;  // |<a|b>|
};

struct SpanningCertificate {
  std::size_t dim = 0;
  double omega = 0.0;
  CertificateKind which = CertificateKind::kYes;
  double margin = 0.0;  // yes certificates only
  std::vector<CertificateMember> family;
  std::size_t achieved_rank = 0;
  std::size_t full_rank_needed = 0;  // dim^2
  CertificateVerdict verdict = CertificateVerdict::kNotForced;
  std::uint64_t attempts = 0;
  std::uint64_t rejected = 0;
  std::string diagnostics;
};

// Rejection-samples Haar pairs with ||<a|b>| - omega| >= margin. Members are
// kept only when they raise the rank; sampling stops at rank d^2 or after
// 50 d^2 draws.
SpanningCertificate yes_certificate(std::size_t d, double omega, double margin, Rng& rng);

// Pairs (a, z) with z = state_with_overlap(a, omega), so |<a|z>| = omega.
SpanningCertificate no_certificate(std::size_t d, double omega, Rng& rng);

std::vector<ComplexVector> family_vectors(const SpanningCertificate& cert);

// 1 - (projector onto span(vectors)).
ComplexMatrix orthocomplement_projector(std::span<const ComplexVector> vectors,
                                        double tol = kDefaultRankTol);

struct AnnihilationCheck {
  double max_expectation = 0.0;  // max_s |<s|E|s>| over the family
  double trace = 0.0;
  bool psd = false;
};

AnnihilationCheck check_annihilator(const ComplexMatrix& op, const SpanningCertificate& cert);

// Q W W^dagger Q with Q the orthocomplement projector of the family: a
// positive operator that vanishes on every member.
ComplexMatrix random_annihilator(const SpanningCertificate& cert, Rng& rng);

}  // namespace qcompare
