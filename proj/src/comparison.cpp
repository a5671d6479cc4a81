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

#include "qcompare/comparison.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "qcompare/errors.hpp"

namespace qcompare {
namespace {

// Running (count, mean, M2) with Chan's pairwise merge.
struct Moments {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& other) {
    if (other.count == 0) return;
    if (count == 0) {
      *this = other;
      return;
    }
    const double total = static_cast<double>(count + other.count);
    const double delta = other.mean - mean;
    mean += delta * static_cast<double>(other.count) / total;
    m2 += other.m2 + delta * delta * static_cast<double>(count) *
                         static_cast<double>(other.count) / total;
    count += other.count;
  }
};

std::vector<std::size_t> tuple_of(std::size_t index, std::size_t m, std::size_t n) {
  std::vector<std::size_t> t(n);
  for (std::size_t k = n; k-- > 0;) {
    t[k] = index % m;
    index /= m;
  }
  return t;
}

}  // namespace

const char* mode_name(Mode mode) {
  return mode == Mode::kAnyDifferent ? "any" : "all";
}

PovmResiduals validate_povm(const Povm& povm, double tol) {
  PovmResiduals r;
  if (povm.elements.empty()) return r;
  const std::size_t dim = povm.elements.front().rows();
  ComplexMatrix sum(dim, dim);
  r.valid = true;
  for (const auto& e : povm.elements) {
    const HermitianSpectrum s = hermitian_eigenvalues(e);
    r.min_eigenvalues.push_back(s.min());
    if (s.min() < -tol * std::max(1.0, s.max_abs())) r.valid = false;
    sum += e;
  }
  r.identity_residual = sum.max_abs_diff(ComplexMatrix::identity(dim));
  if (r.identity_residual > tol) r.valid = false;
  return r;
}

Povm comparison_povm(Mode mode, std::size_t d, std::size_t n) {
  const Projector p = make_projector(
      mode == Mode::kAnyDifferent ? SubspaceKind::kSymmetric : SubspaceKind::kAntisymmetric, d,
      n);
  ComplexMatrix complement = ComplexMatrix::identity(p.dim_total()) - p.matrix;
  if (mode == Mode::kAnyDifferent) {
    return Povm{{"different", "inconclusive"}, {std::move(complement), p.matrix}};
  }
  return Povm{{"all_different", "inconclusive"}, {p.matrix, std::move(complement)}};
}

double prob_inconclusive_any(const GramMatrix& g) {
  const std::size_t n = g.size();
  return clamp_probability(permanent(g.matrix()).real() / factorial(n));
}

double prob_all_different(const GramMatrix& g) {
  const std::size_t n = g.size();
  const double det = determinant(g.matrix()).real();
  if (std::abs(det) <= kSingularDet) return 0.0;
  return clamp_probability(det / factorial(n));
}

double prob_inconclusive(const GramMatrix& g, Mode mode) {
  return mode == Mode::kAnyDifferent ? prob_inconclusive_any(g) : 1.0 - prob_all_different(g);
}

double prob_conclusive(const GramMatrix& g, Mode mode) {
  return mode == Mode::kAnyDifferent ? 1.0 - prob_inconclusive_any(g) : prob_all_different(g);
}

double analytic_min_avg_inconclusive(std::size_t d, std::size_t n, Mode mode) {
  const SubspaceDims dims = subspace_dims(d, n);
  const double total = static_cast<double>(dims.total);
  if (mode == Mode::kAnyDifferent) return static_cast<double>(dims.sym) / total;
  return static_cast<double>(dims.na) / total;
}

MonteCarloReport monte_carlo_avg_inconclusive(const SamplingSpec& spec, Mode mode,
                                              std::uint64_t samples, unsigned threads) {
  spec.validate();
  if (samples < 100) throw PreconditionError("Monte Carlo needs at least 100 samples");
  if (spec.n_particles > kMaxPermanentSize)
    throw CapacityError("too many particles for exact permanents");

  const std::uint64_t shards = (samples + kMonteCarloShard - 1) / kMonteCarloShard;
  std::vector<Moments> results(shards);
  const Rng root(spec.seed);

  auto run_shard = [&](std::uint64_t k) {
    Rng rng = root.fork(k);
    const std::uint64_t begin = k * kMonteCarloShard;
    const std::uint64_t end = std::min(samples, begin + kMonteCarloShard);
    Moments m;
    for (std::uint64_t s = begin; s < end; ++s) {
      const ProductState psi = haar_product_state(spec.dim, spec.n_particles, rng);
      m.add(prob_inconclusive(gram(psi), mode));
    }
    results[k] = m;
  };

  threads = std::max(1u, threads);
  if (threads == 1 || shards == 1) {
    for (std::uint64_t k = 0; k < shards; ++k) run_shard(k);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min<std::uint64_t>(threads, shards); ++t) {
      pool.emplace_back([&] {
        for (std::uint64_t k = next++; k < shards; k = next++) run_shard(k);
      });
    }
  }

  Moments total;
  for (const auto& m : results) total.merge(m);

  MonteCarloReport report;
  report.samples = samples;
  report.seed = spec.seed;
  report.estimate = total.mean;
  const double variance = total.count > 1 ? total.m2 / static_cast<double>(total.count - 1) : 0.0;
  report.std_error = std::sqrt(std::max(variance, 0.0) / static_cast<double>(total.count));
  report.analytic_value = analytic_min_avg_inconclusive(spec.dim, spec.n_particles, mode);
  return report;
}

double mixed_avg_inconclusive(std::span<const std::vector<double>> spectra, Mode mode) {
  if (spectra.empty()) throw DomainError("at least one spectrum is required");
  const std::size_t d = spectra.front().size();
  for (const auto& s : spectra) {
    if (s.size() != d) throw DimensionError("spectra have unequal dimensions");
    // Validates nonnegativity and normalization.
    symmetric_polynomial_trace(s, 1, SymmetricPolynomial::kComplete);
  }
  const std::size_t n = spectra.size();
  const bool all_equal = std::all_of(spectra.begin(), spectra.end(), [&](const auto& s) {
    for (std::size_t i = 0; i < d; ++i)
      if (std::abs(s[i] - spectra.front()[i]) > 1e-12) return false;
    return true;
  });

  if (all_equal) {
    if (mode == Mode::kAnyDifferent)
      return symmetric_polynomial_trace(spectra.front(), n, SymmetricPolynomial::kComplete);
    return 1.0 - symmetric_polynomial_trace(spectra.front(), n, SymmetricPolynomial::kElementary);
  }

  const Projector p = make_projector(
      mode == Mode::kAnyDifferent ? SubspaceKind::kSymmetric : SubspaceKind::kAntisymmetric, d,
      n);
  std::vector<ComplexMatrix> rhos;
  rhos.reserve(n);
  for (const auto& s : spectra) rhos.push_back(ComplexMatrix::diagonal(s));
  const double t = tensor_trace(rhos, p);
  return mode == Mode::kAnyDifferent ? t : clamp_probability(1.0 - t);
}

std::uint64_t OutcomeCounts::count(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return counts[i];
  return 0;
}

OutcomeCounts simulate_outcomes(const ProductState& psi, Mode mode, std::uint64_t shots,
                                Rng& rng) {
  if (shots < 1) throw PreconditionError("shots must be >= 1");
  const double p = prob_conclusive(gram(psi), mode);
  std::uint64_t conclusive = 0;
  for (std::uint64_t s = 0; s < shots; ++s)
    if (rng.uniform() < p) ++conclusive;
  OutcomeCounts out;
  out.labels = {mode == Mode::kAnyDifferent ? "different" : "all_different", "inconclusive"};
  out.counts = {conclusive, shots - conclusive};
  out.shots = shots;
  return out;
}

ComplexVector product_vector(std::span<const PureState> states,
                             std::span<const std::size_t> indices) {
  const auto& first = states[indices[0]].amplitudes();
  ComplexVector v(first.begin(), first.end());
  for (std::size_t k = 1; k < indices.size(); ++k)
    v = kronecker_product(v, states[indices[k]].amplitudes());
  return v;
}

IdenticalityPovm build_identicality_povm(std::span<const PureState> states, std::size_t n,
                                         double rank_tol) {
  const std::size_t m = states.size();
  if (m < 2) throw PreconditionError("identicality needs at least 2 candidate states");
  if (n < 1) throw PreconditionError("identicality needs at least 1 particle");
  const std::size_t dim = states.front().dim();
  for (const auto& s : states)
    if (s.dim() != dim) throw DimensionError("candidate states have unequal dimensions");

  IdenticalityPovm result;
  result.num_states = m;
  result.n = n;
  result.dim = dim;
  // Dependence rules the task out at any size, so it is checked first.
  if (!linearly_independent(states, rank_tol)) {
    result.reason = "candidate states are linearly dependent";
    return result;
  }
  if (integer_power(m, n) > kMaxTensorDim || integer_power(dim, n) > kMaxTensorDim)
    throw CapacityError("M^n and D^n must not exceed " + std::to_string(kMaxTensorDim));

  // Gram matrix of the M^n product states is the n-fold Kronecker power of
  // the single-particle Gram matrix.
  const ComplexMatrix single = gram(states).matrix();
  ComplexMatrix product_gram = single;
  for (std::size_t k = 1; k < n; ++k) product_gram = kronecker_product(product_gram, single);
  const std::size_t tuples = product_gram.rows();

  ComplexMatrix inverse;
  try {
    inverse = solve(product_gram, ComplexMatrix::identity(tuples));
  } catch (const NumericalError&) {
    result.reason = "product-state Gram matrix is numerically singular";
    return result;
  }

  // Dual vector for the all-equal tuple (mu, ..., mu):
  // |dual> = sum_lambda inverse(lambda, idx) |Psi_lambda>.
  const std::size_t total = static_cast<std::size_t>(integer_power(dim, n));
  std::vector<std::size_t> diagonal_index(m);
  for (std::size_t mu = 0; mu < m; ++mu) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < n; ++k) idx = idx * m + mu;
    diagonal_index[mu] = idx;
  }
  std::vector<ComplexVector> duals(m, ComplexVector(total, 0.0));
  for (std::size_t lambda = 0; lambda < tuples; ++lambda) {
    const std::vector<std::size_t> t = tuple_of(lambda, m, n);
    const ComplexVector psi = product_vector(states, t);
    for (std::size_t mu = 0; mu < m; ++mu) {
      const Complex w = inverse(lambda, diagonal_index[mu]);
      for (std::size_t i = 0; i < total; ++i) duals[mu][i] += w * psi[i];
    }
  }

  ComplexMatrix dual_gram(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) dual_gram(a, b) = inner_product(duals[a], duals[b]);
  const double lambda_max = hermitian_eigenvalues(dual_gram).max();
  if (!(lambda_max > 0.0) || !std::isfinite(lambda_max)) {
    result.reason = "dual family is degenerate";
    return result;
  }
  const double c = 1.0 / lambda_max;

  ComplexMatrix same(total, total);
  for (const auto& dual : duals) same += outer_product(dual);
  same *= c;
  ComplexMatrix inconclusive = ComplexMatrix::identity(total) - same;

  result.povm = Povm{{"same", "inconclusive"}, {std::move(same), std::move(inconclusive)}};
  result.success_probs.assign(m, c);
  result.feasible = true;
  return result;
}

UnambiguityPattern unambiguity_pattern(const IdenticalityPovm& povm,
                                       std::span<const PureState> states) {
  if (!povm.feasible) throw PreconditionError("POVM is infeasible");
  const std::size_t m = states.size();
  const std::size_t tuples = static_cast<std::size_t>(integer_power(m, povm.n));
  UnambiguityPattern pattern;
  pattern.min_on_pattern = 1.0;
  for (std::size_t lambda = 0; lambda < tuples; ++lambda) {
    const std::vector<std::size_t> t = tuple_of(lambda, m, povm.n);
    const double p =
        expectation_value(povm.povm.elements.front(), product_vector(states, t)).real();
    const bool all_equal = std::all_of(t.begin(), t.end(), [&](std::size_t x) { return x == t[0]; });
    if (all_equal) {
      pattern.min_on_pattern = std::min(pattern.min_on_pattern, p);
    } else {
      pattern.max_off_pattern = std::max(pattern.max_off_pattern, std::abs(p));
    }
  }
  return pattern;
}

}  // namespace qcompare
