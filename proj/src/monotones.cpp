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

#include "qcompare/monotones.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "qcompare/errors.hpp"
#include "qcompare/subspaces.hpp"

namespace qcompare {
namespace {

using Clique = std::vector<std::size_t>;

// Bron-Kerbosch without pivoting; graphs here have at most a few dozen
// vertices.
void maximal_cliques(const std::vector<std::vector<bool>>& adj, Clique& r, Clique p, Clique x,
                     std::vector<Clique>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  while (!p.empty()) {
    const std::size_t v = p.back();
    Clique p2, x2;
    for (std::size_t u : p)
      if (u != v && adj[v][u]) p2.push_back(u);
    for (std::size_t u : x)
      if (adj[v][u]) x2.push_back(u);
    r.push_back(v);
    maximal_cliques(adj, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.pop_back();
    x.push_back(v);
  }
}

ComplexMatrix principal_submatrix(const ComplexMatrix& m, const Clique& idx) {
  ComplexMatrix s(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) s(a, b) = m(idx[a], idx[b]);
  return s;
}

}  // namespace

const char* feasibility_name(Feasibility f) {
  switch (f) {
    case Feasibility::kFeasible:
      return "feasible";
    case Feasibility::kInfeasible:
      return "infeasible";
    case Feasibility::kIndeterminate:
      return "indeterminate";
  }
  return "unknown";
}

FeasibilityResult cptp_pure_map_feasible(const GramMatrix& initial, const GramMatrix& final_,
                                         double psd_tol) {
  const std::size_t n = initial.size();
  if (final_.size() != n) throw DimensionError("Gram matrices have different sizes");

  FeasibilityResult result{TransformPair{initial, final_, std::nullopt},
                           Feasibility::kInfeasible,
                           {},
                           ComplexMatrix(n, n),
                           {},
                           std::nullopt};
  std::vector<std::vector<bool>> determined(n, std::vector<bool>(n, true));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex g1 = initial(i, j);
      const Complex g2 = final_(i, j);
      if (std::abs(g2) > kZeroEntryTol) {
        result.candidate(i, j) = g1 / g2;
      } else if (std::abs(g1) > kZeroEntryTol) {
        result.reason = "final overlap (" + std::to_string(i) + "," + std::to_string(j) +
                        ") vanishes but the initial one does not";
        return result;
      } else {
        determined[i][j] = false;
        if (i < j) result.undetermined.emplace_back(i, j);
      }
    }
  }

  if (result.undetermined.empty()) {
    if (psd_check(result.candidate, psd_tol)) {
      result.verdict = Feasibility::kFeasible;
      result.pair.witness = result.candidate;
    } else {
      result.reason = "quotient matrix is not positive semidefinite";
    }
    return result;
  }

  std::vector<Clique> cliques;
  Clique r, p(n), x;
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  maximal_cliques(determined, r, p, x, cliques);
  for (const Clique& c : cliques) {
    if (!psd_check(principal_submatrix(result.candidate, c), psd_tol)) {
      result.determined_psd = false;
      result.reason = "a fully determined principal submatrix is not positive semidefinite";
      return result;
    }
  }
  result.determined_psd = true;
  result.verdict = Feasibility::kIndeterminate;
  result.reason = "entries with both overlaps zero leave the witness incomplete";
  return result;
}

MonotoneReport check_monotone_pair(const TransformPair& pair) {
  if (!pair.witness) throw PreconditionError("transform pair has no complete witness");
  MonotoneReport r;
  r.det_initial = determinant(pair.gram_initial.matrix()).real();
  r.det_final = determinant(pair.gram_final.matrix()).real();
  r.per_initial = permanent(pair.gram_initial.matrix()).real();
  r.per_final = permanent(pair.gram_final.matrix()).real();
  r.det_holds = r.det_initial >= r.det_final - kMonotoneSlack;
  r.per_holds = r.per_initial <= r.per_final + kMonotoneSlack;
  r.per_asserted = pair.gram_initial.size() <= 3;
  r.ok = r.det_holds && (r.per_holds || !r.per_asserted);
  return r;
}

HadamardMarcusReport check_hadamard_marcus(const GramMatrix& g) {
  HadamardMarcusReport r;
  r.det_value = determinant(g.matrix()).real();
  r.per_value = permanent(g.matrix()).real();
  r.det_ok = r.det_value <= 1.0 + 1e-9;
  r.per_ok = r.per_value >= 1.0 - 1e-9;
  r.det_equality = std::abs(r.det_value - 1.0) <= 1e-9;
  r.per_equality = std::abs(r.per_value - 1.0) <= 1e-9;
  r.diagonal = true;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j && std::abs(g(i, j)) > 1e-9) r.diagonal = false;
  return r;
}

BapatSunderEvaluation bapat_sunder_evaluate(const ComplexMatrix& a, const ComplexMatrix& b,
                                            Summation summation) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("Bapat-Sunder evaluation needs equal square matrices");
  BapatSunderEvaluation e;
  e.lhs = permanent(hadamard_product(a, b), summation).real();
  double diag = 1.0;
  for (std::size_t i = 0; i < b.rows(); ++i) diag *= b(i, i).real();
  e.rhs = permanent(a, summation).real() * diag;
  e.margin = (e.lhs - e.rhs) / std::max(1.0, e.rhs);
  return e;
}

ComplexMatrix random_wishart(std::size_t n, Rng& rng) {
  ComplexMatrix w(n, n);
  for (auto& z : w.data()) z = rng.complex_normal();
  ComplexMatrix a = w.adjoint() * w;
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) a(j, i) = std::conj(a(i, j));
  }
  return a;
}

ComplexMatrix unit_diagonal(const ComplexMatrix& b) {
  ComplexMatrix out(b.rows(), b.cols());
  std::vector<double> scale(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    const double bii = b(i, i).real();
    if (!(bii > 0.0)) throw DomainError("cannot rescale a zero diagonal entry");
    scale[i] = 1.0 / std::sqrt(bii);
  }
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = b(i, j) * scale[i] * scale[j];
  for (std::size_t i = 0; i < b.rows(); ++i) out(i, i) = 1.0;
  return out;
}

ComplexMatrix random_correlation_matrix(std::size_t n, Rng& rng) {
  return unit_diagonal(random_wishart(n, rng));
}

SearchReport bapat_sunder_search(std::size_t n, std::uint64_t trials, const Rng& root,
                                 unsigned threads) {
  if (n < 2) throw DomainError("Bapat-Sunder search needs n >= 2");
  if (n > kMaxPermanentSize) throw CapacityError("matrix too large for exact permanents");

  struct Partial {
    double worst_margin = -std::numeric_limits<double>::infinity();
    std::uint64_t worst_trial = 0;
    std::uint64_t violations = 0;
    std::optional<BapatSunderCounterexample> counterexample;
  };

  constexpr std::uint64_t kShard = 256;
  const std::uint64_t shards = (trials + kShard - 1) / kShard;
  std::vector<Partial> partials(shards);

  auto run_shard = [&](std::uint64_t k) {
    Partial part;
    const std::uint64_t end = std::min(trials, (k + 1) * kShard);
    for (std::uint64_t t = k * kShard; t < end; ++t) {
      Rng rng = root.fork(t);
      const ComplexMatrix a = random_wishart(n, rng);
      const ComplexMatrix b = random_correlation_matrix(n, rng);
      const BapatSunderEvaluation e = bapat_sunder_evaluate(a, b);
      if (e.margin > part.worst_margin) {
        part.worst_margin = e.margin;
        part.worst_trial = t;
      }
      if (e.lhs > e.rhs + 1e-9 * std::max(1.0, e.rhs)) {
        const BapatSunderEvaluation c = bapat_sunder_evaluate(a, b, Summation::kCompensated);
        if (c.lhs > c.rhs + 1e-9 * std::max(1.0, c.rhs)) {
          ++part.violations;
          if (!part.counterexample || c.margin > part.counterexample->margin)
            part.counterexample = BapatSunderCounterexample{a, b, c.lhs, c.rhs, c.margin, t};
        }
      }
    }
    partials[k] = std::move(part);
  };

  threads = std::max(1u, threads);
  if (threads == 1 || shards <= 1) {
    for (std::uint64_t k = 0; k < shards; ++k) run_shard(k);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min<std::uint64_t>(threads, shards); ++t)
      pool.emplace_back([&] {
        for (std::uint64_t k = next++; k < shards; k = next++) run_shard(k);
      });
  }

  SearchReport report;
  report.n = n;
  report.trials = trials;
  report.seed = root.seed();
  report.stream = root.stream();
  report.proven_case = n <= 3;
  report.worst_margin = trials == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  // Strict comparisons in ascending shard order keep the lowest trial on ties.
  for (auto& part : partials) {
    if (part.worst_margin > report.worst_margin) {
      report.worst_margin = part.worst_margin;
      report.worst_trial = part.worst_trial;
    }
    report.violations += part.violations;
    if (part.counterexample &&
        (!report.counterexample || part.counterexample->margin > report.counterexample->margin))
      report.counterexample = std::move(part.counterexample);
  }
  return report;
}

DepolarizingCounterexample depolarizing_counterexample(std::size_t d, std::size_t n) {
  if (d < 1 || n < 1) throw DomainError("counterexample needs d >= 1 and n >= 1");
  // Identical pure inputs: spectrum (1, 0, ..., 0). After full
  // depolarization every particle has spectrum (1/d, ..., 1/d).
  std::vector<double> pure(d, 0.0);
  pure[0] = 1.0;
  const std::vector<double> mixed(d, 1.0 / static_cast<double>(d));

  DepolarizingCounterexample r;
  r.rhs = symmetric_polynomial_trace(pure, n, SymmetricPolynomial::kComplete);
  r.lhs = symmetric_polynomial_trace(mixed, n, SymmetricPolynomial::kComplete);
  r.asserted = d > 1;
  r.decreased = r.lhs < r.rhs;
  return r;
}

}  // namespace qcompare
