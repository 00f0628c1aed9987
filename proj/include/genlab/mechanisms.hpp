// Copyright 2026 The genlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GENLAB_MECHANISMS_HPP_
#define GENLAB_MECHANISMS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "genlab/hypothesis.hpp"
#include "genlab/prob.hpp"
#include "genlab/rng.hpp"

namespace genlab {

// A statistical query: maps an example to a value in [0, 1].
struct Query {
  std::string name;
  std::function<double(const Example&)> eval;

  double mean_on(const Sample& s) const;
  double mean_on(const PopulationDistribution& d) const;
};

// A finite hypothesis class. vc_dim is caller-supplied metadata; nothing
// here computes it.
struct HypothesisClass {
  std::vector<Hypothesis> hypotheses;
  std::optional<int> vc_dim;

  explicit HypothesisClass(std::vector<Hypothesis> hs,
                           std::optional<int> d = std::nullopt);
  std::size_t size() const { return hypotheses.size(); }
};

// A randomized map from samples to outcomes. Outcomes are labels; a
// mechanism with a continuous real range formats its output and leaves
// `range` empty. `exact_pmf` is an optional capability used by the exact
// verifiers. `sufficient_stat` declares exchangeability: samples with
// equal keys must induce identical output distributions, which lets the
// verifiers enumerate multisets instead of ordered tuples.
struct Mechanism {
  std::string name;
  std::optional<std::vector<std::string>> range;
  std::function<std::string(const Sample&, Rng&)> sample_output;
  std::optional<std::function<FinitePmf(const Sample&)>> exact_pmf;
  std::optional<std::function<std::string(const Sample&)>> sufficient_stat;
};

// A randomized map from a population distribution to outcomes; the
// comparison target of the perfect-generalization verifier.
struct Simulator {
  std::string name;
  std::function<FinitePmf(const PopulationDistribution&, std::size_t)>
      exact_pmf;

  std::string sample(const PopulationDistribution& d, std::size_t n,
                     Rng& rng) const;
};

Simulator constant_simulator(const std::string& outcome);

// --- Laplace-mechanism family -------------------------------------------

// Empirical mean of q on s plus Laplace(b) noise.
double laplace_mech_answer(const Sample& s, const Query& q, double b,
                           Rng& rng);

// Noise scale making the Laplace mechanism's output distribution
// (eps, 0)-close to the population-mean simulator except with
// probability beta over the sample: sqrt(ln(1/beta) / (2 n eps^2)).
double laplace_pg_scale(std::size_t n, double eps, double beta);

// Exact closeness of two Laplace(b) distributions whose centers differ
// by |shift|: (|shift| / b, 0).
ClosenessParams laplace_pair_eps(double shift, double b);

// Laplace answer tuned so that noise exceeds tau/2 with probability at
// most beta: b = (tau/2) / ln(1/beta).
double sq_oracle(const Sample& s, const Query& q, double tau, double beta,
                 Rng& rng);

// --- report noisy max -----------------------------------------------------

// Index of the query with the highest Laplace(b)-noised empirical
// average; ties break toward the lowest index.
std::size_t noisy_max(const Sample& s, const std::vector<Query>& queries,
                      double b, Rng& rng);

// Exact argmax distribution over query indices, by quadrature of
// Pr[argmax = j] to absolute tolerance 1e-9.
FinitePmf noisy_max_pmf(const Sample& s, const std::vector<Query>& queries,
                        double b);

// Same computation on explicit means; used both for empirical averages
// and for the population-mean simulator.
FinitePmf noisy_max_pmf_from_means(const std::vector<double>& means, double b);

// Scale for m queries: sqrt(ln(m/beta) / (2 n eps^2)).
double noisy_max_scale(std::size_t m, std::size_t n, double eps, double beta);

// --- exponential-mechanism learner ---------------------------------------

// Pr[h] proportional to
// exp(-sqrt(n) * eps * err(s, h) / sqrt(2 ln(2|H|/beta))).
FinitePmf exp_learner_pmf(const Sample& s, const HypothesisClass& h_class,
                          double eps, double beta);

// Companion simulator using exact population errors in place of
// empirical errors.
Simulator exp_learner_simulator(const HypothesisClass& h_class, double eps,
                                double beta);

// --- small witness mechanisms over bit samples ----------------------------

// 1 iff strictly more than floor(n/2) entries are 1. Deterministic.
Mechanism majority_mech(std::size_t n);

// "Strange" iff the first floor(n/2) entries are all 1 and the rest all
// 0, else "Normal". Deterministic and order-sensitive.
Mechanism strange_normal_mech(std::size_t n);

// Threshold the Laplace-noised mean at 1/2; pure (eps, 0)-DP.
Mechanism noisy_majority_mech(std::size_t n, double eps);

// --- combinators -----------------------------------------------------------

// Compose a deterministic map onto the mechanism's output. The exact
// PMF (when present) is the pushforward; the sufficient statistic is
// inherited.
Mechanism postprocess(const Mechanism& m,
                      const std::function<std::string(const std::string&)>& f,
                      const std::string& map_name);

// M'(S): resample n entries i.i.d. from the empirical distribution of S
// and run m on the resample. The exact PMF averages m's PMFs over the
// resample distribution; the result is always exchangeable.
// `cap` bounds the number of inner PMF evaluations.
Mechanism resample_compile(const Mechanism& m, std::size_t n,
                           std::uint64_t cap = 10'000'000);

// Mechanism wrappers used by harness experiments: run the exponential
// learner as a Mechanism whose outcomes are hypothesis labels.
Mechanism exp_learner_mech(const HypothesisClass& h_class, double eps,
                           double beta);

// Mechanism that leaks its entire input sample in the outcome label.
Mechanism leaky_mech();

}  // namespace genlab

#endif  // GENLAB_MECHANISMS_HPP_
