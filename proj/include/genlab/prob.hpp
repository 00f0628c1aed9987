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

#ifndef GENLAB_PROB_HPP_
#define GENLAB_PROB_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "genlab/rng.hpp"

namespace genlab {

// Probabilities are 64-bit floats. Sums must match 1 within kNormTol;
// closeness comparisons and failure indicators use kCloseTol.
inline constexpr double kNormTol = 1e-9;
inline constexpr double kCloseTol = 1e-12;

// An exact probability mass function over a finite, ordered outcome set.
// Outcome labels are opaque strings and must be pairwise distinct.
class FinitePmf {
 public:
  FinitePmf(std::vector<std::string> outcomes, std::vector<double> probs);

  static FinitePmf point_mass(const std::string& outcome);
  static FinitePmf uniform(std::vector<std::string> outcomes);

  const std::vector<std::string>& outcomes() const { return outcomes_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return outcomes_.size(); }

  // Probability of a label; 0 for labels outside the support.
  double prob_of(const std::string& outcome) const;

 private:
  std::vector<std::string> outcomes_;
  std::vector<double> probs_;
};

// The two knobs of (eps, delta)-closeness: eps is multiplicative (in
// nats), delta is additive slack.
struct ClosenessParams {
  double eps = 0.0;
  double delta = 0.0;

  ClosenessParams() = default;
  ClosenessParams(double eps_in, double delta_in);
};

// A labelled example: a domain point (usually one-dimensional) and a
// 0/1 label. Mechanisms over unlabelled data simply ignore the label.
struct Example {
  std::vector<double> point;
  int label = 0;

  Example() = default;
  Example(double x, int y) : point{x}, label(y) {}
  Example(std::vector<double> x, int y) : point(std::move(x)), label(y) {}

  double x1() const { return point.empty() ? 0.0 : point[0]; }
  bool operator==(const Example& other) const {
    return point == other.point && label == other.label;
  }
};

std::string example_key(const Example& e);

// A finite distribution over labelled examples. The unlabelled marginal
// is obtained by ignoring labels when evaluating hypotheses or queries.
class PopulationDistribution {
 public:
  PopulationDistribution(std::vector<Example> support,
                         std::vector<double> weights);

  static PopulationDistribution uniform(std::vector<Example> support);

  const std::vector<Example>& support() const { return support_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<Example> support_;
  std::vector<double> weights_;
};

// An ordered sample of n >= 1 labelled examples.
struct Sample {
  std::vector<Example> entries;

  explicit Sample(std::vector<Example> e);
  std::size_t n() const { return entries.size(); }
};

// --- (eps, delta)-closeness calculus ------------------------------------

// Smallest delta such that p and q are (eps, delta)-close: the larger of
// the two directed sums of max(P(r) - e^eps * Q(r), 0). Supports are
// unioned with zero fill, so the PMFs need not share an outcome set.
double delta_at_eps(const FinitePmf& p, const FinitePmf& q, double eps);

bool are_close(const FinitePmf& p, const FinitePmf& q,
               const ClosenessParams& c);

// Parameters certifying closeness of the two ends of a chain
// a ~ b ~ c: (eps + eps', 2(delta + delta')), or (eps + eps', 3 delta)
// when the deltas agree. Requires both eps values below ln 2.
ClosenessParams chain_closeness(const ClosenessParams& c1,
                                const ClosenessParams& c2);

// Given (eps, delta)-close y and z, builds a distribution w with
// delta_at_eps(w, z, eps) = 0 and delta_at_eps(w, y, 0) <= delta.
// Construction: clip y into [e^-eps z, e^eps z] pointwise, then rescale
// the clipped-down (or clipped-up) region to renormalize.
FinitePmf intermediate_pmf(const FinitePmf& y, const FinitePmf& z,
                           const ClosenessParams& c);

// Independent product; outcome labels are "(a,b)".
FinitePmf product_pmf(const FinitePmf& p, const FinitePmf& q);

// Sum over r of p(r) * ln(p(r) / q(r)). Errors if p has mass where q
// has none.
double kl_divergence(const FinitePmf& p, const FinitePmf& q);

// Image distribution under a total map on outcomes; colliding images
// merge their mass (first-appearance order).
FinitePmf pushforward(const FinitePmf& p,
                      const std::function<std::string(const std::string&)>& f);

// --- scalar tail and distribution helpers -------------------------------

// Two-sided Hoeffding bound for [0,1]-valued averages: min(1, 2 e^{-2nt^2}).
double hoeffding_tail(std::size_t n, double t);

// CDF of the zero-centered Laplace distribution with scale b > 0.
double laplace_cdf(double x, double b);

// Inverse-CDF sampler for the same distribution.
double laplace_sample(double b, Rng& rng);

// n i.i.d. draws from d; deterministic given the generator state.
Sample draw_sample(const PopulationDistribution& d, std::size_t n, Rng& rng);

// One inverse-CDF draw from a finite PMF.
std::string sample_outcome(const FinitePmf& p, Rng& rng);

}  // namespace genlab

#endif  // GENLAB_PROB_HPP_
