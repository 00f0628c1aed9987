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
//
// Test-only oracles, independent of the library's computation paths.

#ifndef GENLAB_TESTS_ORACLES_HPP_
#define GENLAB_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "genlab/prob.hpp"
#include "genlab/rng.hpp"

namespace genlab::testing {

// Optimal additive slack by explicit maximization over every event
// O of the (unioned) outcome set, in both directions. Exponential in
// the support size; use only on small PMFs.
inline double brute_force_delta(const FinitePmf& p, const FinitePmf& q,
                                double eps) {
  std::vector<std::string> support = p.outcomes();
  for (const auto& o : q.outcomes()) {
    if (std::find(support.begin(), support.end(), o) == support.end()) {
      support.push_back(o);
    }
  }
  const std::size_t m = support.size();
  const double scale = std::exp(eps);
  double worst = 0.0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    double pp = 0.0, qq = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::size_t{1} << i)) {
        pp += p.prob_of(support[i]);
        qq += q.prob_of(support[i]);
      }
    }
    worst = std::max({worst, pp - scale * qq, qq - scale * pp});
  }
  return worst;
}

// Random PMF over k outcomes labeled "o0".."o{k-1}", with probabilities
// drawn from a flat Dirichlet via normalized exponentials.
inline FinitePmf random_pmf(std::size_t k, Rng& rng) {
  std::vector<std::string> outcomes(k);
  std::vector<double> probs(k);
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    outcomes[i] = "o" + std::to_string(i);
    probs[i] = -std::log(uniform01(rng));
    total += probs[i];
  }
  for (double& w : probs) w /= total;
  return FinitePmf(std::move(outcomes), std::move(probs));
}

// A PMF (eps, 0)-close to p in both directions: tilt each probability
// by a factor within [e^{-eps/2}, e^{eps/2}] and renormalize.
inline FinitePmf tilted_pmf(const FinitePmf& p, double eps, Rng& rng) {
  std::vector<double> probs(p.size());
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double tilt = (uniform01(rng) - 0.5) * eps;
    probs[i] = p.probs()[i] * std::exp(tilt);
    total += probs[i];
  }
  for (double& w : probs) w /= total;
  return FinitePmf(p.outcomes(), std::move(probs));
}

// A PMF within total variation t of p: mix with a random direction.
inline FinitePmf mixed_pmf(const FinitePmf& p, double t, Rng& rng) {
  const FinitePmf other = random_pmf(p.size(), rng);
  std::vector<double> probs(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    probs[i] = (1.0 - t) * p.probs()[i] + t * other.probs()[i];
  }
  return FinitePmf(p.outcomes(), std::move(probs));
}

}  // namespace genlab::testing

#endif  // GENLAB_TESTS_ORACLES_HPP_
