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

#ifndef GENLAB_VERIFICATION_HPP_
#define GENLAB_VERIFICATION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "genlab/hypothesis.hpp"
#include "genlab/mechanisms.hpp"
#include "genlab/prob.hpp"

namespace genlab {

// The exact verifiers refuse rather than sample when enumeration would
// exceed this many PMF(-pair) evaluations.
struct VerifyOptions {
  std::uint64_t enumeration_cap = 10'000'000;
};

// Exact differential-privacy certificate: the worst hockey-stick value
// over all pairs of samples differing in one position, with the
// maximizing pair as a witness.
struct DpVerdict {
  double eps;
  double delta_hat;
  Sample witness_a;
  Sample witness_b;
};

struct FailingSample {
  Sample sample;
  double mass;
  double delta;
};

// Exact perfect-generalization certificate: the probability mass of
// samples whose output distribution is not (eps, delta)-close to the
// simulator's.
struct PgVerdict {
  double eps = 0.0;
  double delta = 0.0;
  double beta_hat = 0.0;
  std::vector<FailingSample> worst_samples;  // up to 10, by mass
};

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
  double half_width() const { return 0.5 * (hi - lo); }
};

WilsonInterval wilson_ci_95(std::size_t failures, std::size_t trials);

// Monte Carlo robust-generalization report.
struct RgVerdict {
  double alpha = 0.0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double failure_rate = 0.0;
  WilsonInterval wilson;
};

// Maps a mechanism outcome to the hypothesis a post-processing
// adversary derives from it.
using Adversary = std::function<Hypothesis(const std::string&)>;

// Max over all samples in domain^n, positions, and replacement values
// of delta_at_eps between the output distributions of the two
// neighbors. Enumerates multiset classes instead of ordered samples
// when the mechanism declares a sufficient statistic.
DpVerdict verify_dp_exact(const Mechanism& m,
                          const std::vector<Example>& domain, std::size_t n,
                          double eps, const VerifyOptions& opts = {});

// Sum of Pr[S] over samples S ~ d^n whose output distribution is not
// (eps, delta)-close to the simulator's distribution.
PgVerdict verify_pg_exact(const Mechanism& m, const Simulator& sim,
                          const PopulationDistribution& d, std::size_t n,
                          double eps, double delta,
                          const VerifyOptions& opts = {});

// Smallest eps (bisection to 1e-6) whose PG verdict has
// beta_hat <= beta at the given delta.
double min_eps_pg(const Mechanism& m, const Simulator& sim,
                  const PopulationDistribution& d, std::size_t n, double beta,
                  double delta, const VerifyOptions& opts = {});

// Per trial: draw S ~ d^n, run the mechanism, hand the outcome to the
// adversary, and count a failure when the resulting hypothesis' sample
// average strays from its exact population mean by more than alpha.
RgVerdict verify_rg_mc(const Mechanism& m, const Adversary& adversary,
                       const PopulationDistribution& d, std::size_t n,
                       double alpha, std::size_t trials, std::uint64_t seed);

// Simulator whose PMF is proportional to exp of the exact expected
// log-likelihood of each outcome under S ~ d^n. Requires a finite range
// and strictly positive output probabilities everywhere.
Simulator dp_to_pg_simulator(const Mechanism& m,
                             const VerifyOptions& opts = {});

// PG epsilon certified for an (eps, 0)-DP mechanism:
// eps * sqrt(2 n ln(2 range_size / beta)).
double dp_to_pg_bound(double eps, std::size_t n, std::size_t range_size,
                      double beta);

struct GroupPrivacyPgParams {
  double beta = 0.0;
  double eps = 0.0;
  double delta = 0.0;
};

// PG parameters for an (eps, delta)-DP mechanism via group privacy:
// (0, n eps, n e^{(n-1) eps} delta). Overflow yields +infinity.
GroupPrivacyPgParams group_privacy_pg(double eps, double delta,
                                      std::size_t n);

// Overfit threshold at which a (beta, eps, delta)-PG mechanism is
// robustly generalizing with failure probability 2(beta + delta):
// sqrt((2/n) ln(2(2 eps + 1) / (beta + delta))).
double pg_to_rg_alpha(std::size_t n, double beta, double eps, double delta);

struct TwinCheckResult {
  bool pass = false;
  double failing_mass = 0.0;
};

// Product-measure mass of independent sample pairs whose output
// distributions are not (2 eps, 3 delta)-close; passes when that mass
// is at most 2 beta.
TwinCheckResult twin_check(const Mechanism& m,
                           const PopulationDistribution& d, std::size_t n,
                           double eps, double delta, double beta,
                           const VerifyOptions& opts = {});

}  // namespace genlab

#endif  // GENLAB_VERIFICATION_HPP_
