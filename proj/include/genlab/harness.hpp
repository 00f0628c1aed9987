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

#ifndef GENLAB_HARNESS_HPP_
#define GENLAB_HARNESS_HPP_

#include <cstdint>
#include <vector>

#include "genlab/mechanisms.hpp"
#include "genlab/report.hpp"

namespace genlab {

// Monte Carlo acceptance thresholds are always "bound plus three Wilson
// half-widths"; exact arms compare at 1e-9.

// Random realizable threshold tasks: checks that both the learner's own
// accuracy and a fixed post-processing adversary stay within the
// release bound for a single kept example, with failure rate at most
// delta.
ExperimentReport threshold_experiment(std::size_t n, double delta,
                                      std::size_t trials,
                                      std::uint64_t seed);

// Runs the exponential-mechanism learner at the sample size
// ceil(6 / (eps^2 alpha^2) * (ln(2|H|) + ln(1/gamma))^3) and checks the
// rate of outputs whose true error exceeds OPT + alpha. Sizes above
// 10^8 are refused with a sizing report.
ExperimentReport generic_learner_experiment(
    const HypothesisClass& h_class, const PopulationDistribution& d,
    double eps, double alpha, double gamma, std::uint64_t seed,
    std::size_t trials = 10'000);

// For each n, computes the smallest certified PG epsilon of the noisy
// majority against its log-likelihood simulator, then fits the slope of
// log(min eps) against log(n); passes when the slope lands in
// [0.4, 0.6].
ExperimentReport tightness_experiment(double eps, double beta,
                                      const std::vector<std::size_t>& n_list,
                                      std::uint64_t seed);

// Contrasts a mechanism that leaks its sample (with a memorizing
// adversary) against the statistical-query pipeline and the threshold
// compression learner at the same sample size. Passes when the leaky
// arm overfits at least five times as much as either protected arm.
ExperimentReport overfit_experiment(std::size_t n, std::size_t queries,
                                    std::uint64_t seed,
                                    std::size_t trials = 500);

}  // namespace genlab

#endif  // GENLAB_HARNESS_HPP_
