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

#include "genlab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "genlab/compression.hpp"
#include "genlab/errors.hpp"
#include "genlab/registry.hpp"
#include "genlab/verification.hpp"

namespace genlab {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Realizable threshold task over an evenly spaced grid of domain
// points; labels are 1 at or below the cut.
PopulationDistribution threshold_population(std::size_t grid, double cut) {
  std::vector<Example> support;
  support.reserve(grid);
  for (std::size_t i = 0; i < grid; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(grid);
    support.emplace_back(x, x <= cut ? 1 : 0);
  }
  return PopulationDistribution::uniform(std::move(support));
}

double random_cut(Rng& rng, std::size_t grid) {
  const std::size_t idx = std::min<std::size_t>(
      static_cast<std::size_t>(uniform01(rng) * static_cast<double>(grid)),
      grid - 1);
  return static_cast<double>(idx) / static_cast<double>(grid);
}

}  // namespace

ExperimentReport threshold_experiment(std::size_t n, double delta,
                                      std::size_t trials,
                                      std::uint64_t seed) {
  if (n == 0 || trials == 0 || !(delta > 0.0 && delta < 1.0)) {
    throw InvalidArgumentError("threshold_experiment: arguments out of range");
  }
  const Stopwatch watch;
  const std::size_t grid = 256;
  const double bound = rg_bound_compression(n, 1, delta);
  const bool side_condition =
      static_cast<double>(n) >=
      8.0 * std::log(2.0 * static_cast<double>(n) / delta);

  std::size_t accuracy_failures = 0;
  std::size_t overfit_failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = stream_rng(seed, "threshold-trial", t);
    const PopulationDistribution d =
        threshold_population(grid, random_cut(rng, grid));
    const Sample s = draw_sample(d, n, rng);
    const LearnerResult result =
        run_compression_learner(threshold_scheme(), s);
    if (true_error(result.hypothesis, d) > bound) ++accuracy_failures;

    const double cut = result.hypothesis.is_threshold()
                           ? result.hypothesis.threshold_value()
                           : -1.0;
    const Hypothesis adversary = Hypothesis::custom(
        "above-threshold",
        [cut](const Example& e) { return e.x1() > cut ? 1 : 0; });
    if (std::abs(empirical_value(adversary, s) - true_value(adversary, d)) >
        bound) {
      ++overfit_failures;
    }
  }

  const double accuracy_rate =
      static_cast<double>(accuracy_failures) / static_cast<double>(trials);
  const double overfit_rate =
      static_cast<double>(overfit_failures) / static_cast<double>(trials);
  const double hw_accuracy =
      wilson_ci_95(accuracy_failures, trials).half_width();
  const double hw_overfit =
      wilson_ci_95(overfit_failures, trials).half_width();

  ExperimentReport report;
  report.name = "threshold";
  report.config = {{"n", n},
                   {"delta", delta},
                   {"trials", trials},
                   {"seed", seed},
                   {"grid", grid},
                   {"side_condition_ok", side_condition}};
  report.add_metric("bound", bound);
  report.add_metric("accuracy_failure_rate", accuracy_rate);
  report.add_metric("overfit_failure_rate", overfit_rate);
  report.add_metric("accuracy_wilson_half_width", hw_accuracy);
  report.add_metric("overfit_wilson_half_width", hw_overfit);
  report.pass = accuracy_rate <= delta + 3.0 * hw_accuracy &&
                overfit_rate <= delta + 3.0 * hw_overfit;
  report.runtime_ms = watch.elapsed_ms();
  return report;
}

ExperimentReport generic_learner_experiment(const HypothesisClass& h_class,
                                            const PopulationDistribution& d,
                                            double eps, double alpha,
                                            double gamma, std::uint64_t seed,
                                            std::size_t trials) {
  if (!(eps > 0.0) || !(alpha > 0.0) || !(gamma > 0.0 && gamma < 1.0) ||
      trials == 0) {
    throw InvalidArgumentError(
        "generic_learner_experiment: arguments out of range");
  }
  const Stopwatch watch;
  const double log_term = std::log(2.0 * static_cast<double>(h_class.size())) +
                          std::log(1.0 / gamma);
  const double n_real =
      6.0 / (eps * eps * alpha * alpha) * std::pow(log_term, 3.0);
  ExperimentReport report;
  report.name = "generic-learner";
  report.config = {{"class_size", h_class.size()}, {"eps", eps},
                   {"alpha", alpha},               {"gamma", gamma},
                   {"seed", seed},                 {"trials", trials}};
  if (n_real > 1e8) {
    report.add_metric("required_n", n_real);
    report.add_metric("refused", 1.0);
    report.pass = false;
    report.runtime_ms = watch.elapsed_ms();
    return report;
  }
  const std::size_t n = static_cast<std::size_t>(std::ceil(n_real));
  report.config["n"] = n;

  double opt = 1.0;
  for (const auto& h : h_class.hypotheses) {
    opt = std::min(opt, true_error(h, d));
  }

  std::size_t failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = stream_rng(seed, "generic-trial", t);
    const Sample s = draw_sample(d, n, rng);
    const FinitePmf pmf = exp_learner_pmf(s, h_class, eps, gamma);
    const std::string label = sample_outcome(pmf, rng);
    for (const auto& h : h_class.hypotheses) {
      if (h.label() == label) {
        if (true_error(h, d) > opt + alpha) ++failures;
        break;
      }
    }
  }
  const double rate =
      static_cast<double>(failures) / static_cast<double>(trials);
  const double hw = wilson_ci_95(failures, trials).half_width();
  report.add_metric("n", static_cast<double>(n));
  report.add_metric("opt", opt);
  report.add_metric("failure_rate", rate);
  report.add_metric("wilson_half_width", hw);
  report.pass = rate <= gamma + 3.0 * hw;
  report.runtime_ms = watch.elapsed_ms();
  return report;
}

ExperimentReport tightness_experiment(double eps, double beta,
                                      const std::vector<std::size_t>& n_list,
                                      std::uint64_t seed) {
  if (n_list.size() < 2) {
    throw InvalidArgumentError(
        "tightness_experiment: slope undefined for fewer than two sizes");
  }
  if (!(eps > 0.0) || !(beta > 0.0 && beta < 1.0)) {
    throw InvalidArgumentError("tightness_experiment: arguments out of range");
  }
  const Stopwatch watch;
  const PopulationDistribution d =
      PopulationDistribution::uniform({Example(0.0, 0), Example(1.0, 0)});

  ExperimentReport report;
  report.name = "tightness";
  Json ns = Json::array();
  for (std::size_t n : n_list) ns.push_back(n);
  report.config = {{"eps", eps}, {"beta", beta}, {"ns", ns}, {"seed", seed}};

  // Exact computation throughout; the seed only labels the run.
  std::vector<double> log_n, log_eps;
  for (std::size_t n : n_list) {
    const Mechanism m = noisy_majority_mech(n, eps);
    const Simulator sim = dp_to_pg_simulator(m);
    const double min_eps = min_eps_pg(m, sim, d, n, beta, 0.0);
    report.add_metric("min_eps_" + std::to_string(n), min_eps);
    log_n.push_back(std::log(static_cast<double>(n)));
    log_eps.push_back(std::log(min_eps));
  }

  const std::size_t k = log_n.size();
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    mean_x += log_n[i];
    mean_y += log_eps[i];
  }
  mean_x /= static_cast<double>(k);
  mean_y /= static_cast<double>(k);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sxx += (log_n[i] - mean_x) * (log_n[i] - mean_x);
    sxy += (log_n[i] - mean_x) * (log_eps[i] - mean_y);
  }
  const double slope = sxy / sxx;
  report.add_metric("slope", slope);
  report.pass = slope >= 0.4 && slope <= 0.6;
  report.runtime_ms = watch.elapsed_ms();
  return report;
}

ExperimentReport overfit_experiment(std::size_t n, std::size_t queries,
                                    std::uint64_t seed, std::size_t trials) {
  if (n < 10) {
    throw InvalidArgumentError("overfit_experiment: n must be >= 10");
  }
  if (trials == 0) {
    throw InvalidArgumentError("overfit_experiment: trials must be >= 1");
  }
  const Stopwatch watch;

  // Population for the leaky and query arms: many domain points (so
  // samples rarely repeat a point), both labels equally likely. A label
  // memorizer then agrees with the population exactly half the time,
  // whatever it memorized.
  std::vector<Example> support;
  const int width = 4096;
  for (int x = 0; x < width; ++x) {
    support.emplace_back(static_cast<double>(x) / width, 0);
    support.emplace_back(static_cast<double>(x) / width, 1);
  }
  const PopulationDistribution d =
      PopulationDistribution::uniform(std::move(support));

  const Mechanism leaky = leaky_mech();
  const Adversary memorizer = make_adversary("memorizer", RegistryOptions{});
  const double tau = 0.2, beta = 0.05;

  double leaky_total = 0.0, sq_total = 0.0, compress_total = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = stream_rng(seed, "overfit-trial", t);
    const Sample s = draw_sample(d, n, rng);

    // Arm (a): the outcome encodes S and the adversary replays it.
    const Hypothesis memo = memorizer(leaky.sample_output(s, rng));
    leaky_total += std::abs(empirical_value(memo, s) - true_value(memo, d));

    // Arm (b): pick the statistical query with the highest noisy answer.
    if (queries > 0) {
      std::size_t best = 0;
      double best_answer = 0.0;
      std::vector<double> cuts(queries);
      for (std::size_t j = 0; j < queries; ++j) {
        cuts[j] = uniform01(rng);
        const Query q{"le", [cut = cuts[j]](const Example& e) {
                        return e.x1() <= cut ? 1.0 : 0.0;
                      }};
        const double answer = sq_oracle(s, q, tau, beta, rng);
        if (j == 0 || answer > best_answer) {
          best = j;
          best_answer = answer;
        }
      }
      const Hypothesis chosen =
          Hypothesis::threshold(cuts[best]);
      sq_total += std::abs(empirical_value(chosen, s) - true_value(chosen, d));
    }

    // Arm (c): the threshold compression learner on its own realizable
    // task at the same sample size.
    const PopulationDistribution task =
        threshold_population(256, random_cut(rng, 256));
    const Sample ts = draw_sample(task, n, rng);
    const Hypothesis learned =
        run_compression_learner(threshold_scheme(), ts).hypothesis;
    compress_total +=
        std::abs(empirical_value(learned, ts) - true_value(learned, task));
  }

  const double leaky_mean = leaky_total / static_cast<double>(trials);
  const double sq_mean = sq_total / static_cast<double>(trials);
  const double compress_mean = compress_total / static_cast<double>(trials);

  ExperimentReport report;
  report.name = "overfit";
  report.config = {{"n", n},
                   {"queries", queries},
                   {"seed", seed},
                   {"trials", trials},
                   {"tau", tau},
                   {"beta", beta}};
  report.add_metric("leaky_mean_overfit", leaky_mean);
  report.add_metric("sq_mean_overfit", sq_mean);
  report.add_metric("compression_mean_overfit", compress_mean);
  report.pass = leaky_mean >= 5.0 * sq_mean &&
                leaky_mean >= 5.0 * compress_mean;
  report.runtime_ms = watch.elapsed_ms();
  return report;
}

}  // namespace genlab
