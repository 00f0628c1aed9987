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

#include "genlab/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>

#include "genlab/errors.hpp"
#include "genlab/internal/enumerate.hpp"

namespace genlab {

namespace {

// One enumerated point of the sample space d^n: either a single ordered
// sample, or (under exchangeability) a whole multiset class.
struct SamplePoint {
  Sample sample;
  double mass;                        // probability under d^n
  std::vector<std::size_t> counts;    // composition, grouped mode only
};

const std::function<FinitePmf(const Sample&)>& require_exact_pmf(
    const Mechanism& m, const char* who) {
  if (!m.exact_pmf.has_value()) {
    throw NoExactPmfError(std::string(who) + ": mechanism '" + m.name +
                          "' exposes no exact PMF");
  }
  return *m.exact_pmf;
}

void check_cap(double evaluations, std::uint64_t cap, const char* who) {
  if (!(evaluations <= static_cast<double>(cap))) {
    throw EnumerationCapError(std::string(who) +
                              ": enumeration needs about " +
                              std::to_string(evaluations) +
                              " PMF evaluations, cap is " +
                              std::to_string(cap));
  }
}

Sample composition_sample(const std::vector<Example>& values,
                          const std::vector<std::size_t>& counts) {
  std::vector<Example> entries;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t c = 0; c < counts[i]; ++c) entries.push_back(values[i]);
  }
  return Sample(std::move(entries));
}

// Enumerates the weighted sample space, grouped by multiset when
// `grouped` is set. Weights may be empty (DP enumeration over a bare
// domain), in which case masses are reported as zero.
std::vector<SamplePoint> enumerate_space(const std::vector<Example>& values,
                                         const std::vector<double>& weights,
                                         std::size_t n, bool grouped) {
  const std::size_t d = values.size();
  std::vector<double> log_weights(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    log_weights[i] = weights[i] > 0.0
                         ? std::log(weights[i])
                         : -std::numeric_limits<double>::infinity();
  }
  std::vector<SamplePoint> points;
  if (grouped) {
    internal::for_each_composition(
        n, d, [&](const std::vector<std::size_t>& counts) {
          const double mass =
              weights.empty()
                  ? 0.0
                  : std::exp(
                        internal::multinomial_log_mass(counts, log_weights, n));
          points.push_back(
              SamplePoint{composition_sample(values, counts), mass, counts});
        });
  } else {
    internal::for_each_tuple(n, d, [&](const std::vector<std::size_t>& digits) {
      std::vector<Example> entries;
      entries.reserve(n);
      double mass = weights.empty() ? 0.0 : 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        entries.push_back(values[digits[i]]);
        if (!weights.empty()) mass *= weights[digits[i]];
      }
      points.push_back(SamplePoint{Sample(std::move(entries)), mass, {}});
    });
  }
  return points;
}

// Computes PMFs once per key: the sufficient statistic when declared,
// the ordered sample otherwise. Map references stay valid across
// inserts, so callers may hold results from several get() calls.
class PmfCache {
 public:
  PmfCache(const Mechanism& m, const char* who)
      : pmf_(require_exact_pmf(m, who)), stat_(m.sufficient_stat) {}

  const FinitePmf& get(const Sample& s) {
    std::string key;
    if (stat_.has_value()) {
      key = (*stat_)(s);
    } else {
      for (const auto& e : s.entries) {
        key += example_key(e);
        key += ';';
      }
    }
    auto it = by_key_.find(key);
    if (it == by_key_.end()) {
      it = by_key_.emplace(std::move(key), pmf_(s)).first;
    }
    return it->second;
  }

 private:
  std::function<FinitePmf(const Sample&)> pmf_;
  std::optional<std::function<std::string(const Sample&)>> stat_;
  std::map<std::string, FinitePmf> by_key_;
};

}  // namespace

WilsonInterval wilson_ci_95(std::size_t failures, std::size_t trials) {
  if (trials == 0) {
    throw InvalidArgumentError("wilson_ci_95: trials must be >= 1");
  }
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(failures) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double hw =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return WilsonInterval{std::max(0.0, center - hw), std::min(1.0, center + hw)};
}

DpVerdict verify_dp_exact(const Mechanism& m,
                          const std::vector<Example>& domain, std::size_t n,
                          double eps, const VerifyOptions& opts) {
  if (domain.empty()) {
    throw InvalidArgumentError("verify_dp_exact: empty domain");
  }
  if (n == 0) throw InvalidArgumentError("verify_dp_exact: n must be >= 1");
  if (!(eps >= 0.0)) {
    throw InvalidArgumentError("verify_dp_exact: eps must be >= 0");
  }
  PmfCache cache(m, "verify_dp_exact");
  const bool grouped = m.sufficient_stat.has_value();
  const std::size_t d = domain.size();
  const double point_count = grouped ? internal::composition_count(n, d)
                                     : internal::tuple_count(n, d);
  const double pair_count =
      point_count * (grouped ? static_cast<double>(d * (d > 0 ? d - 1 : 0))
                             : static_cast<double>(n * (d - 1)));
  check_cap(std::max(point_count, pair_count), opts.enumeration_cap,
            "verify_dp_exact");

  const auto points = enumerate_space(domain, {}, n, grouped);
  DpVerdict verdict{eps, -1.0, points.front().sample, points.front().sample};

  auto consider = [&](const Sample& a, const Sample& b) {
    const double delta = delta_at_eps(cache.get(a), cache.get(b), eps);
    if (delta > verdict.delta_hat) {
      verdict.delta_hat = delta;
      verdict.witness_a = a;
      verdict.witness_b = b;
    }
  };

  if (grouped) {
    for (const auto& point : points) {
      for (std::size_t a = 0; a < d; ++a) {
        if (point.counts[a] == 0) continue;
        for (std::size_t b = 0; b < d; ++b) {
          if (b == a) continue;
          std::vector<std::size_t> neighbor = point.counts;
          --neighbor[a];
          ++neighbor[b];
          consider(point.sample, composition_sample(domain, neighbor));
        }
      }
    }
  } else {
    for (const auto& point : points) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t v = 0; v < d; ++v) {
          if (example_key(domain[v]) ==
              example_key(point.sample.entries[i])) {
            continue;
          }
          Sample neighbor = point.sample;
          neighbor.entries[i] = domain[v];
          consider(point.sample, neighbor);
        }
      }
    }
  }
  if (verdict.delta_hat < 0.0) verdict.delta_hat = 0.0;  // single-value domain
  return verdict;
}

PgVerdict verify_pg_exact(const Mechanism& m, const Simulator& sim,
                          const PopulationDistribution& d, std::size_t n,
                          double eps, double delta,
                          const VerifyOptions& opts) {
  if (n == 0) throw InvalidArgumentError("verify_pg_exact: n must be >= 1");
  const ClosenessParams target(eps, delta);
  PmfCache cache(m, "verify_pg_exact");
  const bool grouped = m.sufficient_stat.has_value();
  const std::size_t width = d.support().size();
  const double point_count = grouped
                                 ? internal::composition_count(n, width)
                                 : internal::tuple_count(n, width);
  check_cap(point_count, opts.enumeration_cap, "verify_pg_exact");

  const FinitePmf sim_pmf = sim.exact_pmf(d, n);
  PgVerdict verdict;
  verdict.eps = eps;
  verdict.delta = delta;

  std::vector<FailingSample> failing;
  for (const auto& point :
       enumerate_space(d.support(), d.weights(), n, grouped)) {
    const FinitePmf& pmf = cache.get(point.sample);
    const double observed = delta_at_eps(pmf, sim_pmf, eps);
    if (observed > target.delta + kCloseTol) {
      verdict.beta_hat += point.mass;
      failing.push_back(FailingSample{point.sample, point.mass, observed});
    }
  }
  verdict.beta_hat = std::clamp(verdict.beta_hat, 0.0, 1.0);
  std::stable_sort(failing.begin(), failing.end(),
                   [](const FailingSample& a, const FailingSample& b) {
                     return a.mass > b.mass;
                   });
  if (failing.size() > 10) {
    failing.erase(failing.begin() + 10, failing.end());
  }
  verdict.worst_samples = std::move(failing);
  return verdict;
}

double min_eps_pg(const Mechanism& m, const Simulator& sim,
                  const PopulationDistribution& d, std::size_t n, double beta,
                  double delta, const VerifyOptions& opts) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw InvalidArgumentError("min_eps_pg: beta must be in (0, 1)");
  }
  auto passes = [&](double eps) {
    return verify_pg_exact(m, sim, d, n, eps, delta, opts).beta_hat <= beta;
  };
  if (passes(0.0)) return 0.0;
  double lo = 0.0;
  double hi = 50.0;
  if (!passes(hi)) {
    throw UnboundedEpsError("min_eps_pg: no eps <= 50 meets the target beta");
  }
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (passes(mid) ? hi : lo) = mid;
  }
  return hi;
}

RgVerdict verify_rg_mc(const Mechanism& m, const Adversary& adversary,
                       const PopulationDistribution& d, std::size_t n,
                       double alpha, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw InvalidArgumentError("verify_rg_mc: trials >= 1");
  if (!(alpha > 0.0)) throw InvalidArgumentError("verify_rg_mc: alpha > 0");
  RgVerdict verdict;
  verdict.alpha = alpha;
  verdict.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = stream_rng(seed, "rg-trial", t);
    const Sample s = draw_sample(d, n, rng);
    const std::string outcome = m.sample_output(s, rng);
    const Hypothesis h = adversary(outcome);
    const double overfit =
        std::abs(empirical_value(h, s) - true_value(h, d));
    if (overfit > alpha) ++verdict.failures;
  }
  verdict.failure_rate = static_cast<double>(verdict.failures) /
                         static_cast<double>(verdict.trials);
  verdict.wilson = wilson_ci_95(verdict.failures, verdict.trials);
  return verdict;
}

Simulator dp_to_pg_simulator(const Mechanism& m, const VerifyOptions& opts) {
  if (!m.range.has_value()) {
    throw InvalidArgumentError(
        "dp_to_pg_simulator: mechanism must declare a finite range");
  }
  require_exact_pmf(m, "dp_to_pg_simulator");
  const Mechanism mech = m;  // captured by value; mechanisms are immutable
  return Simulator{
      "dp-to-pg:" + m.name,
      [mech, opts](const PopulationDistribution& d, std::size_t n) {
        PmfCache cache(mech, "dp_to_pg_simulator");
        const bool grouped = mech.sufficient_stat.has_value();
        const std::size_t width = d.support().size();
        check_cap(grouped ? internal::composition_count(n, width)
                          : internal::tuple_count(n, width),
                  opts.enumeration_cap, "dp_to_pg_simulator");
        const std::vector<std::string>& range = *mech.range;
        std::vector<double> mean_log(range.size(), 0.0);
        for (const auto& point :
             enumerate_space(d.support(), d.weights(), n, grouped)) {
          const FinitePmf& pmf = cache.get(point.sample);
          for (std::size_t r = 0; r < range.size(); ++r) {
            const double p = pmf.prob_of(range[r]);
            if (!(p > 0.0)) {
              throw DivergenceError(
                  "dp_to_pg_simulator: outcome '" + range[r] +
                  "' has probability 0 on some sample");
            }
            mean_log[r] += point.mass * std::log(p);
          }
        }
        const double peak =
            *std::max_element(mean_log.begin(), mean_log.end());
        std::vector<double> probs(range.size());
        double total = 0.0;
        for (std::size_t r = 0; r < range.size(); ++r) {
          probs[r] = std::exp(mean_log[r] - peak);
          total += probs[r];
        }
        for (double& p : probs) p /= total;
        return FinitePmf(range, probs);
      }};
}

double dp_to_pg_bound(double eps, std::size_t n, std::size_t range_size,
                      double beta) {
  if (!(eps >= 0.0) || n == 0 || range_size == 0 ||
      !(beta > 0.0 && beta < 1.0)) {
    throw InvalidArgumentError("dp_to_pg_bound: arguments out of range");
  }
  return eps * std::sqrt(2.0 * static_cast<double>(n) *
                         std::log(2.0 * static_cast<double>(range_size) /
                                  beta));
}

GroupPrivacyPgParams group_privacy_pg(double eps, double delta,
                                      std::size_t n) {
  if (!(eps >= 0.0) || !(delta >= 0.0 && delta <= 1.0) || n == 0) {
    throw InvalidArgumentError("group_privacy_pg: arguments out of range");
  }
  const double nd = static_cast<double>(n);
  GroupPrivacyPgParams out;
  out.beta = 0.0;
  out.eps = nd * eps;
  out.delta = delta == 0.0 ? 0.0 : nd * std::exp((nd - 1.0) * eps) * delta;
  return out;
}

double pg_to_rg_alpha(std::size_t n, double beta, double eps, double delta) {
  if (n == 0 || !(eps >= 0.0) || !(beta >= 0.0) || !(delta >= 0.0)) {
    throw InvalidArgumentError("pg_to_rg_alpha: arguments out of range");
  }
  if (beta + delta <= 0.0) {
    throw InvalidArgumentError("pg_to_rg_alpha: beta + delta must be > 0");
  }
  return std::sqrt(2.0 / static_cast<double>(n) *
                   std::log(2.0 * (2.0 * eps + 1.0) / (beta + delta)));
}

TwinCheckResult twin_check(const Mechanism& m,
                           const PopulationDistribution& d, std::size_t n,
                           double eps, double delta, double beta,
                           const VerifyOptions& opts) {
  if (!(eps < std::log(2.0))) {
    throw ChainHypothesisError("twin_check: requires eps < ln 2");
  }
  PmfCache cache(m, "twin_check");
  const bool grouped = m.sufficient_stat.has_value();
  const std::size_t width = d.support().size();
  const double point_count = grouped
                                 ? internal::composition_count(n, width)
                                 : internal::tuple_count(n, width);
  check_cap(point_count * point_count, opts.enumeration_cap, "twin_check");

  const auto points = enumerate_space(d.support(), d.weights(), n, grouped);
  std::vector<const FinitePmf*> pmfs;
  pmfs.reserve(points.size());
  for (const auto& point : points) pmfs.push_back(&cache.get(point.sample));

  const ClosenessParams pair_target(2.0 * eps, std::min(3.0 * delta, 1.0));
  double failing_mass = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (!are_close(*pmfs[i], *pmfs[j], pair_target)) {
        failing_mass += points[i].mass * points[j].mass;
      }
    }
  }
  return TwinCheckResult{failing_mass <= 2.0 * beta + kCloseTol,
                         failing_mass};
}

}  // namespace genlab
