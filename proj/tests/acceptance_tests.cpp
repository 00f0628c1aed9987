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
// Acceptance suite: every guarantee the library certifies, exercised
// end to end at desk scale. Exact arms compare at fixed tolerances;
// Monte Carlo arms accept at "bound + 3 Wilson half-widths". One
// pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "genlab/composition.hpp"
#include "genlab/compression.hpp"
#include "genlab/harness.hpp"
#include "genlab/registry.hpp"
#include "genlab/verification.hpp"
#include "oracles.hpp"

using namespace genlab;
using genlab::testing::brute_force_delta;
using genlab::testing::mixed_pmf;
using genlab::testing::random_pmf;
using genlab::testing::tilted_pmf;

namespace {

int g_failures = 0;
int g_index = 0;

void run_criterion(const std::string& title,
                   const std::function<bool(std::string&)>& body) {
  ++g_index;
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (!ok) ++g_failures;
  std::printf("[%2d/15] %s  %s (%s; %.2fs)\n", g_index,
              ok ? "PASS" : "FAIL", title.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
}

PopulationDistribution uniform_bits() {
  return PopulationDistribution::uniform({Example(0.0, 0), Example(1.0, 0)});
}

PopulationDistribution coin_labels() {
  return PopulationDistribution::uniform({Example(0.0, 0), Example(0.0, 1)});
}

PopulationDistribution threshold_population(std::size_t grid, double cut) {
  std::vector<Example> support;
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

std::size_t ones_in(const Sample& s) {
  std::size_t ones = 0;
  for (const auto& e : s.entries) ones += e.x1() == 1.0 ? 1 : 0;
  return ones;
}

char buffer[256];

// 1. The closed-form hockey-stick divergence equals brute-force subset
//    maximization.
bool hockey_stick_oracle(std::string& detail) {
  Rng rng = seeded_rng(101);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t k = 2 + static_cast<std::size_t>(uniform01(rng) * 5.0);
    const FinitePmf p = random_pmf(k, rng);
    const FinitePmf q =
        trial % 3 == 0 ? random_pmf(k, rng) : mixed_pmf(p, 0.4, rng);
    for (double eps : {0.0, 0.3, 1.0}) {
      worst = std::max(worst, std::abs(delta_at_eps(p, q, eps) -
                                       brute_force_delta(p, q, eps)));
    }
  }
  std::snprintf(buffer, sizeof(buffer),
                "500 pairs x 3 eps, max deviation %.2e", worst);
  detail = buffer;
  return worst <= 1e-12;
}

// 2. Chained closeness parameters certify the endpoints of two-hop
//    chains.
bool structural_chaining(std::string& detail) {
  Rng rng = seeded_rng(102);
  int certified = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const FinitePmf b = random_pmf(5, rng);
    const double eps1 = uniform01(rng) * 0.69;
    const double eps2 = uniform01(rng) * 0.69;
    const FinitePmf a = mixed_pmf(tilted_pmf(b, eps1, rng), 0.06, rng);
    const FinitePmf c = mixed_pmf(tilted_pmf(b, eps2, rng), 0.06, rng);
    const ClosenessParams c1(eps1, delta_at_eps(a, b, eps1));
    const ClosenessParams c2(eps2, delta_at_eps(b, c, eps2));
    if (are_close(a, c, chain_closeness(c1, c2))) ++certified;
  }
  std::snprintf(buffer, sizeof(buffer), "%d/200 triples certified",
                certified);
  detail = buffer;
  return certified == 200;
}

// 3. The strange/normal mechanism is exactly (2^-n, 0, 0)-perfectly
//    generalizing and maximally non-private.
bool strange_normal_witness(std::string& detail) {
  const Mechanism m = strange_normal_mech(8);
  const PgVerdict pg = verify_pg_exact(m, constant_simulator("Normal"),
                                       uniform_bits(), 8, 0.0, 0.0);
  const DpVerdict dp = verify_dp_exact(
      m, {Example(0.0, 0), Example(1.0, 0)}, 8, 10.0);
  std::snprintf(buffer, sizeof(buffer), "beta_hat = %.17g, delta_hat = %g",
                pg.beta_hat, dp.delta_hat);
  detail = buffer;
  return pg.beta_hat == 0.00390625 && dp.delta_hat == 1.0;
}

// 4. Majority is maximally non-private at every n, yet robustly
//    generalizing at the description-length rate.
bool majority_separation(std::string& detail) {
  const std::vector<Example> domain = {Example(0.0, 0), Example(1.0, 0)};
  for (std::size_t n = 3; n <= 9; ++n) {
    const DpVerdict v = verify_dp_exact(majority_mech(n), domain, n, 10.0);
    if (v.delta_hat != 1.0) {
      detail = "delta_hat below 1 at n = " + std::to_string(n);
      return false;
    }
    const std::size_t a = ones_in(v.witness_a);
    const std::size_t b = ones_in(v.witness_b);
    if (std::max(a, b) != n / 2 + 1 || std::min(a, b) != n / 2) {
      detail = "witness is not the one-extra-one pair at n = " +
               std::to_string(n);
      return false;
    }
  }

  const RegistryOptions reg;
  const Adversary identity = make_adversary("identity", reg);
  double worst_margin = 1.0;
  for (std::size_t n = 3; n <= 9; ++n) {
    const double alpha = rg_bound_description(2, n, 0.05);
    const RgVerdict v = verify_rg_mc(majority_mech(n), identity,
                                     uniform_bits(), n, alpha, 10'000, 104);
    const double budget = 0.05 + 3.0 * v.wilson.half_width();
    worst_margin = std::min(worst_margin, budget - v.failure_rate);
    if (v.failure_rate > budget) {
      detail = "overfit rate " + std::to_string(v.failure_rate) +
               " at n = " + std::to_string(n);
      return false;
    }
  }
  std::snprintf(buffer, sizeof(buffer),
                "delta_hat = 1 for n = 3..9; min RG margin %.4f",
                worst_margin);
  detail = buffer;
  return true;
}

// 5. The exponential-mechanism learner is (beta, eps, 0)-perfectly
//    generalizing, certified by exact enumeration.
bool exp_learner_pg(std::string& detail) {
  const HypothesisClass pair(
      {Hypothesis::constant(0), Hypothesis::constant(1)});
  const double eps = 1.0, beta = 0.1;
  const PgVerdict v = verify_pg_exact(
      exp_learner_mech(pair, eps, beta),
      exp_learner_simulator(pair, eps, beta), coin_labels(), 6, eps, 0.0);
  std::snprintf(buffer, sizeof(buffer), "beta_hat = %.3g <= %.3g",
                v.beta_hat, beta);
  detail = buffer;
  return v.beta_hat <= beta;
}

// 6. Resampling compiles the perfectly generalizing strange/normal
//    witness into a differentially private mechanism.
bool resample_compiler(std::string& detail) {
  const Mechanism compiled = resample_compile(strange_normal_mech(6), 6);
  const DpVerdict v = verify_dp_exact(
      compiled, {Example(0.0, 0), Example(1.0, 0)}, 6, 0.0);
  std::snprintf(buffer, sizeof(buffer),
                "exact delta_hat = %.17g (= 387/46656) <= 0.03125",
                v.delta_hat);
  detail = buffer;
  return v.delta_hat <= 2.0 * std::pow(2.0, -6.0) &&
         std::abs(v.delta_hat - 387.0 / 46656.0) <= 1e-12;
}

// 7. A pure-DP mechanism is perfectly generalizing against its
//    log-likelihood simulator at the closed-form epsilon.
bool dp_to_pg_conversion(std::string& detail) {
  const Mechanism m = noisy_majority_mech(10, 0.2);
  const double eps_pg = dp_to_pg_bound(0.2, 10, 2, 0.05);
  const PgVerdict v = verify_pg_exact(m, dp_to_pg_simulator(m),
                                      uniform_bits(), 10, eps_pg, 0.0);
  std::snprintf(buffer, sizeof(buffer),
                "eps' = %.4f, beta_hat = %.3g <= 0.05", eps_pg, v.beta_hat);
  detail = buffer;
  return v.beta_hat <= 0.05;
}

// 8. The smallest certified PG epsilon of the noisy majority grows like
//    sqrt(n).
bool sqrt_n_tightness(std::string& detail) {
  const ExperimentReport report =
      tightness_experiment(0.2, 0.05, {16, 32, 64, 128, 256}, 7);
  std::snprintf(buffer, sizeof(buffer), "fitted slope %.4f in [0.4, 0.6]",
                report.metric("slope"));
  detail = buffer;
  return report.pass;
}

// 9. The size-1 threshold compression learner is accurate and robustly
//    generalizing at the selection-release bound.
bool compression_rg(std::string& detail) {
  const ExperimentReport report = threshold_experiment(1000, 0.05, 10'000, 9);
  std::snprintf(buffer, sizeof(buffer),
                "bound %.4f, accuracy failures %.4f, overfit failures %.4f",
                report.metric("bound"),
                report.metric("accuracy_failure_rate"),
                report.metric("overfit_failure_rate"));
  detail = buffer;
  return report.pass;
}

// 10. Five adaptively chosen threshold learners stay within the summed
//     selection bound.
bool adaptive_compression(std::string& detail) {
  const std::size_t n = 2000, m = 5, trials = 10'000;
  const double delta = 0.05;
  const double bound = rg_bound_compression(n, m, delta);
  std::size_t failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = stream_rng(110, "adaptive-trial", t);
    const PopulationDistribution d =
        threshold_population(256, 0.3 + 0.6 * random_cut(rng, 256));
    const Sample s = draw_sample(d, n, rng);
    // Round i keeps the largest positive strictly below the previous
    // round's threshold.
    const auto chooser = [](const std::vector<Hypothesis>& history) {
      const double bound_x =
          history.empty()
              ? std::numeric_limits<double>::infinity()
              : (history.back().is_threshold()
                     ? history.back().threshold_value()
                     : -std::numeric_limits<double>::infinity());
      CompressionScheme scheme = threshold_scheme();
      scheme.compress = [bound_x](const Sample& input) {
        bool found = false;
        Example best;
        for (const auto& e : input.entries) {
          if (e.label == 1 && e.x1() < bound_x &&
              (!found || e.x1() > best.x1())) {
            found = true;
            best = e;
          }
        }
        if (found) return std::vector<Example>{best};
        return std::vector<Example>{};
      };
      return scheme;
    };
    const SessionResult session = adaptive_session(s, chooser, m);

    // Post-processing adversary: the band between the last and first
    // released thresholds.
    double hi = -1.0, lo = -1.0;
    if (session.rounds.front().hypothesis.is_threshold()) {
      hi = session.rounds.front().hypothesis.threshold_value();
    }
    if (session.rounds.back().hypothesis.is_threshold()) {
      lo = session.rounds.back().hypothesis.threshold_value();
    }
    const Hypothesis band = Hypothesis::custom(
        "band", [lo, hi](const Example& e) {
          return e.x1() > lo && e.x1() <= hi ? 1 : 0;
        });
    if (std::abs(empirical_value(band, s) - true_value(band, d)) > bound) {
      ++failures;
    }
  }
  const double rate =
      static_cast<double>(failures) / static_cast<double>(trials);
  const double budget =
      delta + 3.0 * wilson_ci_95(failures, trials).half_width();
  std::snprintf(buffer, sizeof(buffer),
                "bound %.4f, failure rate %.4f <= %.4f", bound, rate, budget);
  detail = buffer;
  return rate <= budget;
}

// 11. Basic composition: the product of two learners is certified at
//     the summed parameters by exact enumeration.
bool basic_composition(std::string& detail) {
  const HypothesisClass pair(
      {Hypothesis::constant(0), Hypothesis::constant(1)});
  const double eps = 0.6, beta = 0.05;
  const Mechanism m = exp_learner_mech(pair, eps, beta);
  const Simulator sim = exp_learner_simulator(pair, eps, beta);
  const ComposedMechanism joint =
      compose_basic({m, m}, {sim, sim}, {{beta, eps}, {beta, eps}});
  const PgVerdict v =
      verify_pg_exact(joint.mechanism, joint.simulator, coin_labels(), 5,
                      joint.params.eps, 0.0);
  std::snprintf(buffer, sizeof(buffer),
                "(2 beta, 2 eps) = (%.2f, %.2f), beta_hat = %.3g",
                joint.params.beta, joint.params.eps, v.beta_hat);
  detail = buffer;
  return joint.params.beta == 2.0 * beta && joint.params.eps == 2.0 * eps &&
         v.beta_hat <= joint.params.beta;
}

// 12. The intermediate-distribution construction and the KL inequality
//     hold exactly on random instances.
bool appendix_lemmas(std::string& detail) {
  Rng rng = seeded_rng(112);
  for (int trial = 0; trial < 200; ++trial) {
    const FinitePmf z = random_pmf(8, rng);
    const double eps = uniform01(rng) * 0.8;
    const FinitePmf y = mixed_pmf(tilted_pmf(z, 3.0 * eps, rng), 0.1, rng);
    const ClosenessParams c(
        eps, std::min(1.0, delta_at_eps(y, z, eps) + 0.01));
    const FinitePmf w = intermediate_pmf(y, z, c);
    if (delta_at_eps(w, z, c.eps) > 1e-12) {
      detail = "intermediate lost (eps, 0)-closeness to z";
      return false;
    }
    if (delta_at_eps(w, y, 0.0) > c.delta + 1e-12) {
      detail = "intermediate strayed beyond delta from y";
      return false;
    }
  }
  const double eps = 0.3;
  const double kl_bound = eps * (std::exp(eps) - 1.0);
  double worst_kl = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const FinitePmf p = random_pmf(6, rng);
    const FinitePmf q = tilted_pmf(p, eps, rng);
    if (delta_at_eps(p, q, eps) != 0.0 || delta_at_eps(q, p, eps) != 0.0) {
      detail = "tilted pair is not (eps, 0)-close";
      return false;
    }
    worst_kl = std::max(worst_kl, kl_divergence(p, q));
  }
  std::snprintf(buffer, sizeof(buffer),
                "200 intermediate pairs exact; max KL %.4f <= %.4f",
                worst_kl, kl_bound);
  detail = buffer;
  return worst_kl <= kl_bound + 1e-12;
}

// 13. The generic agnostic learner is accurate at the prescribed sample
//     size.
bool generic_learner_accuracy(std::string& detail) {
  const HypothesisClass pair(
      {Hypothesis::constant(0), Hypothesis::constant(1)});
  const PopulationDistribution d = PopulationDistribution(
      {Example(0.0, 0), Example(0.0, 1)}, {0.75, 0.25});
  const ExperimentReport report =
      generic_learner_experiment(pair, d, 1.0, 0.3, 0.1, 113, 10'000);
  std::snprintf(buffer, sizeof(buffer),
                "n = %.0f, failure rate %.4f <= 0.1 + 3hw",
                report.metric("n"), report.metric("failure_rate"));
  detail = buffer;
  return report.pass;
}

// 14. Post-processing never worsens any verified DP or PG parameter.
bool postprocessing_closure(std::string& detail) {
  struct NamedMap {
    std::string name;
    std::function<std::string(const std::string&)> fn;
  };
  const std::vector<NamedMap> maps = {
      {"identity", [](const std::string& o) { return o; }},
      {"constant", [](const std::string&) { return std::string("x"); }},
      {"first-char", [](const std::string& o) { return o.substr(0, 1); }}};

  const HypothesisClass pair(
      {Hypothesis::constant(0), Hypothesis::constant(1)});
  const std::vector<Query> queries = {
      {"mean", [](const Example& e) { return e.x1(); }},
      {"one-minus-mean", [](const Example& e) { return 1.0 - e.x1(); }}};
  Mechanism nmax;
  nmax.name = "noisy-max";
  nmax.range = std::vector<std::string>{"0", "1"};
  nmax.sample_output = [queries](const Sample& s, Rng& rng) {
    return std::to_string(noisy_max(s, queries, 0.3, rng));
  };
  nmax.exact_pmf = [queries](const Sample& s) {
    return noisy_max_pmf(s, queries, 0.3);
  };
  const Simulator nmax_sim{
      "noisy-max-sim",
      [queries](const PopulationDistribution& dd, std::size_t) {
        std::vector<double> means;
        for (const auto& q : queries) means.push_back(q.mean_on(dd));
        return noisy_max_pmf_from_means(means, 0.3);
      }};

  std::vector<Mechanism> mechs = {
      majority_mech(4), strange_normal_mech(4), noisy_majority_mech(4, 0.6),
      exp_learner_mech(pair, 0.8, 0.2), nmax};
  std::vector<Simulator> sims = {
      constant_simulator("0"), constant_simulator("Normal"),
      dp_to_pg_simulator(mechs[2]), exp_learner_simulator(pair, 0.8, 0.2),
      nmax_sim};
  const std::vector<Example> bits = {Example(0.0, 0), Example(1.0, 0)};
  const std::vector<Example> coins = {Example(0.0, 0), Example(0.0, 1)};

  int comparisons = 0;
  for (std::size_t i = 0; i < mechs.size(); ++i) {
    const std::vector<Example>& domain = i == 3 ? coins : bits;
    const PopulationDistribution d =
        PopulationDistribution::uniform(domain);
    for (const auto& map : maps) {
      const Mechanism post = postprocess(mechs[i], map.fn, map.name);
      const Simulator post_sim{
          "post", [&sims, i, &map](const PopulationDistribution& dd,
                                   std::size_t nn) {
            return pushforward(sims[i].exact_pmf(dd, nn), map.fn);
          }};
      for (double eps : {0.0, 0.5}) {
        const double base =
            verify_dp_exact(mechs[i], domain, 4, eps).delta_hat;
        const double mapped =
            verify_dp_exact(post, domain, 4, eps).delta_hat;
        ++comparisons;
        if (mapped > base + 1e-12) {
          detail = mechs[i].name + " DP worsened under " + map.name;
          return false;
        }
      }
      for (double eps : {0.0, 0.7}) {
        const double base =
            verify_pg_exact(mechs[i], sims[i], d, 4, eps, 0.0).beta_hat;
        const double mapped =
            verify_pg_exact(post, post_sim, d, 4, eps, 0.0).beta_hat;
        ++comparisons;
        if (mapped > base + 1e-12) {
          detail = mechs[i].name + " PG worsened under " + map.name;
          return false;
        }
      }
    }
  }
  std::snprintf(buffer, sizeof(buffer),
                "%d exact comparisons across 5 mechanisms x 3 maps",
                comparisons);
  detail = buffer;
  return true;
}

// 15. A perfectly generalizing learner is robustly generalizing at the
//     converted overfit threshold.
bool pg_to_rg(std::string& detail) {
  const std::size_t n = 100;
  const double eps = 0.5, beta = 0.05, delta = 0.0;
  // Threshold indicators over a ten-point domain with sloped label
  // noise, so hypothesis values genuinely fluctuate across samples.
  std::vector<Hypothesis> hypotheses;
  for (double cut : {0.25, 0.45, 0.65, 0.85}) {
    hypotheses.push_back(Hypothesis::threshold(cut));
  }
  const HypothesisClass h_class(hypotheses);
  std::vector<Example> support;
  std::vector<double> weights;
  for (int i = 0; i < 10; ++i) {
    const double x = i / 10.0;
    const double p_one = 0.2 + 0.06 * i;
    support.emplace_back(x, 1);
    weights.push_back(p_one / 10.0);
    support.emplace_back(x, 0);
    weights.push_back((1.0 - p_one) / 10.0);
  }
  const PopulationDistribution d(support, weights);

  const Mechanism m = exp_learner_mech(h_class, eps, beta);
  const double alpha = pg_to_rg_alpha(n, beta, eps, delta);
  const Adversary member = [&h_class](const std::string& label) {
    for (const auto& h : h_class.hypotheses) {
      if (h.label() == label) return h;
    }
    return Hypothesis::constant(0);
  };
  const RgVerdict v = verify_rg_mc(m, member, d, n, alpha, 10'000, 115);
  const double budget =
      2.0 * (beta + delta) + 3.0 * v.wilson.half_width();
  std::snprintf(buffer, sizeof(buffer),
                "alpha = %.4f, failure rate %.4f <= %.4f", alpha,
                v.failure_rate, budget);
  detail = buffer;
  return v.failure_rate <= budget;
}

}  // namespace

int main() {
  std::printf("acceptance suite: exact certification at desk scale plus "
              "Monte Carlo property checks\n");
  run_criterion("hockey-stick oracle equivalence", hockey_stick_oracle);
  run_criterion("closeness chaining certifies two-hop chains",
                structural_chaining);
  run_criterion("strange/normal: perfectly generalizing, maximally "
                "non-private", strange_normal_witness);
  run_criterion("majority: non-private yet robustly generalizing",
                majority_separation);
  run_criterion("exponential learner is perfectly generalizing",
                exp_learner_pg);
  run_criterion("resampling compiles PG into DP", resample_compiler);
  run_criterion("pure DP converts to PG at the closed-form epsilon",
                dp_to_pg_conversion);
  run_criterion("sqrt(n) growth of the forced PG epsilon", sqrt_n_tightness);
  run_criterion("threshold compression learner: accuracy and RG",
                compression_rg);
  run_criterion("adaptive composition of compression learners",
                adaptive_compression);
  run_criterion("basic composition adds PG parameters", basic_composition);
  run_criterion("intermediate distribution and KL bound", appendix_lemmas);
  run_criterion("generic agnostic learner accuracy", generic_learner_accuracy);
  run_criterion("post-processing closure of verified parameters",
                postprocessing_closure);
  run_criterion("PG learners are robustly generalizing", pg_to_rg);

  if (g_failures == 0) {
    std::printf("all 15 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failures);
  return 1;
}
