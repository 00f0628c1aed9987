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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "genlab/composition.hpp"
#include "genlab/errors.hpp"
#include "genlab/verification.hpp"

using namespace genlab;

namespace {

PopulationDistribution coin_labels() {
  return PopulationDistribution::uniform({Example(0.0, 0), Example(0.0, 1)});
}

HypothesisClass constant_pair() {
  return HypothesisClass({Hypothesis::constant(0), Hypothesis::constant(1)});
}

Mechanism constant_mech(const std::string& outcome) {
  Mechanism m;
  m.name = "const";
  m.range = std::vector<std::string>{outcome};
  m.sample_output = [outcome](const Sample&, Rng&) { return outcome; };
  m.exact_pmf = [outcome](const Sample&) {
    return FinitePmf::point_mass(outcome);
  };
  m.sufficient_stat = [](const Sample&) { return std::string("-"); };
  return m;
}

}  // namespace

TEST_CASE("compose_basic single mechanism passes through") {
  const HypothesisClass pair = constant_pair();
  const Mechanism m = exp_learner_mech(pair, 0.5, 0.1);
  const ComposedMechanism joint =
      compose_basic({m}, {exp_learner_simulator(pair, 0.5, 0.1)},
                    {{0.1, 0.5}});
  CHECK(joint.params.beta == doctest::Approx(0.1));
  CHECK(joint.params.eps == doctest::Approx(0.5));
  CHECK(joint.params.delta == 0.0);
  CHECK(joint.params.k == 1);
  std::vector<Example> entries = {Example(0.0, 1), Example(0.0, 0)};
  const Sample s{entries};
  CHECK(delta_at_eps((*joint.mechanism.exact_pmf)(s), (*m.exact_pmf)(s),
                     0.0) <= 1e-15);
}

TEST_CASE("compose_basic parameters add up and the product certifies") {
  const HypothesisClass pair = constant_pair();
  const double eps = 0.6, beta = 0.05;
  const Mechanism m = exp_learner_mech(pair, eps, beta);
  const Simulator sim = exp_learner_simulator(pair, eps, beta);

  const ComposedMechanism joint =
      compose_basic({m, m}, {sim, sim}, {{beta, eps}, {beta, eps}});
  CHECK(joint.params.beta == doctest::Approx(2.0 * beta));
  CHECK(joint.params.eps == doctest::Approx(2.0 * eps));
  CHECK(joint.params.k == 2);

  // Exact enumeration certifies the summed parameters on a tiny
  // instance.
  const PgVerdict v =
      verify_pg_exact(joint.mechanism, joint.simulator, coin_labels(), 5,
                      joint.params.eps, 0.0);
  CHECK(v.beta_hat <= joint.params.beta);

  // The product PMF multiplies marginals outcome by outcome.
  std::vector<Example> entries = {Example(0.0, 1), Example(0.0, 1),
                                  Example(0.0, 0)};
  const Sample s{entries};
  const FinitePmf marginal = (*m.exact_pmf)(s);
  const FinitePmf product = (*joint.mechanism.exact_pmf)(s);
  CHECK(product.prob_of("(const(0),const(1))") ==
        doctest::Approx(marginal.probs()[0] * marginal.probs()[1])
            .epsilon(1e-12));
}

TEST_CASE("compose_basic with a constant mechanism adds nothing") {
  const HypothesisClass pair = constant_pair();
  const Mechanism m = exp_learner_mech(pair, 0.5, 0.1);
  const Simulator sim = exp_learner_simulator(pair, 0.5, 0.1);
  const ComposedMechanism joint =
      compose_basic({m, constant_mech("c")}, {sim, constant_simulator("c")},
                    {{0.1, 0.5}, {0.0, 0.0}});
  CHECK(joint.params.beta == doctest::Approx(0.1));
  CHECK(joint.params.eps == doctest::Approx(0.5));
  const PgVerdict v = verify_pg_exact(joint.mechanism, joint.simulator,
                                      coin_labels(), 4, 0.5, 0.0);
  CHECK(v.beta_hat <= 0.1);
}

TEST_CASE("compose_basic rejects mismatched lists") {
  const Mechanism m = constant_mech("c");
  CHECK_THROWS_AS(compose_basic({m, m}, {constant_simulator("c")},
                                {{0.0, 0.0}, {0.0, 0.0}}),
                  InvalidArgumentError);
  CHECK_THROWS_AS(compose_basic({}, {}, {}), InvalidArgumentError);
}

TEST_CASE("compose_basic sampler runs both mechanisms on the same sample") {
  const Mechanism m = noisy_majority_mech(4, 0.8);
  const ComposedMechanism joint = compose_basic(
      {m, m}, {dp_to_pg_simulator(m), dp_to_pg_simulator(m)},
      {{0.05, 0.8}, {0.05, 0.8}});
  std::vector<Example> bits = {Example(1.0, 0), Example(1.0, 0),
                               Example(1.0, 0), Example(0.0, 0)};
  Rng rng = seeded_rng(61);
  const std::string out = joint.mechanism.sample_output(Sample(bits), rng);
  CHECK(out.front() == '(');
  CHECK(out.find(',') != std::string::npos);
  // Frequencies match the product PMF.
  const FinitePmf pmf = (*joint.mechanism.exact_pmf)(Sample(bits));
  std::map<std::string, int> counts;
  const int draws = 50'000;
  for (int i = 0; i < draws; ++i) {
    ++counts[joint.mechanism.sample_output(Sample(bits), rng)];
  }
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    const double p = pmf.probs()[i];
    const double freq =
        counts[pmf.outcomes()[i]] / static_cast<double>(draws);
    CHECK(std::abs(freq - p) <=
          4.0 * std::sqrt(std::max(p * (1.0 - p), 1e-5) / draws));
  }
}

TEST_CASE("advanced_bound formula and asymptotics") {
  const ComposedPgParams v = advanced_bound(1, 0.1, 0.0, 0.05);
  CHECK(v.eps == doctest::Approx(std::sqrt(2.0 * std::log(20.0)) * 0.1 +
                                 0.1 * (std::exp(0.1) - 1.0))
                     .epsilon(1e-14));
  CHECK(v.eps == doctest::Approx(0.25529).epsilon(1e-4));
  CHECK(v.delta == doctest::Approx(0.05));

  // Vanishing eps vanishes.
  CHECK(advanced_bound(10, 1e-9, 0.0, 0.05).eps < 1e-7);

  // sqrt(k) growth for small eps: quadrupling k doubles the leading
  // term.
  const double e1 = advanced_bound(10, 1e-4, 0.0, 0.05).eps;
  const double e4 = advanced_bound(40, 1e-4, 0.0, 0.05).eps;
  CHECK(e4 / e1 == doctest::Approx(2.0).epsilon(1e-3));

  // Dominates the trivial bound at k = 1 for delta' <= e^{-1/2}.
  for (double eps : {0.05, 0.2, 0.5}) {
    CHECK(advanced_bound(1, eps, 0.0, std::exp(-0.5)).eps >= eps);
  }

  // Total delta accumulates linearly.
  const ComposedPgParams w = advanced_bound(5, 0.1, 0.01, 0.02);
  CHECK(w.delta == doctest::Approx(0.07));

  CHECK_THROWS_AS(advanced_bound(0, 0.1, 0.0, 0.05), InvalidArgumentError);
  CHECK_THROWS_AS(advanced_bound(3, 0.1, 0.0, 1.5), InvalidArgumentError);
}
