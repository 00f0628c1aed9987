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

#include "genlab/composition.hpp"

#include <cmath>

#include "genlab/errors.hpp"

namespace genlab {

ComposedMechanism compose_basic(const std::vector<Mechanism>& mechs,
                                const std::vector<Simulator>& sims,
                                const std::vector<PgRated>& params) {
  if (mechs.empty()) {
    throw InvalidArgumentError("compose_basic: needs at least one mechanism");
  }
  if (mechs.size() != sims.size() || mechs.size() != params.size()) {
    throw InvalidArgumentError("compose_basic: list length mismatch");
  }

  ComposedMechanism out;
  out.mechanism = mechs.front();
  out.simulator = sims.front();
  out.params = ComposedPgParams{params.front().beta, params.front().eps, 0.0,
                                mechs.size()};
  for (std::size_t i = 1; i < mechs.size(); ++i) {
    const Mechanism left = out.mechanism;
    const Mechanism right = mechs[i];
    Mechanism joint;
    joint.name = "compose(" + left.name + "," + right.name + ")";
    if (left.range.has_value() && right.range.has_value()) {
      std::vector<std::string> range;
      for (const auto& a : *left.range) {
        for (const auto& b : *right.range) {
          range.push_back("(" + a + "," + b + ")");
        }
      }
      joint.range = std::move(range);
    }
    joint.sample_output = [left, right](const Sample& s, Rng& rng) {
      const std::string a = left.sample_output(s, rng);
      const std::string b = right.sample_output(s, rng);
      return "(" + a + "," + b + ")";
    };
    if (left.exact_pmf.has_value() && right.exact_pmf.has_value()) {
      auto lp = *left.exact_pmf;
      auto rp = *right.exact_pmf;
      joint.exact_pmf = [lp, rp](const Sample& s) {
        return product_pmf(lp(s), rp(s));
      };
    }
    if (left.sufficient_stat.has_value() &&
        right.sufficient_stat.has_value()) {
      auto ls = *left.sufficient_stat;
      auto rs = *right.sufficient_stat;
      joint.sufficient_stat = [ls, rs](const Sample& s) {
        return ls(s) + "|" + rs(s);
      };
    }
    out.mechanism = std::move(joint);

    const Simulator left_sim = out.simulator;
    const Simulator right_sim = sims[i];
    out.simulator = Simulator{
        "compose(" + left_sim.name + "," + right_sim.name + ")",
        [left_sim, right_sim](const PopulationDistribution& d,
                              std::size_t n) {
          return product_pmf(left_sim.exact_pmf(d, n),
                             right_sim.exact_pmf(d, n));
        }};

    out.params.beta += params[i].beta;
    out.params.eps += params[i].eps;
  }
  return out;
}

ComposedPgParams advanced_bound(std::size_t k, double eps, double delta,
                                double delta_prime) {
  if (k == 0 || !(eps > 0.0) || !(delta >= 0.0) ||
      !(delta_prime > 0.0 && delta_prime < 1.0)) {
    throw InvalidArgumentError("advanced_bound: arguments out of range");
  }
  const double kd = static_cast<double>(k);
  ComposedPgParams out;
  out.k = k;
  out.eps = std::sqrt(2.0 * kd * std::log(1.0 / delta_prime)) * eps +
            kd * eps * (std::exp(eps) - 1.0);
  out.delta = kd * delta + delta_prime;
  return out;
}

}  // namespace genlab
