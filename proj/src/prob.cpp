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

#include "genlab/prob.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "genlab/errors.hpp"

namespace genlab {

namespace {

void check_weights(const std::vector<double>& probs, std::size_t n_labels,
                   const char* what) {
  if (probs.size() != n_labels) {
    throw InvalidArgumentError(std::string(what) +
                               ": outcome/probability length mismatch");
  }
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= -kCloseTol)) {
      throw InvalidArgumentError(std::string(what) +
                                 ": negative probability");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kNormTol) {
    throw InvalidArgumentError(std::string(what) +
                               ": probabilities sum to " +
                               std::to_string(total));
  }
}

}  // namespace

FinitePmf::FinitePmf(std::vector<std::string> outcomes,
                     std::vector<double> probs)
    : outcomes_(std::move(outcomes)), probs_(std::move(probs)) {
  if (outcomes_.empty()) {
    throw InvalidArgumentError("FinitePmf: empty outcome set");
  }
  check_weights(probs_, outcomes_.size(), "FinitePmf");
  std::unordered_set<std::string> seen;
  for (const auto& o : outcomes_) {
    if (!seen.insert(o).second) {
      throw InvalidArgumentError("FinitePmf: duplicate outcome '" + o + "'");
    }
  }
  for (double& p : probs_) p = std::max(p, 0.0);
}

FinitePmf FinitePmf::point_mass(const std::string& outcome) {
  return FinitePmf({outcome}, {1.0});
}

FinitePmf FinitePmf::uniform(std::vector<std::string> outcomes) {
  std::vector<double> probs(outcomes.size(),
                            1.0 / static_cast<double>(outcomes.size()));
  return FinitePmf(std::move(outcomes), std::move(probs));
}

double FinitePmf::prob_of(const std::string& outcome) const {
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    if (outcomes_[i] == outcome) return probs_[i];
  }
  return 0.0;
}

ClosenessParams::ClosenessParams(double eps_in, double delta_in)
    : eps(eps_in), delta(delta_in) {
  if (!(eps >= 0.0)) {
    throw InvalidArgumentError("ClosenessParams: eps must be >= 0");
  }
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw InvalidArgumentError("ClosenessParams: delta must be in [0, 1]");
  }
}

std::string example_key(const Example& e) {
  std::ostringstream out;
  out.precision(17);
  for (double v : e.point) out << v << ',';
  out << '|' << e.label;
  return out.str();
}

PopulationDistribution::PopulationDistribution(std::vector<Example> support,
                                               std::vector<double> weights)
    : support_(std::move(support)), weights_(std::move(weights)) {
  if (support_.empty()) {
    throw InvalidArgumentError("PopulationDistribution: empty support");
  }
  check_weights(weights_, support_.size(), "PopulationDistribution");
  std::unordered_set<std::string> seen;
  for (const auto& e : support_) {
    if (!seen.insert(example_key(e)).second) {
      throw InvalidArgumentError(
          "PopulationDistribution: duplicate support entry");
    }
  }
}

PopulationDistribution PopulationDistribution::uniform(
    std::vector<Example> support) {
  std::vector<double> w(support.size(),
                        1.0 / static_cast<double>(support.size()));
  return PopulationDistribution(std::move(support), std::move(w));
}

Sample::Sample(std::vector<Example> e) : entries(std::move(e)) {
  if (entries.empty()) {
    throw InvalidArgumentError("Sample: needs at least one entry");
  }
}

namespace {

// Zero-filled view of two PMFs over the union of their supports,
// p's outcomes first, then q's new ones.
void union_support(const FinitePmf& p, const FinitePmf& q,
                   std::vector<double>& ps, std::vector<double>& qs) {
  std::unordered_map<std::string, std::size_t> index;
  ps.clear();
  qs.clear();
  for (std::size_t i = 0; i < p.size(); ++i) {
    index.emplace(p.outcomes()[i], ps.size());
    ps.push_back(p.probs()[i]);
    qs.push_back(0.0);
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    auto it = index.find(q.outcomes()[i]);
    if (it == index.end()) {
      ps.push_back(0.0);
      qs.push_back(q.probs()[i]);
    } else {
      qs[it->second] = q.probs()[i];
    }
  }
}

double hockey_stick(const std::vector<double>& a, const std::vector<double>& b,
                    double scale) {
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    total += std::max(a[i] - scale * b[i], 0.0);
  }
  return total;
}

}  // namespace

double delta_at_eps(const FinitePmf& p, const FinitePmf& q, double eps) {
  if (!(eps >= 0.0)) {
    throw InvalidArgumentError("delta_at_eps: eps must be >= 0");
  }
  std::vector<double> ps, qs;
  union_support(p, q, ps, qs);
  const double scale = std::exp(eps);
  double d = std::max(hockey_stick(ps, qs, scale), hockey_stick(qs, ps, scale));
  return std::clamp(d, 0.0, 1.0);
}

bool are_close(const FinitePmf& p, const FinitePmf& q,
               const ClosenessParams& c) {
  return delta_at_eps(p, q, c.eps) <= c.delta + kCloseTol;
}

ClosenessParams chain_closeness(const ClosenessParams& c1,
                                const ClosenessParams& c2) {
  const double ln2 = std::log(2.0);
  if (c1.eps >= ln2 || c2.eps >= ln2) {
    throw ChainHypothesisError(
        "chain_closeness: requires both eps values below ln 2");
  }
  const double eps = c1.eps + c2.eps;
  if (std::abs(c1.delta - c2.delta) <= kCloseTol) {
    return ClosenessParams(eps, std::min(3.0 * c1.delta, 1.0));
  }
  return ClosenessParams(eps, std::min(2.0 * (c1.delta + c2.delta), 1.0));
}

FinitePmf intermediate_pmf(const FinitePmf& y, const FinitePmf& z,
                           const ClosenessParams& c) {
  if (!are_close(y, z, c)) {
    throw NotCloseError("intermediate_pmf: inputs are not (eps, delta)-close");
  }
  std::vector<double> ys, zs;
  union_support(y, z, ys, zs);
  std::vector<std::string> labels;
  labels.reserve(ys.size());
  {
    std::unordered_set<std::string> seen;
    for (const auto& o : y.outcomes()) {
      labels.push_back(o);
      seen.insert(o);
    }
    for (const auto& o : z.outcomes()) {
      if (!seen.count(o)) labels.push_back(o);
    }
  }

  const double up = std::exp(c.eps);
  const double down = std::exp(-c.eps);
  const std::size_t m = ys.size();
  // Clip y into the envelope [e^-eps z, e^eps z]. Deficits (y above the
  // cap) and excesses (y below the floor) are each bounded by delta in
  // total, which is what makes the final total-variation claim exact.
  std::vector<double> w(m), cap(m), base(m);
  // 0: untouched, 1: clipped down to the cap, 2: clipped up to the floor.
  std::vector<int> region(m, 0);
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    cap[i] = up * zs[i];
    base[i] = down * zs[i];
    if (ys[i] > cap[i]) {
      region[i] = 1;
      w[i] = cap[i];
    } else if (ys[i] < base[i]) {
      region[i] = 2;
      w[i] = base[i];
    } else {
      w[i] = ys[i];
    }
    total += w[i];
  }

  // Renormalize: shrink the clipped-down region when over 1, inflate the
  // clipped-up region when under 1. A single proportional factor is used
  // while it stays inside the envelope; otherwise the imbalance is
  // water-filled against the envelope, spilling into the remaining
  // outcomes. Moving mass toward the envelope never disturbs either
  // closeness claim.
  if (total > 1.0) {
    double region_mass = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (region[i] == 1) region_mass += w[i];
    }
    const double shrink =
        region_mass > 0.0 ? 1.0 - (total - 1.0) / region_mass : -1.0;
    bool proportional = shrink >= 0.0;
    for (std::size_t i = 0; i < m && proportional; ++i) {
      if (region[i] == 1 && shrink * w[i] < base[i]) proportional = false;
    }
    if (proportional) {
      for (std::size_t i = 0; i < m; ++i) {
        if (region[i] == 1) w[i] *= shrink;
      }
    } else {
      double remaining = total - 1.0;
      for (int pass : {1, 0}) {
        for (std::size_t i = 0; i < m && remaining > 0.0; ++i) {
          if ((region[i] == 1) != (pass == 1)) continue;
          const double room = w[i] - base[i];
          if (room <= 0.0) continue;
          if (room >= remaining) {
            w[i] -= remaining;
            remaining = 0.0;
          } else {
            w[i] = base[i];
            remaining -= room;
          }
        }
      }
    }
  } else if (total < 1.0) {
    double region_mass = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (region[i] == 2) region_mass += w[i];
    }
    const double grow =
        region_mass > 0.0 ? 1.0 + (1.0 - total) / region_mass : -1.0;
    bool proportional = grow >= 0.0;
    for (std::size_t i = 0; i < m && proportional; ++i) {
      if (region[i] == 2 && grow * w[i] > cap[i]) proportional = false;
    }
    if (proportional) {
      for (std::size_t i = 0; i < m; ++i) {
        if (region[i] == 2) w[i] *= grow;
      }
    } else {
      double remaining = 1.0 - total;
      for (int pass : {1, 0}) {
        for (std::size_t i = 0; i < m && remaining > 0.0; ++i) {
          if ((region[i] == 2) != (pass == 1)) continue;
          const double room = cap[i] - w[i];
          if (room <= 0.0) continue;
          if (room >= remaining) {
            w[i] += remaining;
            remaining = 0.0;
          } else {
            w[i] = cap[i];
            remaining -= room;
          }
        }
      }
    }
  }
  return FinitePmf(std::move(labels), std::move(w));
}

FinitePmf product_pmf(const FinitePmf& p, const FinitePmf& q) {
  std::vector<std::string> outcomes;
  std::vector<double> probs;
  outcomes.reserve(p.size() * q.size());
  probs.reserve(p.size() * q.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      outcomes.push_back("(" + p.outcomes()[i] + "," + q.outcomes()[j] + ")");
      probs.push_back(p.probs()[i] * q.probs()[j]);
    }
  }
  return FinitePmf(std::move(outcomes), std::move(probs));
}

double kl_divergence(const FinitePmf& p, const FinitePmf& q) {
  std::vector<double> ps, qs;
  union_support(p, q, ps, qs);
  double kl = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i] <= 0.0) continue;
    if (qs[i] <= 0.0) {
      throw SupportMismatchError(
          "kl_divergence: p has mass where q has none");
    }
    kl += ps[i] * std::log(ps[i] / qs[i]);
  }
  return std::max(kl, 0.0);
}

FinitePmf pushforward(
    const FinitePmf& p,
    const std::function<std::string(const std::string&)>& f) {
  std::vector<std::string> outcomes;
  std::vector<double> probs;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::string image = f(p.outcomes()[i]);
    auto it = index.find(image);
    if (it == index.end()) {
      index.emplace(image, outcomes.size());
      outcomes.push_back(image);
      probs.push_back(p.probs()[i]);
    } else {
      probs[it->second] += p.probs()[i];
    }
  }
  return FinitePmf(std::move(outcomes), std::move(probs));
}

double hoeffding_tail(std::size_t n, double t) {
  if (n == 0) throw InvalidArgumentError("hoeffding_tail: n must be >= 1");
  if (!(t >= 0.0)) throw InvalidArgumentError("hoeffding_tail: t must be >= 0");
  return std::min(1.0, 2.0 * std::exp(-2.0 * static_cast<double>(n) * t * t));
}

double laplace_cdf(double x, double b) {
  if (!(b > 0.0)) throw InvalidArgumentError("laplace_cdf: b must be > 0");
  if (x <= 0.0) return 0.5 * std::exp(x / b);
  return 1.0 - 0.5 * std::exp(-x / b);
}

double laplace_sample(double b, Rng& rng) {
  if (!(b > 0.0)) throw InvalidArgumentError("laplace_sample: b must be > 0");
  const double u = uniform01(rng);
  if (u < 0.5) return b * std::log(2.0 * u);
  return -b * std::log(2.0 * (1.0 - u));
}

Sample draw_sample(const PopulationDistribution& d, std::size_t n, Rng& rng) {
  if (n == 0) throw InvalidArgumentError("draw_sample: n must be >= 1");
  std::vector<double> cumulative(d.weights().size());
  std::partial_sum(d.weights().begin(), d.weights().end(), cumulative.begin());
  cumulative.back() = 1.0;
  std::vector<Example> entries;
  entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = uniform01(rng);
    const auto it =
        std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const std::size_t idx = static_cast<std::size_t>(
        std::min<std::ptrdiff_t>(it - cumulative.begin(),
                                 cumulative.size() - 1));
    entries.push_back(d.support()[idx]);
  }
  return Sample(std::move(entries));
}

std::string sample_outcome(const FinitePmf& p, Rng& rng) {
  const double u = uniform01(rng);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p.probs()[i];
    if (u < acc) return p.outcomes()[i];
  }
  return p.outcomes().back();
}

}  // namespace genlab
