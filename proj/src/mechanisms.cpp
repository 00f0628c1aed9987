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

#include "genlab/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <unordered_map>

#include "genlab/errors.hpp"
#include "genlab/internal/enumerate.hpp"

namespace genlab {

double Query::mean_on(const Sample& s) const {
  double total = 0.0;
  for (const auto& e : s.entries) total += eval(e);
  return total / static_cast<double>(s.n());
}

double Query::mean_on(const PopulationDistribution& d) const {
  double total = 0.0;
  for (std::size_t i = 0; i < d.support().size(); ++i) {
    total += d.weights()[i] * eval(d.support()[i]);
  }
  return total;
}

HypothesisClass::HypothesisClass(std::vector<Hypothesis> hs,
                                 std::optional<int> d)
    : hypotheses(std::move(hs)), vc_dim(d) {
  if (hypotheses.empty()) {
    throw InvalidArgumentError("HypothesisClass: empty class");
  }
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    for (std::size_t j = i + 1; j < hypotheses.size(); ++j) {
      if (hypotheses[i].label() == hypotheses[j].label()) {
        throw InvalidArgumentError("HypothesisClass: duplicate label '" +
                                   hypotheses[i].label() + "'");
      }
    }
  }
}

std::string Simulator::sample(const PopulationDistribution& d, std::size_t n,
                              Rng& rng) const {
  return sample_outcome(exact_pmf(d, n), rng);
}

Simulator constant_simulator(const std::string& outcome) {
  return Simulator{"constant:" + outcome,
                   [outcome](const PopulationDistribution&, std::size_t) {
                     return FinitePmf::point_mass(outcome);
                   }};
}

double laplace_mech_answer(const Sample& s, const Query& q, double b,
                           Rng& rng) {
  if (!(b > 0.0)) {
    throw InvalidArgumentError("laplace_mech_answer: b must be > 0");
  }
  return q.mean_on(s) + laplace_sample(b, rng);
}

double laplace_pg_scale(std::size_t n, double eps, double beta) {
  if (n == 0 || !(eps > 0.0) || !(beta > 0.0 && beta < 1.0)) {
    throw InvalidArgumentError("laplace_pg_scale: arguments out of range");
  }
  return std::sqrt(std::log(1.0 / beta) /
                   (2.0 * static_cast<double>(n) * eps * eps));
}

ClosenessParams laplace_pair_eps(double shift, double b) {
  if (!(b > 0.0)) {
    throw InvalidArgumentError("laplace_pair_eps: b must be > 0");
  }
  return ClosenessParams(std::abs(shift) / b, 0.0);
}

double sq_oracle(const Sample& s, const Query& q, double tau, double beta,
                 Rng& rng) {
  if (!(tau > 0.0)) throw InvalidArgumentError("sq_oracle: tau must be > 0");
  if (!(beta > 0.0 && beta < 1.0)) {
    throw InvalidArgumentError("sq_oracle: beta must be in (0, 1)");
  }
  const double b = (tau / 2.0) / std::log(1.0 / beta);
  return laplace_mech_answer(s, q, b, rng);
}

// --- report noisy max ------------------------------------------------------

namespace {

double laplace_pdf(double x, double b) {
  return std::exp(-std::abs(x) / b) / (2.0 * b);
}

struct ArgmaxIntegrand {
  const std::vector<double>& means;
  std::size_t j;
  double b;

  double operator()(double t) const {
    double v = laplace_pdf(t - means[j], b);
    for (std::size_t k = 0; k < means.size(); ++k) {
      if (k == j) continue;
      v *= laplace_cdf(t - means[k], b);
      if (v == 0.0) return 0.0;
    }
    return v;
  }
};

template <typename F>
double adaptive_simpson(const F& f, double a, double m, double b, double fa,
                        double fm, double fb, double whole, double tol,
                        int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0) {
    throw QuadratureError("noisy_max_pmf: quadrature did not converge");
  }
  if (std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, lm, m, fa, flm, fm, left, tol / 2.0,
                          depth - 1) +
         adaptive_simpson(f, m, rm, b, fm, frm, fb, right, tol / 2.0,
                          depth - 1);
}

template <typename F>
double integrate_segment(const F& f, double a, double b, double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, m, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

FinitePmf noisy_max_pmf_from_means(const std::vector<double>& means,
                                   double b) {
  if (means.empty()) {
    throw InvalidArgumentError("noisy_max_pmf: needs at least one query");
  }
  if (!(b > 0.0)) throw InvalidArgumentError("noisy_max_pmf: b must be > 0");
  const std::size_t m = means.size();
  std::vector<std::string> labels(m);
  for (std::size_t j = 0; j < m; ++j) labels[j] = std::to_string(j);
  if (m == 1) return FinitePmf::point_mass(labels[0]);

  // The integrand has density kinks at every mean; integrating each
  // smooth piece separately keeps the adaptive rule fast and accurate.
  const auto [lo_it, hi_it] = std::minmax_element(means.begin(), means.end());
  std::vector<double> cuts(means);
  cuts.push_back(*lo_it - 45.0 * b);
  cuts.push_back(*hi_it + 45.0 * b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<double> probs(m, 0.0);
  const double tol = 1e-11 / static_cast<double>(cuts.size());
  for (std::size_t j = 0; j < m; ++j) {
    const ArgmaxIntegrand f{means, j, b};
    double total = 0.0;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      total += integrate_segment(f, cuts[c], cuts[c + 1], tol);
    }
    probs[j] = total;
  }
  double mass = 0.0;
  for (double p : probs) mass += p;
  if (std::abs(mass - 1.0) > 1e-8) {
    throw QuadratureError("noisy_max_pmf: probabilities sum to " +
                          std::to_string(mass));
  }
  for (double& p : probs) p /= mass;
  return FinitePmf(std::move(labels), std::move(probs));
}

FinitePmf noisy_max_pmf(const Sample& s, const std::vector<Query>& queries,
                        double b) {
  std::vector<double> means;
  means.reserve(queries.size());
  for (const auto& q : queries) means.push_back(q.mean_on(s));
  return noisy_max_pmf_from_means(means, b);
}

std::size_t noisy_max(const Sample& s, const std::vector<Query>& queries,
                      double b, Rng& rng) {
  if (queries.empty()) {
    throw InvalidArgumentError("noisy_max: needs at least one query");
  }
  if (!(b > 0.0)) throw InvalidArgumentError("noisy_max: b must be > 0");
  std::size_t best = 0;
  double best_value = 0.0;
  for (std::size_t j = 0; j < queries.size(); ++j) {
    const double v = queries[j].mean_on(s) + laplace_sample(b, rng);
    if (j == 0 || v > best_value) {
      best = j;
      best_value = v;
    }
  }
  return best;
}

double noisy_max_scale(std::size_t m, std::size_t n, double eps, double beta) {
  if (m == 0 || n == 0 || !(eps > 0.0) || !(beta > 0.0 && beta < 1.0)) {
    throw InvalidArgumentError("noisy_max_scale: arguments out of range");
  }
  return std::sqrt(std::log(static_cast<double>(m) / beta) /
                   (2.0 * static_cast<double>(n) * eps * eps));
}

// --- exponential-mechanism learner ------------------------------------------

namespace {

FinitePmf exp_weights_pmf(const std::vector<std::string>& labels,
                          const std::vector<double>& errors, double scale) {
  const double min_err = *std::min_element(errors.begin(), errors.end());
  std::vector<double> weights(errors.size());
  double total = 0.0;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    weights[i] = std::exp(-scale * (errors[i] - min_err));
    total += weights[i];
  }
  for (double& w : weights) w /= total;
  return FinitePmf(labels, weights);
}

double exp_learner_scale(std::size_t n, std::size_t class_size, double eps,
                         double beta) {
  if (!(eps > 0.0) || !(beta > 0.0 && beta < 1.0)) {
    throw InvalidArgumentError(
        "exp_learner: eps must be > 0 and beta in (0, 1)");
  }
  return std::sqrt(static_cast<double>(n)) * eps /
         std::sqrt(2.0 * std::log(2.0 * static_cast<double>(class_size) /
                                  beta));
}

std::vector<std::string> class_labels(const HypothesisClass& h_class) {
  std::vector<std::string> labels;
  labels.reserve(h_class.size());
  for (const auto& h : h_class.hypotheses) labels.push_back(h.label());
  return labels;
}

}  // namespace

FinitePmf exp_learner_pmf(const Sample& s, const HypothesisClass& h_class,
                          double eps, double beta) {
  const double scale = exp_learner_scale(s.n(), h_class.size(), eps, beta);
  std::vector<double> errors;
  errors.reserve(h_class.size());
  for (const auto& h : h_class.hypotheses) {
    errors.push_back(empirical_error(h, s));
  }
  return exp_weights_pmf(class_labels(h_class), errors, scale);
}

Simulator exp_learner_simulator(const HypothesisClass& h_class, double eps,
                                double beta) {
  return Simulator{
      "exp-learner-sim",
      [h_class, eps, beta](const PopulationDistribution& d, std::size_t n) {
        const double scale = exp_learner_scale(n, h_class.size(), eps, beta);
        std::vector<double> errors;
        errors.reserve(h_class.size());
        for (const auto& h : h_class.hypotheses) {
          errors.push_back(true_error(h, d));
        }
        return exp_weights_pmf(class_labels(h_class), errors, scale);
      }};
}

// --- bit-sample mechanisms --------------------------------------------------

namespace {

int bit_entry(const Example& e, const char* who) {
  const double v = e.x1();
  if (v == 0.0) return 0;
  if (v == 1.0) return 1;
  throw InvalidArgumentError(std::string(who) + ": non-binary entry");
}

std::size_t ones_count(const Sample& s, const char* who) {
  std::size_t ones = 0;
  for (const auto& e : s.entries) ones += bit_entry(e, who);
  return ones;
}

std::string ones_key(const Sample& s, const char* who) {
  return "ones=" + std::to_string(ones_count(s, who));
}

std::string sorted_sample_key(const Sample& s) {
  std::vector<std::string> keys;
  keys.reserve(s.n());
  for (const auto& e : s.entries) keys.push_back(example_key(e));
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (const auto& k : keys) {
    out += k;
    out += ';';
  }
  return out;
}

}  // namespace

Mechanism majority_mech(std::size_t n) {
  Mechanism m;
  m.name = "majority";
  m.range = std::vector<std::string>{"0", "1"};
  m.sample_output = [n](const Sample& s, Rng&) {
    (void)n;
    return ones_count(s, "majority") > s.n() / 2 ? std::string("1")
                                                 : std::string("0");
  };
  m.exact_pmf = [](const Sample& s) {
    const bool one = ones_count(s, "majority") > s.n() / 2;
    return FinitePmf({"0", "1"}, {one ? 0.0 : 1.0, one ? 1.0 : 0.0});
  };
  m.sufficient_stat = [](const Sample& s) { return ones_key(s, "majority"); };
  return m;
}

Mechanism strange_normal_mech(std::size_t n) {
  auto is_strange = [n](const Sample& s) {
    if (s.n() != n) {
      throw InvalidArgumentError("strange_normal: sample size mismatch");
    }
    const std::size_t half = n / 2;
    for (std::size_t i = 0; i < s.n(); ++i) {
      const int bit = bit_entry(s.entries[i], "strange_normal");
      if (i < half ? bit != 1 : bit != 0) return false;
    }
    return true;
  };
  Mechanism m;
  m.name = "strange-normal";
  m.range = std::vector<std::string>{"Strange", "Normal"};
  m.sample_output = [is_strange](const Sample& s, Rng&) {
    return is_strange(s) ? std::string("Strange") : std::string("Normal");
  };
  m.exact_pmf = [is_strange](const Sample& s) {
    const bool strange = is_strange(s);
    return FinitePmf({"Strange", "Normal"},
                     {strange ? 1.0 : 0.0, strange ? 0.0 : 1.0});
  };
  return m;
}

Mechanism noisy_majority_mech(std::size_t n, double eps) {
  if (n == 0 || !(eps > 0.0)) {
    throw InvalidArgumentError("noisy_majority: n >= 1 and eps > 0 required");
  }
  const double b = 1.0 / (static_cast<double>(n) * eps);
  Mechanism m;
  m.name = "noisy-majority";
  m.range = std::vector<std::string>{"0", "1"};
  m.sample_output = [b](const Sample& s, Rng& rng) {
    const double mean = static_cast<double>(ones_count(s, "noisy_majority")) /
                        static_cast<double>(s.n());
    const double noisy = mean + laplace_sample(b, rng);
    return noisy > 0.5 ? std::string("1") : std::string("0");
  };
  m.exact_pmf = [b](const Sample& s) {
    const double mean = static_cast<double>(ones_count(s, "noisy_majority")) /
                        static_cast<double>(s.n());
    const double p_one = 1.0 - laplace_cdf(0.5 - mean, b);
    return FinitePmf({"0", "1"}, {1.0 - p_one, p_one});
  };
  m.sufficient_stat = [](const Sample& s) {
    return ones_key(s, "noisy_majority");
  };
  return m;
}

// --- combinators -------------------------------------------------------------

Mechanism postprocess(const Mechanism& m,
                      const std::function<std::string(const std::string&)>& f,
                      const std::string& map_name) {
  Mechanism out;
  out.name = "postprocess:" + m.name + ":" + map_name;
  if (m.range.has_value()) {
    std::vector<std::string> mapped;
    for (const auto& r : *m.range) {
      const std::string image = f(r);
      if (std::find(mapped.begin(), mapped.end(), image) == mapped.end()) {
        mapped.push_back(image);
      }
    }
    out.range = std::move(mapped);
  }
  auto inner = m.sample_output;
  out.sample_output = [inner, f](const Sample& s, Rng& rng) {
    return f(inner(s, rng));
  };
  if (m.exact_pmf.has_value()) {
    auto inner_pmf = *m.exact_pmf;
    out.exact_pmf = [inner_pmf, f](const Sample& s) {
      return pushforward(inner_pmf(s), f);
    };
  }
  out.sufficient_stat = m.sufficient_stat;
  return out;
}

namespace {

struct WeightedValue {
  Example value;
  std::size_t count = 0;
};

// Distinct sample entries in a canonical order, so permutations of the
// same sample enumerate identically.
std::vector<WeightedValue> distinct_values(const Sample& s) {
  std::map<std::string, WeightedValue> by_key;
  for (const auto& e : s.entries) {
    auto [it, fresh] = by_key.try_emplace(example_key(e));
    if (fresh) it->second.value = e;
    ++it->second.count;
  }
  std::vector<WeightedValue> out;
  out.reserve(by_key.size());
  for (auto& [key, wv] : by_key) out.push_back(std::move(wv));
  return out;
}

class PmfAccumulator {
 public:
  void add(const FinitePmf& p, double mass) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto& label = p.outcomes()[i];
      auto it = index_.find(label);
      if (it == index_.end()) {
        index_.emplace(label, labels_.size());
        labels_.push_back(label);
        probs_.push_back(mass * p.probs()[i]);
      } else {
        probs_[it->second] += mass * p.probs()[i];
      }
    }
  }

  FinitePmf finish() && {
    double total = 0.0;
    for (double p : probs_) total += p;
    for (double& p : probs_) p /= total;
    return FinitePmf(std::move(labels_), std::move(probs_));
  }

 private:
  std::vector<std::string> labels_;
  std::vector<double> probs_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace

Mechanism resample_compile(const Mechanism& m, std::size_t n,
                           std::uint64_t cap) {
  if (n == 0) throw InvalidArgumentError("resample_compile: n must be >= 1");
  Mechanism out;
  out.name = "resample:" + m.name;
  out.range = m.range;
  auto inner_sample = m.sample_output;
  out.sample_output = [inner_sample, n](const Sample& s, Rng& rng) {
    std::vector<Example> resampled;
    resampled.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t idx = std::min<std::size_t>(
          static_cast<std::size_t>(uniform01(rng) *
                                   static_cast<double>(s.n())),
          s.n() - 1);
      resampled.push_back(s.entries[idx]);
    }
    return inner_sample(Sample(std::move(resampled)), rng);
  };

  if (m.exact_pmf.has_value()) {
    const bool exchangeable = m.sufficient_stat.has_value();
    auto inner_pmf = *m.exact_pmf;
    out.exact_pmf = [inner_pmf, n, exchangeable, cap](const Sample& s) {
      const auto values = distinct_values(s);
      const std::size_t d = values.size();
      std::vector<double> log_weights(d);
      for (std::size_t i = 0; i < d; ++i) {
        log_weights[i] =
            std::log(static_cast<double>(values[i].count) /
                     static_cast<double>(s.n()));
      }
      PmfAccumulator acc;
      if (exchangeable) {
        // The inner output distribution depends on the resample only
        // through its multiset, so one representative per composition
        // suffices.
        if (internal::composition_count(n, d) > static_cast<double>(cap)) {
          throw EnumerationCapError(
              "resample_compile: composition enumeration exceeds cap");
        }
        internal::for_each_composition(
            n, d, [&](const std::vector<std::size_t>& k) {
              std::vector<Example> entries;
              entries.reserve(n);
              for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t c = 0; c < k[i]; ++c) {
                  entries.push_back(values[i].value);
                }
              }
              const double mass = std::exp(
                  internal::multinomial_log_mass(k, log_weights, n));
              acc.add(inner_pmf(Sample(std::move(entries))), mass);
            });
      } else {
        // Order can matter for the inner mechanism; enumerate ordered
        // tuples.
        if (!(internal::tuple_count(n, d) <= static_cast<double>(cap))) {
          throw EnumerationCapError(
              "resample_compile: ordered enumeration exceeds cap");
        }
        internal::for_each_tuple(
            n, d, [&](const std::vector<std::size_t>& digits) {
              std::vector<Example> entries;
              entries.reserve(n);
              double mass = 1.0;
              for (std::size_t i = 0; i < n; ++i) {
                entries.push_back(values[digits[i]].value);
                mass *= static_cast<double>(values[digits[i]].count) /
                        static_cast<double>(s.n());
              }
              acc.add(inner_pmf(Sample(std::move(entries))), mass);
            });
      }
      return std::move(acc).finish();
    };
  }
  out.sufficient_stat = [](const Sample& s) { return sorted_sample_key(s); };
  return out;
}

Mechanism exp_learner_mech(const HypothesisClass& h_class, double eps,
                           double beta) {
  Mechanism m;
  m.name = "exp-learner";
  m.range = class_labels(h_class);
  m.exact_pmf = [h_class, eps, beta](const Sample& s) {
    return exp_learner_pmf(s, h_class, eps, beta);
  };
  auto pmf = *m.exact_pmf;
  m.sample_output = [pmf](const Sample& s, Rng& rng) {
    return sample_outcome(pmf(s), rng);
  };
  m.sufficient_stat = [](const Sample& s) { return sorted_sample_key(s); };
  return m;
}

Mechanism leaky_mech() {
  Mechanism m;
  m.name = "leaky";
  m.sample_output = [](const Sample& s, Rng&) {
    std::ostringstream out;
    out.precision(17);
    for (const auto& e : s.entries) {
      for (std::size_t i = 0; i < e.point.size(); ++i) {
        if (i) out << ',';
        out << e.point[i];
      }
      out << ':' << e.label << ';';
    }
    return out.str();
  };
  return m;
}

}  // namespace genlab
