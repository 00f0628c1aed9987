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

#include "genlab/compression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "genlab/errors.hpp"

namespace genlab {

CompressionScheme threshold_scheme() {
  CompressionScheme scheme;
  scheme.name = "threshold";
  scheme.size_fn = [](std::size_t) { return std::size_t{1}; };
  scheme.compress = [](const Sample& s) {
    bool has_positive = false;
    Example best;
    for (const auto& e : s.entries) {
      if (e.label == 1 && (!has_positive || e.x1() > best.x1())) {
        has_positive = true;
        best = e;
      }
    }
    if (has_positive) {
      for (const auto& e : s.entries) {
        if (e.label == 0 && e.x1() <= best.x1()) {
          throw RealizabilityError(
              "threshold_scheme: negative example at or below a positive one");
        }
      }
      return std::vector<Example>{best};
    }
    return std::vector<Example>{};
  };
  scheme.encode = [](const std::vector<Example>& selection) {
    if (selection.empty()) return Hypothesis::constant(0);
    return Hypothesis::threshold(selection.front().x1());
  };
  return scheme;
}

CompressionScheme rectangle_scheme(std::size_t dim) {
  if (dim == 0) {
    throw InvalidArgumentError("rectangle_scheme: dim must be >= 1");
  }
  CompressionScheme scheme;
  scheme.name = "rectangle";
  scheme.size_fn = [dim](std::size_t) { return 2 * dim; };
  scheme.compress = [dim](const Sample& s) {
    std::vector<Example> selection;
    std::vector<double> lo(dim, std::numeric_limits<double>::infinity());
    std::vector<double> hi(dim, -std::numeric_limits<double>::infinity());
    bool any = false;
    for (const auto& e : s.entries) {
      if (e.label != 1) continue;
      any = true;
      for (std::size_t a = 0; a < dim; ++a) {
        const double v = a < e.point.size() ? e.point[a] : 0.0;
        lo[a] = std::min(lo[a], v);
        hi[a] = std::max(hi[a], v);
      }
    }
    if (!any) return selection;
    for (std::size_t a = 0; a < dim; ++a) {
      const Example* min_e = nullptr;
      const Example* max_e = nullptr;
      for (const auto& e : s.entries) {
        if (e.label != 1) continue;
        const double v = a < e.point.size() ? e.point[a] : 0.0;
        if (min_e == nullptr && v == lo[a]) min_e = &e;
        if (max_e == nullptr && v == hi[a]) max_e = &e;
      }
      selection.push_back(*min_e);
      selection.push_back(*max_e);
    }
    for (const auto& e : s.entries) {
      if (e.label != 0) continue;
      bool inside = true;
      for (std::size_t a = 0; a < dim; ++a) {
        const double v = a < e.point.size() ? e.point[a] : 0.0;
        if (v < lo[a] || v > hi[a]) {
          inside = false;
          break;
        }
      }
      if (inside) {
        throw RealizabilityError(
            "rectangle_scheme: negative example inside the positive box");
      }
    }
    return selection;
  };
  scheme.encode = [dim](const std::vector<Example>& selection) {
    if (selection.empty()) {
      return Hypothesis::rectangle(
          std::vector<double>(dim, 1.0), std::vector<double>(dim, 0.0));
    }
    std::vector<double> lo(dim, std::numeric_limits<double>::infinity());
    std::vector<double> hi(dim, -std::numeric_limits<double>::infinity());
    for (const auto& e : selection) {
      for (std::size_t a = 0; a < dim; ++a) {
        const double v = a < e.point.size() ? e.point[a] : 0.0;
        lo[a] = std::min(lo[a], v);
        hi[a] = std::max(hi[a], v);
      }
    }
    return Hypothesis::rectangle(std::move(lo), std::move(hi));
  };
  return scheme;
}

CompressionScheme subsample_scheme(
    std::function<Hypothesis(const Sample&)> erm, std::size_t k,
    std::uint64_t seed) {
  if (k == 0) throw InvalidArgumentError("subsample_scheme: k must be >= 1");
  CompressionScheme scheme;
  scheme.name = "subsample";
  scheme.size_fn = [k](std::size_t) { return k; };
  scheme.approximate = true;
  auto rng = std::make_shared<Rng>(seeded_rng(seed));
  scheme.compress = [k, rng](const Sample& s) {
    if (s.n() <= k) return s.entries;
    // Partial Fisher-Yates over index positions.
    std::vector<std::size_t> index(s.n());
    for (std::size_t i = 0; i < s.n(); ++i) index[i] = i;
    std::vector<Example> selection;
    selection.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t remaining = s.n() - i;
      const std::size_t j =
          i + std::min<std::size_t>(
                  static_cast<std::size_t>(uniform01(*rng) *
                                           static_cast<double>(remaining)),
                  remaining - 1);
      std::swap(index[i], index[j]);
      selection.push_back(s.entries[index[i]]);
    }
    return selection;
  };
  scheme.encode = [erm = std::move(erm)](const std::vector<Example>& sel) {
    return erm(Sample(sel));
  };
  return scheme;
}

LearnerResult run_compression_learner(const CompressionScheme& scheme,
                                      const Sample& s) {
  std::vector<Example> selection = scheme.compress(s);
  if (selection.size() > scheme.size_fn(s.n())) {
    throw InvalidArgumentError(
        "run_compression_learner: selection exceeds the declared size");
  }
  Hypothesis h = scheme.encode(selection);
  return LearnerResult{std::move(h), std::move(selection)};
}

SessionResult adaptive_session(
    const Sample& s,
    const std::function<CompressionScheme(const std::vector<Hypothesis>&)>&
        chooser,
    std::size_t m) {
  if (m == 0) throw InvalidArgumentError("adaptive_session: m must be >= 1");
  SessionResult session;
  std::vector<Hypothesis> history;
  for (std::size_t i = 0; i < m; ++i) {
    CompressionScheme scheme = chooser(history);
    LearnerResult result = run_compression_learner(scheme, s);
    session.total_size += scheme.size_fn(s.n());
    session.selected_count += result.selection.size();
    history.push_back(result.hypothesis);
    session.rounds.push_back(std::move(result));
  }
  return session;
}

double rg_bound_compression(std::size_t n, std::size_t k_prime, double delta) {
  if (n == 0 || k_prime == 0 || !(delta > 0.0 && delta < 1.0)) {
    throw InvalidArgumentError("rg_bound_compression: arguments out of range");
  }
  if (n < 2 * k_prime) {
    throw InvalidArgumentError("rg_bound_compression: requires n >= 2k'");
  }
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k_prime);
  return std::sqrt(4.0 * kd * std::log(nd / delta) / nd) +
         8.0 * kd * std::log(2.0 * nd / delta) / nd + kd / nd;
}

double rg_bound_description(std::size_t range_size, std::size_t n,
                            double beta) {
  if (range_size == 0 || n == 0 || !(beta > 0.0 && beta < 1.0)) {
    throw InvalidArgumentError("rg_bound_description: arguments out of range");
  }
  return std::sqrt(std::log(static_cast<double>(range_size) / beta) /
                   (2.0 * static_cast<double>(n)));
}

}  // namespace genlab
