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

#include "genlab/hypothesis.hpp"

#include <sstream>

namespace genlab {

namespace {

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

Hypothesis Hypothesis::threshold(double x) {
  Hypothesis h("threshold(" + format_double(x) + ")",
               [x](const Example& e) { return e.x1() <= x ? 1 : 0; });
  h.threshold_ = x;
  h.is_threshold_ = true;
  return h;
}

Hypothesis Hypothesis::rectangle(std::vector<double> lo,
                                 std::vector<double> hi) {
  std::ostringstream name;
  name << "rect[";
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (i) name << ";";
    name << format_double(lo[i]) << "," << format_double(i < hi.size() ? hi[i] : lo[i]);
  }
  name << "]";
  auto lo_copy = lo;
  auto hi_copy = hi;
  return Hypothesis(name.str(), [lo = std::move(lo_copy),
                                 hi = std::move(hi_copy)](const Example& e) {
    if (lo.empty()) return 0;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      const double v = i < e.point.size() ? e.point[i] : 0.0;
      if (v < lo[i] || v > hi[i]) return 0;
    }
    return 1;
  });
}

Hypothesis Hypothesis::constant(int bit) {
  return Hypothesis("const(" + std::to_string(bit) + ")",
                    [bit](const Example&) { return bit; });
}

Hypothesis Hypothesis::indexed(int index,
                               std::function<int(const Example&)> eval) {
  return Hypothesis("h" + std::to_string(index), std::move(eval));
}

Hypothesis Hypothesis::custom(std::string label,
                              std::function<int(const Example&)> eval) {
  return Hypothesis(std::move(label), std::move(eval));
}

double empirical_value(const Hypothesis& h, const Sample& s) {
  long count = 0;
  for (const auto& e : s.entries) count += h.evaluate(e);
  return static_cast<double>(count) / static_cast<double>(s.n());
}

double true_value(const Hypothesis& h, const PopulationDistribution& d) {
  double total = 0.0;
  for (std::size_t i = 0; i < d.support().size(); ++i) {
    if (h.evaluate(d.support()[i])) total += d.weights()[i];
  }
  return total;
}

double empirical_error(const Hypothesis& h, const Sample& s) {
  long count = 0;
  for (const auto& e : s.entries) {
    if (h.evaluate(e) != e.label) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(s.n());
}

double true_error(const Hypothesis& h, const PopulationDistribution& d) {
  double total = 0.0;
  for (std::size_t i = 0; i < d.support().size(); ++i) {
    const Example& e = d.support()[i];
    if (h.evaluate(e) != e.label) total += d.weights()[i];
  }
  return total;
}

}  // namespace genlab
