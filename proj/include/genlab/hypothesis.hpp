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

#ifndef GENLAB_HYPOTHESIS_HPP_
#define GENLAB_HYPOTHESIS_HPP_

#include <functional>
#include <string>
#include <vector>

#include "genlab/prob.hpp"

namespace genlab {

// A 0/1-valued function on examples. Threshold, rectangle and constant
// hypotheses look only at the domain point; custom hypotheses may also
// read the label (useful for adversaries measuring label agreement).
class Hypothesis {
 public:
  // h(y) = 1 iff y <= x, over a totally ordered one-dimensional domain.
  static Hypothesis threshold(double x);
  // Axis-aligned box [lo, hi]; an inverted box is identically 0.
  static Hypothesis rectangle(std::vector<double> lo, std::vector<double> hi);
  static Hypothesis constant(int bit);
  // Member of a finite class, identified by index.
  static Hypothesis indexed(int index,
                            std::function<int(const Example&)> eval);
  // Arbitrary evaluable hypothesis with an explicit label.
  static Hypothesis custom(std::string label,
                           std::function<int(const Example&)> eval);

  int evaluate(const Example& e) const { return eval_(e); }
  const std::string& label() const { return label_; }

  // Threshold accessor; only meaningful for threshold hypotheses.
  double threshold_value() const { return threshold_; }
  bool is_threshold() const { return is_threshold_; }

 private:
  Hypothesis(std::string label, std::function<int(const Example&)> eval)
      : label_(std::move(label)), eval_(std::move(eval)) {}

  std::string label_;
  std::function<int(const Example&)> eval_;
  double threshold_ = 0.0;
  bool is_threshold_ = false;
};

// Fraction of sample entries on which h evaluates to 1.
double empirical_value(const Hypothesis& h, const Sample& s);

// Exact expectation of h under the finite distribution d.
double true_value(const Hypothesis& h, const PopulationDistribution& d);

// Fraction of sample entries whose label disagrees with h(x).
double empirical_error(const Hypothesis& h, const Sample& s);

// Exact probability, under d, that h(x) disagrees with the label.
double true_error(const Hypothesis& h, const PopulationDistribution& d);

}  // namespace genlab

#endif  // GENLAB_HYPOTHESIS_HPP_
