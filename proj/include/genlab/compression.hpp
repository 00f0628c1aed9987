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

#ifndef GENLAB_COMPRESSION_HPP_
#define GENLAB_COMPRESSION_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "genlab/hypothesis.hpp"
#include "genlab/prob.hpp"
#include "genlab/rng.hpp"

namespace genlab {

// A compress/encode pair: compress selects at most k(n) entries of the
// sample, and encode turns the selection into a hypothesis. Exact
// schemes must produce empirical risk minimizers; schemes built from
// subsampling set `approximate` and only promise approximate ERM.
struct CompressionScheme {
  std::string name;
  std::function<std::size_t(std::size_t)> size_fn;
  std::function<std::vector<Example>(const Sample&)> compress;
  std::function<Hypothesis(const std::vector<Example>&)> encode;
  bool approximate = false;
};

// Size-1 scheme for threshold functions over a one-dimensional ordered
// domain: keep the largest positive example; an all-negative sample
// compresses to the empty selection and encodes the constant-0
// hypothesis.
CompressionScheme threshold_scheme();

// Size-2*dim scheme for axis-aligned rectangles: keep, per axis, a
// positive example attaining the minimum and one attaining the maximum
// coordinate; encode the bounding box of the selected positives.
CompressionScheme rectangle_scheme(std::size_t dim);

// Approximate scheme: compress draws k entries uniformly without
// replacement (all entries when n <= k) and encode runs the supplied
// empirical risk minimizer on the selection.
CompressionScheme subsample_scheme(
    std::function<Hypothesis(const Sample&)> erm, std::size_t k,
    std::uint64_t seed);

struct LearnerResult {
  Hypothesis hypothesis;
  std::vector<Example> selection;
};

// encode(compress(s)): runs the scheme end to end and reports the
// selection that determines the output.
LearnerResult run_compression_learner(const CompressionScheme& scheme,
                                      const Sample& s);

struct SessionResult {
  std::vector<LearnerResult> rounds;
  // Sum of the declared sizes k_i(n) of the chosen schemes.
  std::size_t total_size = 0;
  // Sum of the actual selection lengths (can be smaller, e.g. for
  // all-negative threshold samples).
  std::size_t selected_count = 0;
};

// Runs m compression learners on the same sample, where the scheme for
// round i may depend on the hypotheses produced in rounds 1..i-1.
SessionResult adaptive_session(
    const Sample& s,
    const std::function<CompressionScheme(const std::vector<Hypothesis>&)>&
        chooser,
    std::size_t m);

// Overfit bound for any algorithm that releases k_prime of its n input
// examples (and for anything determined by the release):
// sqrt(4 k' ln(n/delta) / n) + 8 k' ln(2n/delta) / n + k'/n.
// Requires n >= 2 k_prime.
double rg_bound_compression(std::size_t n, std::size_t k_prime, double delta);

// Overfit bound for mechanisms with a bounded output range:
// sqrt(ln(range_size/beta) / (2n)).
double rg_bound_description(std::size_t range_size, std::size_t n,
                            double beta);

}  // namespace genlab

#endif  // GENLAB_COMPRESSION_HPP_
