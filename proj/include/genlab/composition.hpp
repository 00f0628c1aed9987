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

#ifndef GENLAB_COMPOSITION_HPP_
#define GENLAB_COMPOSITION_HPP_

#include <cstddef>
#include <vector>

#include "genlab/mechanisms.hpp"

namespace genlab {

struct ComposedPgParams {
  double beta = 0.0;
  double eps = 0.0;
  double delta = 0.0;
  std::size_t k = 0;
};

struct PgRated {
  double beta = 0.0;
  double eps = 0.0;
};

struct ComposedMechanism {
  Mechanism mechanism;
  Simulator simulator;
  ComposedPgParams params;
};

// Runs every mechanism on the same sample with independent randomness
// and emits the output tuple. The joint exact PMF is the product of the
// per-mechanism PMFs, the joint simulator the product of the
// per-mechanism simulators, and the certified parameters
// (sum beta_i, sum eps_i, 0).
ComposedMechanism compose_basic(const std::vector<Mechanism>& mechs,
                                const std::vector<Simulator>& sims,
                                const std::vector<PgRated>& params);

// Closed-form parameters for k-fold adaptive composition of
// (beta, eps, delta)-close mechanisms at slack delta_prime:
// eps' = sqrt(2k ln(1/delta')) eps + k eps (e^eps - 1),
// delta_total = k delta + delta'. The per-round beta sums on the
// caller's side.
ComposedPgParams advanced_bound(std::size_t k, double eps, double delta,
                                double delta_prime);

}  // namespace genlab

#endif  // GENLAB_COMPOSITION_HPP_
