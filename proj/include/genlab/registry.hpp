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

#ifndef GENLAB_REGISTRY_HPP_
#define GENLAB_REGISTRY_HPP_

#include <string>
#include <vector>

#include "genlab/mechanisms.hpp"
#include "genlab/verification.hpp"

namespace genlab {

// Knobs shared by the registry factories. Each mechanism reads the
// subset it needs.
struct RegistryOptions {
  std::size_t n = 8;       // sample size the mechanism is built for
  double mech_eps = 0.5;   // noisy-majority / exp-learner epsilon
  double mech_beta = 0.1;  // exp-learner beta
  double scale = 0.25;     // laplace / noisy-max noise scale
};

// The canned two-hypothesis class the CLI's exp-learner runs over.
HypothesisClass registry_hypothesis_class();

std::vector<std::string> registry_mechanism_names();

// Builds a mechanism by registry name. Wrapper names compose:
// "postprocess:<inner>:<map>" with map one of identity, constant,
// first-char; "resample:<inner>".
Mechanism make_mechanism(const std::string& name, const RegistryOptions& opts);

// Builds a simulator by name: "constant:<outcome>", "dp-to-pg" (derived
// from the mechanism), or "exp-learner" (the population-error learner).
Simulator make_simulator(const std::string& name, const Mechanism& m,
                         const RegistryOptions& opts);

// Post-processing adversaries for the Monte Carlo verifier:
// "constant" (a fixed hypothesis), "identity" (indicator of the output
// value over a bit domain, or the named class member for learner
// outputs), "memorizer" (parses a leaked sample and replays its
// labels).
Adversary make_adversary(const std::string& name, const RegistryOptions& opts);

}  // namespace genlab

#endif  // GENLAB_REGISTRY_HPP_
