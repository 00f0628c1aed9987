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

#include "genlab/registry.hpp"

#include <map>
#include <memory>
#include <sstream>

#include "genlab/errors.hpp"

namespace genlab {

HypothesisClass registry_hypothesis_class() {
  return HypothesisClass({Hypothesis::constant(0), Hypothesis::constant(1)});
}

std::vector<std::string> registry_mechanism_names() {
  return {"laplace",        "noisy-max",      "exp-learner", "majority",
          "strange-normal", "noisy-majority", "leaky",
          "postprocess:<mech>:<map>", "resample:<mech>"};
}

namespace {

std::function<std::string(const std::string&)> named_map(
    const std::string& name) {
  if (name == "identity") {
    return [](const std::string& o) { return o; };
  }
  if (name == "constant") {
    return [](const std::string&) { return std::string("x"); };
  }
  if (name == "first-char") {
    return [](const std::string& o) { return o.substr(0, 1); };
  }
  throw InvalidArgumentError("unknown post-processing map '" + name + "'");
}

Mechanism laplace_query_mech(double b) {
  Mechanism m;
  m.name = "laplace";
  m.sample_output = [b](const Sample& s, Rng& rng) {
    const Query mean{"mean", [](const Example& e) { return e.x1(); }};
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g",
                  laplace_mech_answer(s, mean, b, rng));
    return std::string(buffer);
  };
  return m;
}

Mechanism noisy_max_mech(double b) {
  const std::vector<Query> queries = {
      {"mean", [](const Example& e) { return e.x1(); }},
      {"one-minus-mean", [](const Example& e) { return 1.0 - e.x1(); }}};
  Mechanism m;
  m.name = "noisy-max";
  m.range = std::vector<std::string>{"0", "1"};
  m.sample_output = [queries, b](const Sample& s, Rng& rng) {
    return std::to_string(noisy_max(s, queries, b, rng));
  };
  m.exact_pmf = [queries, b](const Sample& s) {
    return noisy_max_pmf(s, queries, b);
  };
  return m;
}

}  // namespace

Mechanism make_mechanism(const std::string& name,
                         const RegistryOptions& opts) {
  if (name.rfind("postprocess:", 0) == 0) {
    const std::string rest = name.substr(12);
    const auto cut = rest.rfind(':');
    if (cut == std::string::npos) {
      throw InvalidArgumentError(
          "postprocess wrapper needs the form postprocess:<mech>:<map>");
    }
    return postprocess(make_mechanism(rest.substr(0, cut), opts),
                       named_map(rest.substr(cut + 1)), rest.substr(cut + 1));
  }
  if (name.rfind("resample:", 0) == 0) {
    return resample_compile(make_mechanism(name.substr(9), opts), opts.n);
  }
  if (name == "laplace") return laplace_query_mech(opts.scale);
  if (name == "noisy-max") return noisy_max_mech(opts.scale);
  if (name == "exp-learner") {
    return exp_learner_mech(registry_hypothesis_class(), opts.mech_eps,
                            opts.mech_beta);
  }
  if (name == "majority") return majority_mech(opts.n);
  if (name == "strange-normal") return strange_normal_mech(opts.n);
  if (name == "noisy-majority") {
    return noisy_majority_mech(opts.n, opts.mech_eps);
  }
  if (name == "leaky") return leaky_mech();
  throw InvalidArgumentError("unknown mechanism '" + name + "'");
}

Simulator make_simulator(const std::string& name, const Mechanism& m,
                         const RegistryOptions& opts) {
  if (name.rfind("constant:", 0) == 0) {
    return constant_simulator(name.substr(9));
  }
  if (name == "dp-to-pg") return dp_to_pg_simulator(m);
  if (name == "exp-learner") {
    return exp_learner_simulator(registry_hypothesis_class(), opts.mech_eps,
                                 opts.mech_beta);
  }
  throw InvalidArgumentError("unknown simulator '" + name + "'");
}

Adversary make_adversary(const std::string& name,
                         const RegistryOptions& opts) {
  if (name == "constant") {
    return [](const std::string&) { return Hypothesis::constant(1); };
  }
  if (name == "identity") {
    const HypothesisClass h_class = registry_hypothesis_class();
    return [h_class](const std::string& out) {
      for (const auto& h : h_class.hypotheses) {
        if (h.label() == out) return h;
      }
      // Bit outputs: the indicator of the released value.
      if (out == "0" || out == "1") {
        const double target = out == "1" ? 1.0 : 0.0;
        return Hypothesis::custom("is-" + out, [target](const Example& e) {
          return e.x1() == target ? 1 : 0;
        });
      }
      return Hypothesis::constant(0);
    };
  }
  if (name == "memorizer") {
    (void)opts;
    return [](const std::string& out) {
      // Keys on the first point coordinate; the precision-17 leak
      // round-trips through stod exactly.
      auto memory = std::make_shared<std::map<double, int>>();
      std::istringstream in(out);
      std::string item;
      while (std::getline(in, item, ';')) {
        const auto colon = item.rfind(':');
        if (colon == std::string::npos) continue;
        (*memory)[std::stod(item.substr(0, colon))] =
            item[colon + 1] == '1' ? 1 : 0;
      }
      return Hypothesis::custom("memorizer", [memory](const Example& e) {
        const auto it = memory->find(e.x1());
        const int guess = it == memory->end() ? 0 : it->second;
        return e.label == guess ? 1 : 0;
      });
    };
  }
  throw InvalidArgumentError("unknown adversary '" + name + "'");
}

}  // namespace genlab
