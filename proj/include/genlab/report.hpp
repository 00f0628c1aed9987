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

#ifndef GENLAB_REPORT_HPP_
#define GENLAB_REPORT_HPP_

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "genlab/prob.hpp"

namespace genlab {

using Json = nlohmann::ordered_json;

// Serializes with doubles at 17 significant digits so that re-parsing
// reproduces every value bit for bit. Non-finite values become strings.
std::string dump_json(const Json& j, int indent = 2);

// {"outcomes": [...], "probs": [...]}
Json pmf_to_json(const FinitePmf& p);

// A reproducible experiment record: the full configuration (parameters
// and seed), named metrics in a fixed order, and a pass flag. Metrics
// are bit-stable under re-runs with the same config; runtime_ms is
// informational and excluded from the stable serialization.
struct ExperimentReport {
  std::string name;
  Json config = Json::object();
  std::vector<std::pair<std::string, double>> metrics;
  bool pass = false;
  double runtime_ms = 0.0;

  void add_metric(const std::string& metric_name, double value);
  double metric(const std::string& metric_name) const;

  Json to_json(bool include_runtime = true) const;
  // Byte-stable rendering (no runtime field).
  std::string stable_json() const;
  std::string csv() const;
};

}  // namespace genlab

#endif  // GENLAB_REPORT_HPP_
