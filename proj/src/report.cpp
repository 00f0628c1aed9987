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

#include "genlab/report.hpp"

#include <cmath>
#include <cstdio>

#include "genlab/errors.hpp"

namespace genlab {

namespace {

std::string format_number(double v) {
  if (!std::isfinite(v)) {
    if (std::isnan(v)) return "\"nan\"";
    return v > 0 ? "\"inf\"" : "\"-inf\"";
  }
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

void dump(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent) * depth, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += Json(key).dump();
        out += ": ";
        dump(value, out, indent, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump(j[i], out, indent, depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_number(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump(j, out, indent, 0);
  return out;
}

Json pmf_to_json(const FinitePmf& p) {
  Json j;
  j["outcomes"] = p.outcomes();
  j["probs"] = p.probs();
  return j;
}

void ExperimentReport::add_metric(const std::string& metric_name,
                                  double value) {
  metrics.emplace_back(metric_name, value);
}

double ExperimentReport::metric(const std::string& metric_name) const {
  for (const auto& [key, value] : metrics) {
    if (key == metric_name) return value;
  }
  throw InvalidArgumentError("ExperimentReport: no metric named '" +
                             metric_name + "'");
}

Json ExperimentReport::to_json(bool include_runtime) const {
  Json j;
  j["name"] = name;
  j["config"] = config;
  Json m = Json::object();
  for (const auto& [key, value] : metrics) m[key] = value;
  j["metrics"] = m;
  j["pass"] = pass;
  if (include_runtime) j["runtime_ms"] = runtime_ms;
  return j;
}

std::string ExperimentReport::stable_json() const {
  return dump_json(to_json(/*include_runtime=*/false));
}

std::string ExperimentReport::csv() const {
  std::string out = "metric,value\n";
  for (const auto& [key, value] : metrics) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    out += key + "," + buffer + "\n";
  }
  return out;
}

}  // namespace genlab
