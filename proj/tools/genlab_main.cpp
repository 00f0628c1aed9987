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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "genlab/compression.hpp"
#include "genlab/composition.hpp"
#include "genlab/errors.hpp"
#include "genlab/harness.hpp"
#include "genlab/registry.hpp"
#include "genlab/report.hpp"
#include "genlab/verification.hpp"

namespace {

using namespace genlab;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string json_out;
  std::string csv_out;
  std::uint64_t cap = 10'000'000;
  bool quiet = false;
};

// One "x" or "x:y" token per domain value.
std::vector<Example> parse_domain(const std::string& spec) {
  std::vector<Example> values;
  std::istringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    const auto colon = token.find(':');
    if (colon == std::string::npos) {
      values.emplace_back(std::stod(token), 0);
    } else {
      values.emplace_back(std::stod(token.substr(0, colon)),
                          std::stoi(token.substr(colon + 1)));
    }
  }
  if (values.empty()) {
    throw InvalidArgumentError("empty domain specification");
  }
  return values;
}

// "uniform" over the domain, or comma-separated "x[:y]=w" pairs.
PopulationDistribution parse_dist(const std::string& spec,
                                  const std::vector<Example>& domain) {
  if (spec == "uniform") {
    return PopulationDistribution::uniform(domain);
  }
  std::vector<Example> support;
  std::vector<double> weights;
  std::istringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgumentError("distribution entries need the form x=w");
    }
    const std::vector<Example> value = parse_domain(token.substr(0, eq));
    support.push_back(value.front());
    weights.push_back(std::stod(token.substr(eq + 1)));
  }
  return PopulationDistribution(std::move(support), std::move(weights));
}

std::vector<std::size_t> parse_sizes(const std::string& spec) {
  std::vector<std::size_t> sizes;
  std::istringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (!token.empty()) sizes.push_back(std::stoul(token));
  }
  return sizes;
}

Json sample_to_json(const Sample& s) {
  bool labelled = false;
  for (const auto& e : s.entries) labelled = labelled || e.label != 0;
  Json out = Json::array();
  for (const auto& e : s.entries) {
    if (labelled) {
      char buffer[48];
      std::snprintf(buffer, sizeof(buffer), "%.17g:%d", e.x1(), e.label);
      out.push_back(std::string(buffer));
    } else {
      out.push_back(e.x1());
    }
  }
  return out;
}

void emit(const GlobalOptions& global, const Json& body) {
  const std::string text = dump_json(body);
  if (!global.quiet) std::cout << text << "\n";
  if (!global.json_out.empty()) {
    std::ofstream out(global.json_out);
    out << text << "\n";
  }
}

void emit_report(const GlobalOptions& global, const ExperimentReport& report) {
  emit(global, report.to_json());
  if (!global.csv_out.empty()) {
    std::ofstream out(global.csv_out);
    out << report.csv();
  }
}

// Monte Carlo "learn" run: random realizable tasks for the chosen
// scheme, reporting how often the learner's value overfit exceeds the
// release bound for its selection size.
ExperimentReport run_learn(const std::string& scheme_name, std::size_t n,
                           double delta, std::size_t trials,
                           std::uint64_t seed, std::size_t dim,
                           std::size_t k) {
  std::size_t failures = 0;
  double bound = 0.0;
  if (scheme_name == "threshold") {
    bound = rg_bound_compression(n, 1, delta);
  } else if (scheme_name == "rectangle") {
    bound = rg_bound_compression(n, 2 * dim, delta);
  } else if (scheme_name == "subsample") {
    // Approximate compression via subsampling pays a quartic root.
    bound = std::pow(std::log(static_cast<double>(n) / delta) /
                         static_cast<double>(n),
                     0.25);
  } else {
    throw InvalidArgumentError("unknown scheme '" + scheme_name + "'");
  }

  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = stream_rng(seed, "learn-trial", t);
    if (scheme_name == "rectangle" && dim > 1) {
      throw InvalidArgumentError("learn: only dim = 1 rectangles for now");
    }
    const std::size_t grid = 256;
    const double hi_cut =
        0.2 + 0.8 * uniform01(rng);
    const double lo_cut =
        scheme_name == "rectangle" ? hi_cut * uniform01(rng) : 0.0;
    std::vector<Example> support;
    for (std::size_t i = 0; i < grid; ++i) {
      const double x = static_cast<double>(i) / static_cast<double>(grid);
      const int label =
          scheme_name == "rectangle"
              ? (x >= lo_cut && x <= hi_cut ? 1 : 0)
              : (x <= hi_cut ? 1 : 0);
      support.emplace_back(x, label);
    }
    const PopulationDistribution d =
        PopulationDistribution::uniform(std::move(support));
    const Sample s = draw_sample(d, n, rng);

    CompressionScheme scheme = threshold_scheme();
    if (scheme_name == "rectangle") {
      scheme = rectangle_scheme(dim);
    } else if (scheme_name == "subsample") {
      scheme = subsample_scheme(
          [](const Sample& sub) {
            return run_compression_learner(threshold_scheme(), sub)
                .hypothesis;
          },
          k, splitmix64(seed ^ (t + 1)));
    }
    const LearnerResult result = run_compression_learner(scheme, s);
    if (std::abs(empirical_value(result.hypothesis, s) -
                 true_value(result.hypothesis, d)) > bound) {
      ++failures;
    }
  }

  const double rate =
      static_cast<double>(failures) / static_cast<double>(trials);
  const double hw = wilson_ci_95(failures, trials).half_width();
  ExperimentReport report;
  report.name = "learn-" + scheme_name;
  report.config = {{"scheme", scheme_name}, {"n", n},       {"delta", delta},
                   {"trials", trials},      {"seed", seed}, {"dim", dim},
                   {"k", k}};
  report.add_metric("bound", bound);
  report.add_metric("observed_failure_rate", rate);
  report.add_metric("trials", static_cast<double>(trials));
  report.add_metric("wilson_half_width", hw);
  report.pass = rate <= delta + 3.0 * hw;
  return report;
}

int run(int argc, char** argv) {
  CLI::App app{"exact and Monte Carlo certification of randomized "
               "mechanisms: differential privacy, perfect generalization, "
               "robust generalization"};
  app.require_subcommand(1);
  // Let global flags appear after the subcommand as well.
  app.fallthrough();

  GlobalOptions global;
  if (const char* env_cap = std::getenv("GENLAB_CAP")) {
    global.cap = std::strtoull(env_cap, nullptr, 10);
  }
  app.add_option("--seed", global.seed, "root seed for randomized runs");
  app.add_option("--json-out", global.json_out, "write the JSON result here");
  app.add_option("--csv-out", global.csv_out, "write metrics as CSV here");
  app.add_option("--cap", global.cap, "enumeration cap (PMF evaluations)");
  app.add_flag("--quiet", global.quiet, "suppress stdout JSON");

  RegistryOptions reg;
  std::string mech_name, sim_name = "dp-to-pg", adversary_name = "identity";
  std::string domain_spec = "0,1", dist_spec = "uniform";
  std::size_t n = 8;
  double eps = 0.0, delta_target = 0.0, beta_target = 0.0;
  double alpha = 0.1, max_rate = 1.0;
  std::size_t trials = 10'000;

  auto add_mech_options = [&](CLI::App* cmd) {
    cmd->add_option("--mech", mech_name, "mechanism registry name")
        ->required();
    cmd->add_option("--n", n, "sample size");
    cmd->add_option("--mech-eps", reg.mech_eps,
                    "mechanism epsilon (noisy-majority, exp-learner)");
    cmd->add_option("--mech-beta", reg.mech_beta, "exp-learner beta");
    cmd->add_option("--scale", reg.scale, "laplace / noisy-max noise scale");
  };

  CLI::App* list_cmd =
      app.add_subcommand("list-mechanisms", "print registry names");

  CLI::App* dp_cmd = app.add_subcommand(
      "verify-dp", "exact worst-case closeness over neighboring samples");
  add_mech_options(dp_cmd);
  dp_cmd->add_option("--domain", domain_spec, "comma-separated values");
  dp_cmd->add_option("--eps", eps, "closeness epsilon")->required();
  dp_cmd->add_option("--delta", delta_target, "pass when delta_hat <= this");

  CLI::App* pg_cmd = app.add_subcommand(
      "verify-pg", "exact failing-sample mass against a simulator");
  add_mech_options(pg_cmd);
  pg_cmd->add_option("--sim", sim_name,
                     "simulator: dp-to-pg, exp-learner, constant:<o>");
  pg_cmd->add_option("--domain", domain_spec, "comma-separated values");
  pg_cmd->add_option("--dist", dist_spec, "uniform or x[:y]=w pairs");
  pg_cmd->add_option("--eps", eps, "closeness epsilon")->required();
  pg_cmd->add_option("--delta", delta_target, "closeness delta");
  pg_cmd->add_option("--beta", beta_target, "pass when beta_hat <= this");

  CLI::App* rg_cmd = app.add_subcommand(
      "verify-rg", "Monte Carlo overfit rate of a post-processing adversary");
  add_mech_options(rg_cmd);
  rg_cmd->add_option("--adversary", adversary_name,
                     "identity, constant, or memorizer");
  rg_cmd->add_option("--domain", domain_spec, "comma-separated values");
  rg_cmd->add_option("--dist", dist_spec, "uniform or x[:y]=w pairs");
  rg_cmd->add_option("--alpha", alpha, "overfit threshold")->required();
  rg_cmd->add_option("--trials", trials, "Monte Carlo trials");
  rg_cmd->add_option("--max-rate", max_rate, "pass when rate <= this");

  std::string compose_mode = "basic", params_json;
  CLI::App* compose_cmd =
      app.add_subcommand("compose", "closed-form composition parameters");
  compose_cmd->add_option("--mode", compose_mode, "basic or advanced");
  compose_cmd->add_option("--params-json", params_json,
                          "basic: [{\"beta\":b,\"eps\":e},...]; advanced: "
                          "{\"k\":k,\"eps\":e,\"delta\":d,\"delta_prime\":p}")
      ->required();

  std::string scheme_name = "threshold";
  double learn_delta = 0.05;
  std::size_t learn_n = 1000, learn_dim = 1, learn_k = 50;
  CLI::App* learn_cmd = app.add_subcommand(
      "learn", "compression learners on random realizable tasks");
  learn_cmd->add_option("--scheme", scheme_name,
                        "threshold, rectangle, or subsample");
  learn_cmd->add_option("--n", learn_n, "sample size");
  learn_cmd->add_option("--delta", learn_delta, "failure budget");
  learn_cmd->add_option("--trials", trials, "Monte Carlo trials");
  learn_cmd->add_option("--dim", learn_dim, "rectangle dimension");
  learn_cmd->add_option("--k", learn_k, "subsample size");

  std::string experiment_name;
  double exp_eps = 0.2, exp_beta = 0.05, exp_alpha = 0.3, exp_gamma = 0.1;
  std::string ns_spec = "16,32,64,128,256";
  std::size_t exp_n = 1000, exp_queries = 4;
  double exp_delta = 0.05;
  std::size_t exp_trials = 10'000;
  CLI::App* exp_cmd =
      app.add_subcommand("experiment", "reproducible report generators");
  exp_cmd
      ->add_option("name", experiment_name,
                   "threshold, generic, tightness, or overfit")
      ->required();
  exp_cmd->add_option("--n", exp_n, "sample size");
  exp_cmd->add_option("--delta", exp_delta, "failure budget");
  exp_cmd->add_option("--trials", exp_trials, "Monte Carlo trials");
  exp_cmd->add_option("--eps", exp_eps, "epsilon parameter");
  exp_cmd->add_option("--beta", exp_beta, "beta parameter");
  exp_cmd->add_option("--alpha", exp_alpha, "accuracy parameter");
  exp_cmd->add_option("--gamma", exp_gamma, "failure probability");
  exp_cmd->add_option("--ns", ns_spec, "comma-separated sample sizes");
  exp_cmd->add_option("--queries", exp_queries, "statistical query count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  VerifyOptions verify_opts;
  verify_opts.enumeration_cap = global.cap;
  reg.n = n;

  if (list_cmd->parsed()) {
    Json names = Json::array();
    for (const auto& name : registry_mechanism_names()) names.push_back(name);
    emit(global, Json{{"mechanisms", names}});
    return kExitPass;
  }

  if (dp_cmd->parsed()) {
    const Mechanism m = make_mechanism(mech_name, reg);
    const DpVerdict v =
        verify_dp_exact(m, parse_domain(domain_spec), n, eps, verify_opts);
    const bool pass = v.delta_hat <= delta_target + kCloseTol;
    emit(global, Json{{"mechanism", m.name},
                      {"n", n},
                      {"eps", eps},
                      {"delta_hat", v.delta_hat},
                      {"witness_a", sample_to_json(v.witness_a)},
                      {"witness_b", sample_to_json(v.witness_b)},
                      {"delta_target", delta_target},
                      {"pass", pass}});
    return pass ? kExitPass : kExitFail;
  }

  if (pg_cmd->parsed()) {
    const Mechanism m = make_mechanism(mech_name, reg);
    const Simulator sim = make_simulator(sim_name, m, reg);
    const PopulationDistribution d =
        parse_dist(dist_spec, parse_domain(domain_spec));
    const PgVerdict v =
        verify_pg_exact(m, sim, d, n, eps, delta_target, verify_opts);
    const bool pass = v.beta_hat <= beta_target + kCloseTol;
    Json worst = Json::array();
    for (const auto& f : v.worst_samples) {
      worst.push_back(Json{{"sample", sample_to_json(f.sample)},
                           {"mass", f.mass},
                           {"delta", f.delta}});
    }
    emit(global, Json{{"mechanism", m.name},
                      {"simulator", sim.name},
                      {"simulator_pmf", pmf_to_json(sim.exact_pmf(d, n))},
                      {"n", n},
                      {"eps", eps},
                      {"delta", delta_target},
                      {"beta_hat", v.beta_hat},
                      {"worst_samples", worst},
                      {"beta_target", beta_target},
                      {"pass", pass}});
    return pass ? kExitPass : kExitFail;
  }

  if (rg_cmd->parsed()) {
    const Mechanism m = make_mechanism(mech_name, reg);
    const Adversary adversary = make_adversary(adversary_name, reg);
    const PopulationDistribution d =
        parse_dist(dist_spec, parse_domain(domain_spec));
    const RgVerdict v =
        verify_rg_mc(m, adversary, d, n, alpha, trials, global.seed);
    const bool pass = v.failure_rate <= max_rate;
    emit(global, Json{{"mechanism", m.name},
                      {"adversary", adversary_name},
                      {"n", n},
                      {"alpha", alpha},
                      {"trials", v.trials},
                      {"failures", v.failures},
                      {"failure_rate", v.failure_rate},
                      {"wilson_ci_95", Json::array({v.wilson.lo, v.wilson.hi})},
                      {"max_rate", max_rate},
                      {"pass", pass}});
    return pass ? kExitPass : kExitFail;
  }

  if (compose_cmd->parsed()) {
    const Json params = Json::parse(params_json);
    if (compose_mode == "basic") {
      double beta = 0.0, total_eps = 0.0;
      for (const auto& entry : params) {
        beta += entry.at("beta").get<double>();
        total_eps += entry.at("eps").get<double>();
      }
      emit(global, Json{{"mode", "basic"},
                        {"k", params.size()},
                        {"beta", beta},
                        {"eps", total_eps},
                        {"delta", 0.0}});
      return kExitPass;
    }
    if (compose_mode == "advanced") {
      const ComposedPgParams out = advanced_bound(
          params.at("k").get<std::size_t>(), params.at("eps").get<double>(),
          params.at("delta").get<double>(),
          params.at("delta_prime").get<double>());
      emit(global, Json{{"mode", "advanced"},
                        {"k", out.k},
                        {"eps", out.eps},
                        {"delta", out.delta}});
      return kExitPass;
    }
    throw InvalidArgumentError("unknown compose mode '" + compose_mode + "'");
  }

  if (learn_cmd->parsed()) {
    const ExperimentReport report =
        run_learn(scheme_name, learn_n, learn_delta, trials, global.seed,
                  learn_dim, learn_k);
    emit_report(global, report);
    return report.pass ? kExitPass : kExitFail;
  }

  if (exp_cmd->parsed()) {
    ExperimentReport report;
    if (experiment_name == "threshold") {
      report = threshold_experiment(exp_n, exp_delta, exp_trials, global.seed);
    } else if (experiment_name == "generic") {
      const HypothesisClass pair(
          {Hypothesis::constant(0), Hypothesis::constant(1)});
      const PopulationDistribution d = PopulationDistribution(
          {Example(0.0, 0), Example(0.0, 1)}, {0.75, 0.25});
      report = generic_learner_experiment(pair, d, exp_eps, exp_alpha,
                                          exp_gamma, global.seed, exp_trials);
    } else if (experiment_name == "tightness") {
      report = tightness_experiment(exp_eps, exp_beta, parse_sizes(ns_spec),
                                    global.seed);
    } else if (experiment_name == "overfit") {
      report =
          overfit_experiment(exp_n, exp_queries, global.seed, exp_trials);
    } else {
      throw InvalidArgumentError("unknown experiment '" + experiment_name +
                                 "'");
    }
    emit_report(global, report);
    return report.pass ? kExitPass : kExitFail;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const genlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
