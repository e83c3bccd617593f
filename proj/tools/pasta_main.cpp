// Copyright 2026 The pasta Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: generate synthetic instances and datasets, fit
// choice models, solve assortment problems (exact, pessimistic, or as-if),
// and run seeded method-comparison experiments.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pasta/experiment.hpp"
#include "pasta/json_io.hpp"
#include "pasta/pasta_solver.hpp"

namespace {

using namespace pasta;

std::string fmt17(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string items_string(const Assortment& s) {
  std::string out;
  for (std::size_t i = 0; i < s.items.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s.items[i]);
  }
  return out;
}

int default_workers() {
  if (const char* env = std::getenv("PASTA_WORKERS")) {
    const int value = std::atoi(env);
    if (value >= 1) return value;
  }
  return 1;
}

struct GenerateArgs {
  std::string family = "mnl";
  int num_items = 15;
  int cap = 4;
  int num_nests = 3;
  int nest_size = 5;
  int dim = 8;
  double p_star = 0.1;
  int n = 0;
  std::uint64_t seed = 0;
  std::string out_instance;
  std::string out_data;
};

int cmd_generate(const GenerateArgs& args) {
  Instance instance;
  if (args.family == "mnl") {
    instance = gen_mnl_instance(args.num_items, args.cap, args.dim, args.seed);
  } else if (args.family == "nl") {
    instance = gen_nl_instance(args.num_nests, args.nest_size, args.dim, args.seed);
  } else {
    std::cerr << "generate supports --family mnl|nl\n";
    return 1;
  }
  const std::string text = instance_to_json(instance);
  if (args.out_instance.empty()) {
    std::cout << text;
  } else {
    write_file(args.out_instance, text);
  }
  if (args.n > 0) {
    SamplingPlan plan;
    plan.p_star = args.p_star;
    plan.seed = Rng::mix(args.seed, 2);
    const OfflineDataset data = sample_dataset(instance, args.n, plan);
    if (args.out_data.empty()) {
      std::cout << dataset_to_jsonl(data);
    } else {
      write_file(args.out_data, dataset_to_jsonl(data));
    }
  }
  return 0;
}

struct MinimaxArgs {
  int dim = 2;
  long n = 4;
  std::uint64_t seed = 0;
  std::string out_instance;
};

int cmd_minimax(const MinimaxArgs& args) {
  const auto [instance, plan] = gen_minimax_instance(args.dim, args.n, args.seed);
  std::string text = instance_to_json(instance);
  // append the logging plan so the construction is self-contained
  text.insert(text.rfind("\n}"), ",\n  \"sampling\": {\"p_star\": " + fmt17(plan.p_star) +
                                     ", \"seed\": " + std::to_string(plan.seed) + "}");
  if (args.out_instance.empty()) {
    std::cout << text;
  } else {
    write_file(args.out_instance, text);
  }
  return 0;
}

struct EstimateArgs {
  std::string data_path;
  std::string catalog_path;
  std::string instance_path;
  std::string family = "mnl";
  std::uint64_t seed = 0;
  std::string alpha_mode = "empirical";
  double delta = 0.05;
  int lcl_classes = 2;
  std::string out;
};

int cmd_estimate(const EstimateArgs& args) {
  ItemCatalog catalog;
  if (!args.instance_path.empty()) {
    catalog = instance_from_json(read_file(args.instance_path)).catalog;
  } else if (!args.catalog_path.empty()) {
    catalog = catalog_from_json(read_file(args.catalog_path));
  } else {
    std::cerr << "estimate needs --catalog or --instance\n";
    return 1;
  }
  const OfflineDataset data = dataset_from_jsonl(read_file(args.data_path));
  const Family family = family_from_name(args.family);

  FitConfig config;
  const ChoiceModel init =
      default_init(family, catalog, config.bounds, Rng::mix(args.seed, 1), args.lcl_classes);
  const FitResult fit = fit_mle(data, catalog, init, config);

  double alpha = 0.0;
  if (args.alpha_mode == "empirical") {
    alpha = empirical_alpha(fit.loss);
  } else if (args.alpha_mode == "theoretical") {
    const double dim = family_dimension(family, catalog.feature_dim, fit.model.num_classes());
    const double complexity =
        family_complexity(family, fit.model.num_classes(), catalog, config.bounds);
    alpha = critical_value(dim, complexity, data.size(), args.delta);
  } else {
    std::cerr << "estimate supports --alpha-mode empirical|theoretical\n";
    return 1;
  }

  std::string model_json = model_to_json(fit.model);
  model_json.pop_back();  // trailing newline
  std::string text = "{\n  \"model\": " + model_json + ",\n  \"loss\": " + fmt17(fit.loss) +
                     ",\n  \"alpha\": " + fmt17(alpha) + ",\n  \"alpha_mode\": \"" +
                     args.alpha_mode + "\",\n  \"n\": " + std::to_string(data.size()) +
                     ",\n  \"termination\": \"" + fit_termination_name(fit.reason) +
                     "\",\n  \"iterations\": " + std::to_string(fit.iterations) + "\n}\n";
  if (args.out.empty()) {
    std::cout << text;
  } else {
    write_file(args.out, text);
  }
  return 0;
}

struct SolveArgs {
  std::string instance_path;
  std::string catalog_path;
  std::string model_path;
  std::string data_path;
  std::string method = "exact";
  std::string family;
  int cap = 0;
  double alpha = -1.0;
  std::string alpha_mode;
  int outer_iters = 30;
  int gdls_steps = 3;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_solve(const SolveArgs& args) {
  ItemCatalog catalog;
  AssortmentSpace space = AssortmentSpace::unconstrained();
  ChoiceModel known_model;
  bool have_model = false;
  Family family = Family::kMnl;

  if (!args.instance_path.empty()) {
    Instance instance = instance_from_json(read_file(args.instance_path));
    catalog = instance.catalog;
    space = instance.space;
    known_model = instance.true_model;
    have_model = true;
    family = instance.true_model.family();
  } else if (!args.catalog_path.empty()) {
    catalog = catalog_from_json(read_file(args.catalog_path));
    if (catalog.has_nests()) space = AssortmentSpace::nested_prefix_free();
  } else {
    std::cerr << "solve needs --instance or --catalog\n";
    return 1;
  }
  if (!args.model_path.empty()) {
    known_model = model_from_json(read_file(args.model_path));
    known_model.validate(&catalog, ParamBounds{});
    have_model = true;
    family = known_model.family();
  }
  if (args.cap > 0) space = AssortmentSpace::capped(args.cap);
  if (!args.family.empty()) family = family_from_name(args.family);

  Assortment chosen;
  double value = 0.0;
  if (args.method == "exact") {
    if (!have_model) {
      std::cerr << "solve --method exact needs a model (--model or --instance)\n";
      return 1;
    }
    const OptResult result = best_assortment(known_model, catalog, space);
    chosen = result.assortment;
    value = result.value;
  } else if (args.method == "pasta" || args.method == "as-if") {
    if (args.data_path.empty()) {
      std::cerr << "solve --method " << args.method << " needs --data\n";
      return 1;
    }
    const OfflineDataset data = dataset_from_jsonl(read_file(args.data_path));
    PastaConfig config;
    config.max_outer_iters = args.outer_iters;
    config.gdls_steps = args.gdls_steps;
    if (!args.alpha_mode.empty()) config.alpha_mode = alpha_mode_from_name(args.alpha_mode);
    if (args.alpha >= 0.0) {
      config.alpha_mode = AlphaMode::kFixed;
      config.alpha = args.alpha;
    }
    if (args.method == "pasta") {
      const PastaResult result = pasta_solve(data, catalog, family, space, config, args.seed);
      chosen = result.assortment;
      value = result.worst_case_value;
    } else {
      const OptResult result = as_if_solve(data, catalog, family, space, config.fit, args.seed);
      chosen = result.assortment;
      value = result.value;
    }
  } else {
    std::cerr << "solve supports --method exact|pasta|as-if\n";
    return 1;
  }

  const std::string text = "assortment: " + items_string(chosen) + "\nvalue: " + fmt17(value) + "\n";
  std::cout << text;
  if (!args.out.empty()) {
    std::string json = "{\n  \"assortment\": [";
    for (std::size_t i = 0; i < chosen.items.size(); ++i) {
      if (i) json += ", ";
      json += std::to_string(chosen.items[i]);
    }
    json += "],\n  \"value\": " + fmt17(value) + ",\n  \"method\": \"" + args.method + "\"\n}\n";
    write_file(args.out, json);
  }
  return 0;
}

struct ExperimentArgs {
  std::string config_path;
  std::string out_dir = ".";
  int workers = 0;
  int trials = 0;
};

int cmd_experiment(const ExperimentArgs& args) {
  ExperimentConfig config = experiment_config_from_json(read_file(args.config_path));
  if (args.trials > 0) config.num_trials = args.trials;
  config.workers = args.workers > 0 ? args.workers : default_workers();

  const ExperimentSummary summary = run_experiment(config);

  std::filesystem::create_directories(args.out_dir);
  const std::string base = args.out_dir + "/";
  write_file(base + "trials.csv", trials_csv(summary, config));
  write_file(base + "aggregate.csv", aggregate_csv(summary));
  int failures = 0;
  for (const auto& outcome : summary.outcomes)
    if (outcome.failed()) ++failures;
  if (failures > 0) write_file(base + "errors.csv", errors_csv(summary));

  std::cout << aggregate_csv(summary);
  if (failures > 0)
    std::cerr << failures << " trial(s) failed; see " << base << "errors.csv\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"offline assortment optimization with likelihood-ratio pessimism"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "generate a synthetic instance and dataset");
  generate->add_option("--family", gen.family, "choice model family: mnl or nl");
  generate->add_option("--items,-N", gen.num_items, "number of items (mnl)");
  generate->add_option("--cap,-K", gen.cap, "cardinality cap (mnl)");
  generate->add_option("--nests", gen.num_nests, "number of nests (nl)");
  generate->add_option("--nest-size", gen.nest_size, "items per nest (nl)");
  generate->add_option("--dim,-d", gen.dim, "feature dimension");
  generate->add_option("--p-star", gen.p_star, "logging probability of the optimal assortment");
  generate->add_option("--n", gen.n, "records to sample (0 = instance only)");
  generate->add_option("--seed", gen.seed, "generator seed");
  generate->add_option("--out-instance", gen.out_instance, "instance JSON path (default stdout)");
  generate->add_option("--out-data", gen.out_data, "dataset JSON-lines path (default stdout)");

  MinimaxArgs mm;
  CLI::App* minimax = app.add_subcommand("minimax-instance",
                                         "generate the adversarial lower-bound instance");
  minimax->add_option("--dim,-d", mm.dim, "dimension (= number of items)");
  minimax->add_option("--n", mm.n, "sample size the construction targets (n >= d)");
  minimax->add_option("--seed", mm.seed, "generator seed");
  minimax->add_option("--out-instance", mm.out_instance, "instance JSON path (default stdout)");

  EstimateArgs est;
  CLI::App* estimate = app.add_subcommand("estimate", "fit a choice model from logged data");
  estimate->add_option("--data", est.data_path, "dataset JSON-lines path")->required();
  estimate->add_option("--catalog", est.catalog_path, "catalog JSON path");
  estimate->add_option("--instance", est.instance_path, "instance JSON path (catalog source)");
  estimate->add_option("--family", est.family, "mnl, lcl, or nl");
  estimate->add_option("--seed", est.seed, "seed for the fit starting point");
  estimate->add_option("--alpha-mode", est.alpha_mode, "empirical or theoretical");
  estimate->add_option("--delta", est.delta, "tail level for the theoretical radius");
  estimate->add_option("--lcl-classes", est.lcl_classes, "mixture size for the lcl family");
  estimate->add_option("--out", est.out, "output JSON path (default stdout)");

  SolveArgs sol;
  CLI::App* solve = app.add_subcommand("solve", "choose an assortment");
  solve->add_option("--instance", sol.instance_path, "instance JSON path");
  solve->add_option("--catalog", sol.catalog_path, "catalog JSON path");
  solve->add_option("--model", sol.model_path, "model JSON path (exact method)");
  solve->add_option("--data", sol.data_path, "dataset JSON-lines path (pasta / as-if)");
  solve->add_option("--method", sol.method, "exact, pasta, or as-if");
  solve->add_option("--family", sol.family, "model family for data-driven methods");
  solve->add_option("--cap", sol.cap, "override: cardinality-capped space");
  solve->add_option("--alpha", sol.alpha, "fixed uncertainty radius");
  solve->add_option("--alpha-mode", sol.alpha_mode, "fixed, empirical, or theoretical");
  solve->add_option("--T", sol.outer_iters, "outer alternations");
  solve->add_option("--gdls-steps", sol.gdls_steps, "descent steps per alternation");
  solve->add_option("--seed", sol.seed, "seed (fit init and initial assortment draw)");
  solve->add_option("--out", sol.out, "solution JSON path");

  ExperimentArgs exp;
  CLI::App* experiment = app.add_subcommand("experiment", "paired pasta vs as-if trials");
  experiment->add_option("--config", exp.config_path, "experiment config JSON")->required();
  experiment->add_option("--out-dir", exp.out_dir, "output directory for CSV files");
  experiment->add_option("--workers", exp.workers,
                         "worker threads (default: PASTA_WORKERS env or 1)");
  experiment->add_option("--trials", exp.trials, "override num_trials");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return cmd_generate(gen);
    if (minimax->parsed()) return cmd_minimax(mm);
    if (estimate->parsed()) return cmd_estimate(est);
    if (solve->parsed()) return cmd_solve(sol);
    if (experiment->parsed()) return cmd_experiment(exp);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
