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

#ifndef PASTA_EXPERIMENT_HPP
#define PASTA_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pasta/pasta_solver.hpp"
#include "pasta/simgen.hpp"

namespace pasta {

enum class Method { kPasta, kAsIf };

std::string method_name(Method method);

// Problem scenario for a batch of trials.
struct ScenarioConfig {
  Family family = Family::kMnl;
  int num_items = 0;  // N (MNL)
  int cap = 0;        // K, the cardinality cap (MNL)
  int num_nests = 0;  // K (NL)
  int nest_size = 0;  // kappa (NL)
  int dim = 0;        // d

  void validate() const;
};

struct ExperimentConfig {
  ScenarioConfig scenario;
  double p_star = 0.1;
  std::vector<int> sample_sizes;
  int num_trials = 1;
  PastaConfig pasta;
  std::uint64_t base_seed = 0;
  int workers = 1;

  void validate() const;
};

struct TrialResult {
  Method method = Method::kPasta;
  int n = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  double regret = 0.0;
  double accuracy = 0.0;
  double wall_time = 0.0;  // seconds; measured, not derived from the seed
};

// One paired trial: both methods on the identical dataset. A failed trial
// carries its error message instead of results.
struct TrialOutcome {
  int n = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::optional<TrialResult> pasta;
  std::optional<TrialResult> as_if;
  std::string error;

  bool failed() const { return !error.empty(); }
};

// Revenue gap to the instance optimum, clamped at zero within -1e-10 slack;
// a gap below that slack means the optimality certificate was violated and
// raises std::logic_error.
double regret(const Instance& instance, const Assortment& s_hat);

// |s_hat intersect s_star| / |s_star|.
double accuracy(const Assortment& s_hat, const Assortment& s_star);

// Per-trial seed: Rng::mix(base_seed, trial_index). The instance and the
// dataset stream depend only on (base_seed, trial_index), so sample sizes
// share instances and nested record prefixes across a trial row.
std::uint64_t trial_seed(std::uint64_t base_seed, int trial_index);

// Generates instance + dataset for the derived seed and runs both methods on
// the same records. Deterministic per (config, n, trial_index).
TrialOutcome run_trial(const ExperimentConfig& config, int n, int trial_index);

struct AggregateRow {
  Method method = Method::kPasta;
  int n = 0;
  int trials = 0;  // successful trials aggregated
  double regret_mean = 0.0;
  double regret_std = 0.0;
  double accuracy_mean = 0.0;
  double accuracy_std = 0.0;
};

struct ExperimentSummary {
  std::vector<TrialOutcome> outcomes;   // ordered by (n, trial)
  std::vector<AggregateRow> aggregates; // ordered by (method, n)
};

// Runs num_trials paired trials at every sample size, optionally across
// worker threads; the output is ordered by trial index and is a pure
// function of the config regardless of scheduling (wall_time aside).
ExperimentSummary run_experiment(const ExperimentConfig& config);

// CSV emission. trials.csv columns:
//   method,n,p,d,trial,seed,regret,accuracy,wall_time
// aggregate.csv columns:
//   method,n,trials,regret_mean,regret_std,accuracy_mean,accuracy_std
// errors.csv (failed trials): n,trial,seed,error
std::string trials_csv(const ExperimentSummary& summary, const ExperimentConfig& config);
std::string aggregate_csv(const ExperimentSummary& summary);
std::string errors_csv(const ExperimentSummary& summary);

}  // namespace pasta

#endif  // PASTA_EXPERIMENT_HPP
