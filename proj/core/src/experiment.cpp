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

#include "pasta/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pasta {

namespace {

std::string fmt_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string method_name(Method method) {
  switch (method) {
    case Method::kPasta: return "pasta";
    case Method::kAsIf: return "as_if";
  }
  throw std::logic_error("unknown method");
}

void ScenarioConfig::validate() const {
  if (dim < 1) throw std::invalid_argument("scenario dimension must be positive");
  if (family == Family::kMnl) {
    if (num_items < 1 || cap < 1 || cap > num_items)
      throw std::invalid_argument("MNL scenario requires N >= K >= 1");
  } else if (family == Family::kNl) {
    if (num_nests < 1 || nest_size < 1)
      throw std::invalid_argument("NL scenario requires K, kappa >= 1");
  } else {
    throw std::invalid_argument("experiment scenarios cover the MNL and NL families");
  }
}

void ExperimentConfig::validate() const {
  scenario.validate();
  if (!(p_star > 0.0 && p_star <= 1.0)) throw std::invalid_argument("p_star must lie in (0,1]");
  if (sample_sizes.empty()) throw std::invalid_argument("sample_sizes must be nonempty");
  for (int n : sample_sizes)
    if (n < 1) throw std::invalid_argument("sample sizes must be positive");
  if (num_trials < 1) throw std::invalid_argument("num_trials must be at least 1");
  if (workers < 1) throw std::invalid_argument("workers must be at least 1");
  pasta.validate();
}

double regret(const Instance& instance, const Assortment& s_hat) {
  if (!instance.space.member(s_hat, instance.catalog))
    throw std::invalid_argument("regret: assortment lies outside the instance space");
  const double value = expected_revenue(instance.true_model, instance.catalog, s_hat);
  const double gap = instance.optimal_value - value;
  if (gap < -1e-10)
    throw std::logic_error("regret is negative beyond tolerance; optimality certificate violated");
  return std::max(gap, 0.0);
}

double accuracy(const Assortment& s_hat, const Assortment& s_star) {
  if (s_hat.items.empty() || s_star.items.empty())
    throw std::invalid_argument("accuracy requires nonempty assortments");
  int common = 0;
  for (int item : s_hat.items)
    if (s_star.contains(item)) ++common;
  return static_cast<double>(common) / static_cast<double>(s_star.size());
}

std::uint64_t trial_seed(std::uint64_t base_seed, int trial_index) {
  return Rng::mix(base_seed, static_cast<std::uint64_t>(trial_index));
}

TrialOutcome run_trial(const ExperimentConfig& config, int n, int trial_index) {
  config.validate();
  TrialOutcome outcome;
  outcome.n = n;
  outcome.trial = trial_index;
  outcome.seed = trial_seed(config.base_seed, trial_index);
  try {
    const std::uint64_t seed = outcome.seed;
    Instance instance;
    if (config.scenario.family == Family::kMnl) {
      instance = gen_mnl_instance(config.scenario.num_items, config.scenario.cap,
                                  config.scenario.dim, Rng::mix(seed, 1),
                                  config.pasta.fit.bounds);
    } else {
      instance = gen_nl_instance(config.scenario.num_nests, config.scenario.nest_size,
                                 config.scenario.dim, Rng::mix(seed, 1),
                                 config.pasta.fit.bounds);
    }
    SamplingPlan plan;
    plan.p_star = config.p_star;
    plan.seed = Rng::mix(seed, 2);
    const OfflineDataset dataset = sample_dataset(instance, n, plan);
    const GroupedDataset grouped(dataset, instance.catalog);

    // one MLE backs both methods; both consume the identical dataset
    const auto fit_start = std::chrono::steady_clock::now();
    const ChoiceModel init = default_init(config.scenario.family, instance.catalog,
                                          config.pasta.fit.bounds, Rng::mix(seed, 3),
                                          config.pasta.lcl_classes);
    const FitResult fit = fit_mle(grouped, instance.catalog, init, config.pasta.fit);
    const double fit_time = seconds_since(fit_start);

    const auto as_if_start = std::chrono::steady_clock::now();
    const OptResult as_if = as_if_solve_with_fit(instance.catalog, fit, instance.space);
    const double as_if_time = seconds_since(as_if_start);

    const auto pasta_start = std::chrono::steady_clock::now();
    const PastaResult pessimistic = pasta_solve_with_fit(grouped, instance.catalog, fit,
                                                         instance.space, config.pasta,
                                                         Rng::mix(seed, 4));
    const double pasta_time = seconds_since(pasta_start);

    TrialResult pasta_row;
    pasta_row.method = Method::kPasta;
    pasta_row.n = n;
    pasta_row.trial = trial_index;
    pasta_row.seed = seed;
    pasta_row.regret = regret(instance, pessimistic.assortment);
    pasta_row.accuracy = accuracy(pessimistic.assortment, instance.optimal_assortment);
    pasta_row.wall_time = fit_time + pasta_time;

    TrialResult as_if_row = pasta_row;
    as_if_row.method = Method::kAsIf;
    as_if_row.regret = regret(instance, as_if.assortment);
    as_if_row.accuracy = accuracy(as_if.assortment, instance.optimal_assortment);
    as_if_row.wall_time = fit_time + as_if_time;

    outcome.pasta = pasta_row;
    outcome.as_if = as_if_row;
  } catch (const std::exception& e) {
    outcome.pasta.reset();
    outcome.as_if.reset();
    outcome.error = e.what();
  }
  return outcome;
}

ExperimentSummary run_experiment(const ExperimentConfig& config) {
  config.validate();
  struct Task {
    int n;
    int trial;
  };
  std::vector<Task> tasks;
  for (int n : config.sample_sizes)
    for (int t = 0; t < config.num_trials; ++t) tasks.push_back({n, t});

  ExperimentSummary summary;
  summary.outcomes.resize(tasks.size());

  const int workers = std::min<int>(config.workers, static_cast<int>(tasks.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i)
      summary.outcomes[i] = run_trial(config, tasks[i].n, tasks[i].trial);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) return;
          summary.outcomes[i] = run_trial(config, tasks[i].n, tasks[i].trial);
        }
      });
    }
    for (auto& worker : pool) worker.join();
  }

  // aggregates per (method, n), successes only
  for (const Method method : {Method::kPasta, Method::kAsIf}) {
    for (const int n : config.sample_sizes) {
      AggregateRow row;
      row.method = method;
      row.n = n;
      std::vector<double> regrets, accuracies;
      for (const TrialOutcome& outcome : summary.outcomes) {
        if (outcome.n != n || outcome.failed()) continue;
        const TrialResult& r = method == Method::kPasta ? *outcome.pasta : *outcome.as_if;
        regrets.push_back(r.regret);
        accuracies.push_back(r.accuracy);
      }
      row.trials = static_cast<int>(regrets.size());
      const auto mean = [](const std::vector<double>& xs) {
        double acc = 0.0;
        for (double x : xs) acc += x;
        return xs.empty() ? 0.0 : acc / static_cast<double>(xs.size());
      };
      const auto sample_std = [&](const std::vector<double>& xs, double mu) {
        if (xs.size() < 2) return 0.0;
        double acc = 0.0;
        for (double x : xs) acc += (x - mu) * (x - mu);
        return std::sqrt(acc / static_cast<double>(xs.size() - 1));
      };
      row.regret_mean = mean(regrets);
      row.regret_std = sample_std(regrets, row.regret_mean);
      row.accuracy_mean = mean(accuracies);
      row.accuracy_std = sample_std(accuracies, row.accuracy_mean);
      summary.aggregates.push_back(row);
    }
  }
  return summary;
}

std::string trials_csv(const ExperimentSummary& summary, const ExperimentConfig& config) {
  std::ostringstream out;
  out << "method,n,p,d,trial,seed,regret,accuracy,wall_time\n";
  for (const TrialOutcome& outcome : summary.outcomes) {
    if (outcome.failed()) continue;
    for (const TrialResult* r : {&*outcome.pasta, &*outcome.as_if}) {
      out << method_name(r->method) << ',' << r->n << ',' << fmt_double(config.p_star) << ','
          << config.scenario.dim << ',' << r->trial << ',' << r->seed << ','
          << fmt_double(r->regret) << ',' << fmt_double(r->accuracy) << ','
          << fmt_double(r->wall_time) << '\n';
    }
  }
  return out.str();
}

std::string aggregate_csv(const ExperimentSummary& summary) {
  std::ostringstream out;
  out << "method,n,trials,regret_mean,regret_std,accuracy_mean,accuracy_std\n";
  for (const AggregateRow& row : summary.aggregates) {
    out << method_name(row.method) << ',' << row.n << ',' << row.trials << ','
        << fmt_double(row.regret_mean) << ',' << fmt_double(row.regret_std) << ','
        << fmt_double(row.accuracy_mean) << ',' << fmt_double(row.accuracy_std) << '\n';
  }
  return out.str();
}

std::string errors_csv(const ExperimentSummary& summary) {
  std::ostringstream out;
  out << "n,trial,seed,error\n";
  for (const TrialOutcome& outcome : summary.outcomes) {
    if (!outcome.failed()) continue;
    std::string message = outcome.error;
    std::replace(message.begin(), message.end(), ',', ';');
    std::replace(message.begin(), message.end(), '\n', ' ');
    out << outcome.n << ',' << outcome.trial << ',' << outcome.seed << ',' << message << '\n';
  }
  return out.str();
}

}  // namespace pasta
