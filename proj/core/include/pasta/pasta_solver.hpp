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

#ifndef PASTA_PASTA_SOLVER_HPP
#define PASTA_PASTA_SOLVER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pasta/assort.hpp"
#include "pasta/catalog.hpp"
#include "pasta/choice_model.hpp"
#include "pasta/dataset.hpp"
#include "pasta/estimate.hpp"

namespace pasta {

// How the uncertainty-set radius is chosen.
enum class AlphaMode { kFixed, kEmpirical, kTheoretical };

std::string alpha_mode_name(AlphaMode mode);
AlphaMode alpha_mode_from_name(const std::string& name);

struct PastaConfig {
  int max_outer_iters = 30;    // T
  int gdls_steps = 3;          // M
  double initial_step = 0.01;  // beta_tilde
  double shrink_factor = 0.2;  // c
  int line_search_cap = 60;    // feasibility shrinks per step before skipping

  AlphaMode alpha_mode = AlphaMode::kEmpirical;
  double alpha = 0.0;          // radius when alpha_mode == kFixed
  double delta = 0.05;         // tail level for the theoretical radius
  double crit_multiplier = 1.0;
  AlphaScale alpha_scale = AlphaScale::kUnscaled;

  int lcl_classes = 2;         // mixture size when fitting the LCL family
  FitConfig fit;

  void validate() const;
};

struct PastaResult {
  Assortment assortment;
  ChoiceModel worst_case_params;
  double worst_case_value = 0.0;

  struct TraceEntry {
    Assortment assortment;
    double value = 0.0;  // post-descent worst-case value of this candidate
  };
  std::vector<TraceEntry> trace;
};

// Worst-case parameter search: at most M gradient steps on theta -> V(s;
// theta), each with a feasibility-restoring line search (start at
// initial_step, shrink by shrink_factor until the projected candidate is a
// member of the set and does not increase V; after line_search_cap shrinks
// the step is skipped). theta_init must be a member.
ChoiceModel gdls(const Assortment& s, const UncertaintySet& set,
                 const ChoiceModel& theta_init, const OfflineDataset& dataset,
                 const ItemCatalog& catalog, const PastaConfig& config);
ChoiceModel gdls(const Assortment& s, const UncertaintySet& set,
                 const ChoiceModel& theta_init, const GroupedDataset& dataset,
                 const ItemCatalog& catalog, const PastaConfig& config);

// Pessimistic assortment optimization: fit the MLE, build the uncertainty
// set, then alternate exact assortment optimization under the current
// parameters with worst-case parameter descent, keeping the incumbent with
// the highest post-descent value across iterations. Stops early when a
// (s, theta) pair repeats. Deterministic given the seed, which drives the
// MLE starting point and the formal initial assortment draw.
PastaResult pasta_solve(const OfflineDataset& dataset, const ItemCatalog& catalog,
                        Family family, const AssortmentSpace& space,
                        const PastaConfig& config, std::uint64_t seed);

// Plug-in baseline: fit the MLE and run the matching exact optimizer once.
OptResult as_if_solve(const OfflineDataset& dataset, const ItemCatalog& catalog,
                      Family family, const AssortmentSpace& space,
                      const FitConfig& fit_config, std::uint64_t seed,
                      int lcl_classes = 2);

// Variants sharing a precomputed fit (one MLE may back both methods).
PastaResult pasta_solve_with_fit(const GroupedDataset& dataset, const ItemCatalog& catalog,
                                 const FitResult& fit, const AssortmentSpace& space,
                                 const PastaConfig& config, std::uint64_t seed);
OptResult as_if_solve_with_fit(const ItemCatalog& catalog, const FitResult& fit,
                               const AssortmentSpace& space);

// Resolves the radius for a fitted reference per the configured mode.
double resolve_alpha(const PastaConfig& config, const ChoiceModel& reference,
                     const ItemCatalog& catalog, double reference_loss, long n);

// Step A1: exact assortment optimization under known parameters (LP for MNL
// and NL; exhaustive search for LCL).
OptResult best_assortment(const ChoiceModel& model, const ItemCatalog& catalog,
                          const AssortmentSpace& space);

}  // namespace pasta

#endif  // PASTA_PASTA_SOLVER_HPP
