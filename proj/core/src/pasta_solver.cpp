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

#include "pasta/pasta_solver.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "pasta/rng.hpp"
#include "pasta/simgen.hpp"

namespace pasta {

std::string alpha_mode_name(AlphaMode mode) {
  switch (mode) {
    case AlphaMode::kFixed: return "fixed";
    case AlphaMode::kEmpirical: return "empirical";
    case AlphaMode::kTheoretical: return "theoretical";
  }
  throw std::logic_error("unknown alpha mode");
}

AlphaMode alpha_mode_from_name(const std::string& name) {
  if (name == "fixed") return AlphaMode::kFixed;
  if (name == "empirical") return AlphaMode::kEmpirical;
  if (name == "theoretical") return AlphaMode::kTheoretical;
  throw std::invalid_argument("unknown alpha mode: " + name);
}

void PastaConfig::validate() const {
  if (max_outer_iters < 1) throw std::invalid_argument("max_outer_iters must be at least 1");
  if (gdls_steps < 0) throw std::invalid_argument("gdls_steps must be nonnegative");
  if (!(initial_step > 0.0)) throw std::invalid_argument("initial_step must be positive");
  if (!(shrink_factor > 0.0 && shrink_factor < 1.0))
    throw std::invalid_argument("shrink_factor must lie in (0,1)");
  if (line_search_cap < 1) throw std::invalid_argument("line_search_cap must be at least 1");
  if (alpha_mode == AlphaMode::kFixed && !(alpha >= 0.0))
    throw std::invalid_argument("fixed alpha must be nonnegative");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0,1)");
  if (lcl_classes < 1) throw std::invalid_argument("lcl_classes must be at least 1");
  fit.validate();
}

double resolve_alpha(const PastaConfig& config, const ChoiceModel& reference,
                     const ItemCatalog& catalog, double reference_loss, long n) {
  switch (config.alpha_mode) {
    case AlphaMode::kFixed:
      return config.alpha;
    case AlphaMode::kEmpirical:
      return empirical_alpha(reference_loss);
    case AlphaMode::kTheoretical: {
      const double dim = family_dimension(reference.family(), reference.feature_dim(),
                                          reference.num_classes());
      const double complexity = family_complexity(reference.family(), reference.num_classes(),
                                                  catalog, config.fit.bounds);
      return critical_value(dim, complexity, n, config.delta, config.crit_multiplier);
    }
  }
  throw std::logic_error("unknown alpha mode");
}

OptResult best_assortment(const ChoiceModel& model, const ItemCatalog& catalog,
                          const AssortmentSpace& space) {
  space.validate(catalog);
  switch (model.family()) {
    case Family::kMnl: {
      int cap = catalog.num_items;
      if (space.kind == AssortmentSpace::Kind::kCardinalityCapped) {
        cap = space.cap;
      } else if (space.kind != AssortmentSpace::Kind::kUnconstrained) {
        throw std::invalid_argument("MNL optimization supports capped or unconstrained spaces");
      }
      return solve_mnl_lp(catalog, model.mnl().theta, cap);
    }
    case Family::kNl: {
      bool allow_empty = true;
      if (space.kind == AssortmentSpace::Kind::kNestedPrefixes)
        allow_empty = space.allow_empty_nests;
      else if (space.kind != AssortmentSpace::Kind::kNestedPrefixFree &&
               space.kind != AssortmentSpace::Kind::kUnconstrained)
        throw std::invalid_argument("NL optimization supports nested or unconstrained spaces");
      return solve_nl_lp(catalog, model.nl(), allow_empty);
    }
    case Family::kLcl:
      // no LP reduction is available for mixtures; exhaustive search
      return brute_force(catalog, model, space);
  }
  throw std::logic_error("unknown family");
}

ChoiceModel gdls(const Assortment& s, const UncertaintySet& set,
                 const ChoiceModel& theta_init, const GroupedDataset& dataset,
                 const ItemCatalog& catalog, const PastaConfig& config) {
  config.validate();
  s.validate(catalog.num_items);
  if (!membership(set, theta_init, dataset, catalog))
    throw std::invalid_argument("gdls requires a feasible starting parameter");

  ChoiceModel model = theta_init;
  Vec x = model.to_flat();
  double value = expected_revenue(model, catalog, s);

  for (int m = 0; m < config.gdls_steps; ++m) {
    const Vec grad = value_gradient(model, catalog, s);
    double step = config.initial_step;
    bool accepted = false;
    for (int attempt = 0; attempt < config.line_search_cap; ++attempt) {
      const Vec flat = project_params(model, x - step * grad, config.fit.bounds);
      const ChoiceModel candidate = model.with_flat(flat);
      if (membership(set, candidate, dataset, catalog)) {
        const double cand_value = expected_revenue(candidate, catalog, s);
        if (cand_value <= value) {
          x = flat;
          model = candidate;
          value = cand_value;
          accepted = true;
          break;
        }
      }
      step *= config.shrink_factor;
    }
    // a skipped step would repeat identically; nothing more can move
    if (!accepted) break;
  }
  return model;
}

ChoiceModel gdls(const Assortment& s, const UncertaintySet& set,
                 const ChoiceModel& theta_init, const OfflineDataset& dataset,
                 const ItemCatalog& catalog, const PastaConfig& config) {
  return gdls(s, set, theta_init, GroupedDataset(dataset, catalog), catalog, config);
}

PastaResult pasta_solve_with_fit(const GroupedDataset& dataset, const ItemCatalog& catalog,
                                 const FitResult& fit, const AssortmentSpace& space,
                                 const PastaConfig& config, std::uint64_t seed) {
  config.validate();
  space.validate(catalog);

  UncertaintySet set;
  set.family = fit.model.family();
  set.reference = fit.model;
  set.reference_loss = fit.loss;
  set.alpha = resolve_alpha(config, fit.model, catalog, fit.loss, dataset.num_records());
  set.scale = config.alpha_scale;

  // the protocol draws a random starting assortment; only theta^(0) feeds the
  // first iteration, but the draw keeps seeded runs reproducible
  Rng rng(Rng::mix(seed, 2));
  (void)sample_assortment(space, catalog, rng);

  ChoiceModel theta = fit.model;
  PastaResult result;
  bool have_incumbent = false;
  std::set<std::pair<std::vector<int>, std::vector<double>>> visited;

  for (int t = 0; t < config.max_outer_iters; ++t) {
    const OptResult candidate = best_assortment(theta, catalog, space);
    theta = gdls(candidate.assortment, set, theta, dataset, catalog, config);
    const double worst_value = expected_revenue(theta, catalog, candidate.assortment);
    result.trace.push_back({candidate.assortment, worst_value});

    if (!have_incumbent || worst_value > result.worst_case_value) {
      result.assortment = candidate.assortment;
      result.worst_case_params = theta;
      result.worst_case_value = worst_value;
      have_incumbent = true;
    }

    const Vec flat = theta.to_flat();
    std::pair<std::vector<int>, std::vector<double>> key{
        candidate.assortment.items, std::vector<double>(flat.data(), flat.data() + flat.size())};
    if (!visited.insert(std::move(key)).second) break;  // cycle
  }
  return result;
}

PastaResult pasta_solve(const OfflineDataset& dataset, const ItemCatalog& catalog,
                        Family family, const AssortmentSpace& space,
                        const PastaConfig& config, std::uint64_t seed) {
  config.validate();
  const GroupedDataset grouped(dataset, catalog);
  const ChoiceModel init =
      default_init(family, catalog, config.fit.bounds, Rng::mix(seed, 1), config.lcl_classes);
  const FitResult fit = fit_mle(grouped, catalog, init, config.fit);
  return pasta_solve_with_fit(grouped, catalog, fit, space, config, seed);
}

OptResult as_if_solve_with_fit(const ItemCatalog& catalog, const FitResult& fit,
                               const AssortmentSpace& space) {
  return best_assortment(fit.model, catalog, space);
}

OptResult as_if_solve(const OfflineDataset& dataset, const ItemCatalog& catalog,
                      Family family, const AssortmentSpace& space,
                      const FitConfig& fit_config, std::uint64_t seed, int lcl_classes) {
  const GroupedDataset grouped(dataset, catalog);
  const ChoiceModel init =
      default_init(family, catalog, fit_config.bounds, Rng::mix(seed, 1), lcl_classes);
  const FitResult fit = fit_mle(grouped, catalog, init, fit_config);
  return as_if_solve_with_fit(catalog, fit, space);
}

}  // namespace pasta
