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

#include "pasta/estimate.hpp"

#include <cmath>
#include <stdexcept>

#include "pasta/rng.hpp"

namespace pasta {

void FitConfig::validate() const {
  if (max_iters < 0) throw std::invalid_argument("max_iters must be nonnegative");
  if (!(grad_tol > 0.0)) throw std::invalid_argument("grad_tol must be positive");
  if (!(armijo > 0.0 && armijo < 1.0)) throw std::invalid_argument("armijo must lie in (0,1)");
  if (!(shrink > 0.0 && shrink < 1.0)) throw std::invalid_argument("shrink must lie in (0,1)");
  if (!(init_step > 0.0)) throw std::invalid_argument("init_step must be positive");
  if (max_backtracks < 1) throw std::invalid_argument("max_backtracks must be at least 1");
  bounds.validate();
}

std::string fit_termination_name(FitTermination reason) {
  switch (reason) {
    case FitTermination::kGradientTolerance: return "gradient_tolerance";
    case FitTermination::kIterationCap: return "iteration_cap";
    case FitTermination::kLineSearchStalled: return "line_search_stalled";
  }
  throw std::logic_error("unknown fit termination");
}

namespace {

// For LCL the weight block moves inside the simplex: remove the component of
// the gradient normal to {sum w = const} before stepping.
Vec search_direction(const ChoiceModel& shape, const Vec& grad) {
  Vec dir = grad;
  if (shape.family() == Family::kLcl) {
    const int num_weights = shape.num_classes();
    auto tail = dir.tail(num_weights);
    tail.array() -= tail.mean();
  }
  return dir;
}

}  // namespace

FitResult fit_mle(const GroupedDataset& dataset, const ItemCatalog& catalog,
                  const ChoiceModel& init, const FitConfig& config) {
  config.validate();
  init.validate(&catalog, config.bounds);

  Vec x = project_params(init, init.to_flat(), config.bounds);
  ChoiceModel current = init.with_flat(x);
  Vec grad;
  double loss = nll_with_gradient(current, dataset, catalog, &grad);

  FitResult out;
  out.loss_trace.push_back(loss);
  FitTermination reason = FitTermination::kIterationCap;
  int iter = 0;
  double step = config.init_step;
  for (; iter < config.max_iters; ++iter) {
    const Vec dir = search_direction(current, grad);

    // unit-step projected-gradient mapping; zero both at interior stationary
    // points and at bound-constrained optima
    const Vec mapped = x - project_params(current, x - dir, config.bounds);
    if (mapped.norm() <= config.grad_tol) {
      reason = FitTermination::kGradientTolerance;
      break;
    }

    // line search starts from the previous accepted step (never above the
    // configured initial step); candidates are evaluated loss-only
    step = std::min(config.init_step, 2.0 * step);
    bool accepted = false;
    for (int bt = 0; bt < config.max_backtracks; ++bt) {
      const Vec candidate = project_params(current, x - step * dir, config.bounds);
      const double decrease = dir.dot(x - candidate);
      const ChoiceModel cand_model = current.with_flat(candidate);
      double cand_loss;
      try {
        cand_loss = nll(cand_model, dataset, catalog);
      } catch (const std::domain_error&) {
        step *= config.shrink;
        continue;
      }
      if (cand_loss <= loss - config.armijo * decrease) {
        x = candidate;
        current = cand_model;
        loss = nll_with_gradient(current, dataset, catalog, &grad);
        out.loss_trace.push_back(loss);
        accepted = true;
        break;
      }
      step *= config.shrink;
    }
    if (!accepted) {
      reason = FitTermination::kLineSearchStalled;
      break;
    }
  }

  out.model = current;
  out.loss = loss;
  out.reason = reason;
  out.iterations = iter;
  return out;
}

FitResult fit_mle(const OfflineDataset& dataset, const ItemCatalog& catalog,
                  const ChoiceModel& init, const FitConfig& config) {
  return fit_mle(GroupedDataset(dataset, catalog), catalog, init, config);
}

std::string alpha_scale_name(AlphaScale scale) {
  switch (scale) {
    case AlphaScale::kUnscaled: return "unscaled";
    case AlphaScale::kTimesN: return "times_n";
  }
  throw std::logic_error("unknown alpha scale");
}

AlphaScale alpha_scale_from_name(const std::string& name) {
  if (name == "unscaled") return AlphaScale::kUnscaled;
  if (name == "times_n") return AlphaScale::kTimesN;
  throw std::invalid_argument("unknown alpha scale: " + name);
}

void UncertaintySet::validate() const {
  if (!(alpha >= 0.0)) throw std::invalid_argument("uncertainty radius must be nonnegative");
  if (!std::isfinite(reference_loss))
    throw std::invalid_argument("reference loss must be finite");
}

bool membership(const UncertaintySet& set, const ChoiceModel& theta,
                const GroupedDataset& dataset, const ItemCatalog& catalog) {
  set.validate();
  if (theta.family() != set.family)
    throw std::invalid_argument("membership query across model families");
  double excess;
  try {
    excess = nll(theta, dataset, catalog) - set.reference_loss;
  } catch (const std::domain_error&) {
    return false;  // zero-probability records put the model outside every radius
  }
  if (set.scale == AlphaScale::kTimesN) excess *= static_cast<double>(dataset.num_records());
  return excess <= set.alpha + 1e-12;
}

bool membership(const UncertaintySet& set, const ChoiceModel& theta,
                const OfflineDataset& dataset, const ItemCatalog& catalog) {
  return membership(set, theta, GroupedDataset(dataset, catalog), catalog);
}

double critical_value(double effective_dim, double complexity, long n, double delta,
                      double multiplier) {
  if (!(effective_dim > 0.0)) throw std::invalid_argument("effective dimension must be positive");
  if (!(complexity > 0.0)) throw std::invalid_argument("complexity constant must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0,1)");
  if (static_cast<double>(n) < effective_dim)
    throw std::invalid_argument("critical value requires n >= effective dimension");
  const double nd = static_cast<double>(n);
  return multiplier *
         (effective_dim / nd * std::log(complexity * nd / effective_dim) +
          std::log(1.0 / delta) / nd);
}

double empirical_alpha(double reference_loss) {
  if (!std::isfinite(reference_loss))
    throw std::invalid_argument("reference loss must be finite");
  return 2.0 * reference_loss;
}

double family_dimension(Family family, int feature_dim, int num_classes) {
  switch (family) {
    case Family::kMnl: return feature_dim;
    case Family::kLcl: return num_classes * feature_dim + num_classes - 1;
    case Family::kNl: return feature_dim + num_classes;
  }
  throw std::logic_error("unknown family");
}

double family_complexity(Family family, int num_classes, const ItemCatalog& catalog,
                         const ParamBounds& bounds) {
  switch (family) {
    case Family::kMnl:
      return bounds.feature_norm_cap;
    case Family::kLcl:
      return static_cast<double>(num_classes) * catalog.num_items *
             std::exp(bounds.theta_norm_cap * bounds.feature_norm_cap);
    case Family::kNl:
      return bounds.feature_norm_cap * bounds.theta_norm_cap / bounds.lambda_min;
  }
  throw std::logic_error("unknown family");
}

ChoiceModel default_init(Family family, const ItemCatalog& catalog,
                         const ParamBounds& bounds, std::uint64_t seed, int lcl_classes) {
  Rng rng(Rng::mix(seed, 0x1717));
  const int d = catalog.feature_dim;
  const auto small_theta = [&] {
    Vec theta(d);
    for (int i = 0; i < d; ++i) theta[i] = 0.1 * rng.normal();
    return theta;
  };
  switch (family) {
    case Family::kMnl:
      return ChoiceModel(MnlParams{small_theta()});
    case Family::kLcl: {
      if (lcl_classes < 1) throw std::invalid_argument("LCL needs at least one class");
      LclParams p;
      for (int k = 0; k < lcl_classes; ++k) p.thetas.push_back(small_theta());
      p.weights = Vec::Constant(lcl_classes, 1.0 / lcl_classes);
      return ChoiceModel(std::move(p));
    }
    case Family::kNl: {
      if (!catalog.has_nests())
        throw std::invalid_argument("nested-logit initialization requires catalog nests");
      NlParams p;
      p.theta = small_theta();
      p.lambdas = Vec::Constant(catalog.num_nests(), 0.5 * (bounds.lambda_min + 1.0));
      return ChoiceModel(std::move(p));
    }
  }
  throw std::logic_error("unknown family");
}

}  // namespace pasta
