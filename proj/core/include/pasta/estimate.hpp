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

#ifndef PASTA_ESTIMATE_HPP
#define PASTA_ESTIMATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pasta/catalog.hpp"
#include "pasta/choice_model.hpp"
#include "pasta/dataset.hpp"

namespace pasta {

struct FitConfig {
  int max_iters = 5000;
  double grad_tol = 1e-8;     // on the unit-step projected-gradient mapping
  double armijo = 1e-4;
  double shrink = 0.5;
  double init_step = 1.0;
  int max_backtracks = 60;
  ParamBounds bounds;

  void validate() const;
};

enum class FitTermination { kGradientTolerance, kIterationCap, kLineSearchStalled };

std::string fit_termination_name(FitTermination reason);

struct FitResult {
  ChoiceModel model;
  double loss = 0.0;
  FitTermination reason = FitTermination::kIterationCap;
  int iterations = 0;
  std::vector<double> loss_trace;  // accepted losses, nonincreasing
};

// Maximum-likelihood estimation by projected gradient descent with Armijo
// backtracking. Parameters stay inside ParamBounds via projection (Euclidean
// ball for taste vectors, simplex for LCL weights, [lambda_min,1] box for NL
// lambdas); for LCL the weight-block gradient is first projected onto the
// simplex tangent space. The returned loss never exceeds the loss at init.
FitResult fit_mle(const OfflineDataset& dataset, const ItemCatalog& catalog,
                  const ChoiceModel& init, const FitConfig& config = {});
FitResult fit_mle(const GroupedDataset& dataset, const ItemCatalog& catalog,
                  const ChoiceModel& init, const FitConfig& config = {});

// Whether excess losses are compared to alpha directly or after multiplying
// by the sample size n (both conventions appear in the source material; the
// default is the unscaled set definition).
enum class AlphaScale { kUnscaled, kTimesN };

std::string alpha_scale_name(AlphaScale scale);
AlphaScale alpha_scale_from_name(const std::string& name);

// Likelihood-ratio uncertainty set: all models whose empirical loss exceeds
// the fitted reference loss by at most alpha.
struct UncertaintySet {
  Family family = Family::kMnl;
  ChoiceModel reference;
  double reference_loss = 0.0;
  double alpha = 0.0;
  AlphaScale scale = AlphaScale::kUnscaled;

  void validate() const;
};

// Membership test with a 1e-12 slack on the excess loss.
bool membership(const UncertaintySet& set, const ChoiceModel& theta,
                const OfflineDataset& dataset, const ItemCatalog& catalog);
bool membership(const UncertaintySet& set, const ChoiceModel& theta,
                const GroupedDataset& dataset, const ItemCatalog& catalog);

// Closed-form critical value (D/n) log(C n / D) + (1/n) log(1/delta), scaled
// by `multiplier` (the proportionality constant left free by the theory).
// Requires n >= D and delta in (0,1).
double critical_value(double effective_dim, double complexity, long n, double delta,
                      double multiplier = 1.0);

// The data-driven radius used in the simulation study: twice the fitted loss.
double empirical_alpha(double reference_loss);

// Effective dimension D of the family: d (MNL), K d + K - 1 (LCL), d + K (NL).
double family_dimension(Family family, int feature_dim, int num_classes);

// Complexity constant C of the family: C_x (MNL), K N exp(C_theta C_x) (LCL),
// C_x C_theta C_lambda (NL). num_classes is the LCL class count / NL nest
// count (ignored for MNL).
double family_complexity(Family family, int num_classes, const ItemCatalog& catalog,
                         const ParamBounds& bounds);

// Deterministic seeded starting point for fit_mle: small-normal taste
// coordinates, uniform LCL weights, mid-box NL lambdas. lcl_classes is used
// only for the LCL family; NL infers its nest count from the catalog.
ChoiceModel default_init(Family family, const ItemCatalog& catalog,
                         const ParamBounds& bounds, std::uint64_t seed,
                         int lcl_classes = 2);

}  // namespace pasta

#endif  // PASTA_ESTIMATE_HPP
