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

#ifndef PASTA_CHOICE_MODEL_HPP
#define PASTA_CHOICE_MODEL_HPP

#include <string>
#include <variant>
#include <vector>

#include "pasta/catalog.hpp"
#include "pasta/dataset.hpp"

namespace pasta {

enum class Family { kMnl, kLcl, kNl };

std::string family_name(Family family);
Family family_from_name(const std::string& name);

// Multinomial logit: preference for item j proportional to exp(x_j' theta),
// outside option weight 1.
struct MnlParams {
  Vec theta;
};

// Latent class logit: a mixture of K MNL classes with simplex weights.
struct LclParams {
  std::vector<Vec> thetas;
  Vec weights;
};

// Nested logit: shared taste vector plus per-nest dissimilarity parameters
// lambda_k in (0,1]; within-nest attraction exp(x' theta / lambda_k).
struct NlParams {
  Vec theta;
  Vec lambdas;
};

// Tagged union over the three parametric families. Optimizers view the
// parameters as one flat vector; the layouts are
//   MNL: [theta]                (d)
//   LCL: [theta_1..theta_K, w]  (K*d + K)
//   NL : [theta, lambda]        (d + K)
class ChoiceModel {
 public:
  ChoiceModel() : params_(MnlParams{Vec::Zero(1)}) {}
  explicit ChoiceModel(MnlParams p) : params_(std::move(p)) {}
  explicit ChoiceModel(LclParams p) : params_(std::move(p)) {}
  explicit ChoiceModel(NlParams p) : params_(std::move(p)) {}

  Family family() const;
  const MnlParams& mnl() const;
  const LclParams& lcl() const;
  const NlParams& nl() const;

  int feature_dim() const;
  int num_classes() const;  // LCL classes / NL nests; 1 for MNL
  int param_dim() const;

  Vec to_flat() const;
  // Same family and shape, parameter values taken from `flat`.
  ChoiceModel with_flat(const Vec& flat) const;

  // Structural checks (weight simplex within 1e-12, lambda in
  // [bounds.lambda_min, 1], dimension match against the catalog when given).
  void validate(const ItemCatalog* catalog, const ParamBounds& bounds) const;

 private:
  std::variant<MnlParams, LclParams, NlParams> params_;
};

// Purchase probabilities over s and the no-purchase outcome. outcomes[0] is
// always 0; outcomes[i] for i >= 1 is the i-th item of s in increasing order.
struct ChoiceProbs {
  std::vector<int> outcomes;
  Vec probs;

  double outside() const { return probs[0]; }
  double prob_of(int item) const;
};

// Probability of each outcome in s u {0}; computed with log-sum-exp shifts so
// utilities of magnitude several hundred do not overflow.
ChoiceProbs choice_prob_vector(const ChoiceModel& model, const ItemCatalog& catalog,
                               const Assortment& s);

// Expected revenue V(s) = sum_{j in s} r_j p(j|s).
double expected_revenue(const ChoiceModel& model, const ItemCatalog& catalog,
                        const Assortment& s);

// Mean negative log-likelihood of the dataset. A record whose probability
// vanishes (or is non-finite) raises std::domain_error identifying the record.
double nll(const ChoiceModel& model, const OfflineDataset& dataset,
           const ItemCatalog& catalog);
double nll(const ChoiceModel& model, const GroupedDataset& dataset,
           const ItemCatalog& catalog);

// Analytic gradient of the mean NLL in flat-parameter coordinates.
Vec nll_gradient(const ChoiceModel& model, const OfflineDataset& dataset,
                 const ItemCatalog& catalog);
// Fused value+gradient evaluation (one pass over the data).
double nll_with_gradient(const ChoiceModel& model, const GroupedDataset& dataset,
                         const ItemCatalog& catalog, Vec* grad);

// Analytic gradient of theta -> V(s; theta) in flat coordinates.
Vec value_gradient(const ChoiceModel& model, const ItemCatalog& catalog,
                   const Assortment& s);

// Projects a flat parameter vector onto the family's feasible set: Euclidean
// ball of radius theta_norm_cap for each taste vector, probability simplex
// for LCL weights, [lambda_min, 1] box for NL lambdas.
Vec project_params(const ChoiceModel& shape, const Vec& flat, const ParamBounds& bounds);

// Euclidean projection onto the probability simplex.
Vec project_to_simplex(const Vec& v);

}  // namespace pasta

#endif  // PASTA_CHOICE_MODEL_HPP
