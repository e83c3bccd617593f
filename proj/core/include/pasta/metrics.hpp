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

#ifndef PASTA_METRICS_HPP
#define PASTA_METRICS_HPP

#include <utility>
#include <vector>

#include "pasta/catalog.hpp"
#include "pasta/choice_model.hpp"

namespace pasta {

// Distribution over offered assortments (the logging distribution pi_S).
struct AssortmentDistribution {
  std::vector<std::pair<Assortment, double>> support;

  // Masses positive and summing to 1 within 1e-12; assortments distinct.
  void validate(const ItemCatalog& catalog) const;
};

// Distances between probability vectors on a common finite outcome set.
// All model-level distances below reduce to these on s u {0}.
double hellinger_sq(const Vec& p, const Vec& q);
double total_variation(const Vec& p, const Vec& q);
// KL(p || q); throws std::domain_error when q vanishes where p does not.
double kl_divergence(const Vec& p, const Vec& q);

// Squared Hellinger distance between two choice models on one assortment:
// (1/2) sum_{a in s u {0}} (sqrt p1(a|s) - sqrt p2(a|s))^2.
double hellinger_sq(const ChoiceModel& p1, const ChoiceModel& p2,
                    const ItemCatalog& catalog, const Assortment& s);

// Generalized squared Hellinger distance: the pi_S-weighted average of the
// per-assortment squared Hellinger distances.
double generalized_hellinger_sq(const ChoiceModel& p1, const ChoiceModel& p2,
                                const ItemCatalog& catalog,
                                const AssortmentDistribution& pi);

double total_variation(const ChoiceModel& p1, const ChoiceModel& p2,
                       const ItemCatalog& catalog, const Assortment& s);

// KL(p1(.|s) || p2(.|s)) in nats.
double kl_divergence(const ChoiceModel& p1, const ChoiceModel& p2,
                     const ItemCatalog& catalog, const Assortment& s);

}  // namespace pasta

#endif  // PASTA_METRICS_HPP
