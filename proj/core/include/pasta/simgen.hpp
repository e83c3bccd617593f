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

#ifndef PASTA_SIMGEN_HPP
#define PASTA_SIMGEN_HPP

#include <cstdint>
#include <utility>

#include "pasta/catalog.hpp"
#include "pasta/choice_model.hpp"
#include "pasta/dataset.hpp"
#include "pasta/rng.hpp"

namespace pasta {

// A synthetic problem whose optimal assortment is certified at construction
// by the matching exact optimizer.
struct Instance {
  ItemCatalog catalog;
  ChoiceModel true_model;
  AssortmentSpace space;
  Assortment optimal_assortment;
  double optimal_value = 0.0;
  std::uint64_t seed = 0;
};

// Logging distribution: the optimal assortment with probability p_star,
// otherwise uniform over the rest of the space.
struct SamplingPlan {
  double p_star = 0.1;
  std::uint64_t seed = 0;

  void validate() const;
};

// MNL instance: revenues i.i.d. uniform on [5,8]; taste vector a uniform
// random unit vector; each feature a uniform random unit vector resampled
// until x_j' theta_0 <= -0.6 (at most 1e6 attempts per item); space
// {s : |s| <= K}. Deterministic per seed.
Instance gen_mnl_instance(int num_items, int cap, int dim, std::uint64_t seed,
                          const ParamBounds& bounds = {});

// Nested-logit instance: K nests of kappa items each, lambdas uniform on
// (lambda_min, 1), unconstrained space (all nonempty subsets).
Instance gen_nl_instance(int num_nests, int nest_size, int dim, std::uint64_t seed,
                         const ParamBounds& bounds = {});

// Draws n records: each assortment is the instance optimum with probability
// p_star and otherwise uniform over the remaining space; each choice follows
// the true model's probabilities on the drawn assortment.
OfflineDataset sample_dataset(const Instance& instance, int n, const SamplingPlan& plan);

// Worst-case construction for the minimax lower bound: d items with
// x_i = e_i / sqrt(n), MNL parameter sqrt(d) * v for a seeded sign vector v,
// revenue 1 on one seeded item and 0 elsewhere, logging uniform over the
// singletons (p_star = 1/d). Requires n >= d, so |theta' x_i| <= 1.
std::pair<Instance, SamplingPlan> gen_minimax_instance(int dim, long n, std::uint64_t seed);

// Uniform draw from the space (size-weighted over cardinalities for capped
// spaces; a uniform nonempty subset otherwise).
Assortment sample_assortment(const AssortmentSpace& space, const ItemCatalog& catalog, Rng& rng);

}  // namespace pasta

#endif  // PASTA_SIMGEN_HPP
