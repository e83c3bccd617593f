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

#include "pasta/simgen.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "pasta/assort.hpp"

namespace pasta {

namespace {

constexpr int kResampleCap = 1000000;

Vec unit_vector(Rng& rng, int dim) {
  Vec v(dim);
  for (;;) {
    for (int i = 0; i < dim; ++i) v[i] = rng.normal();
    const double norm = v.norm();
    if (norm > 1e-12) return v / norm;
  }
}

// feature draw with the degeneracy guard x' theta0 <= -0.6
Vec constrained_feature(Rng& rng, const Vec& theta0) {
  for (int attempt = 0; attempt < kResampleCap; ++attempt) {
    Vec x = unit_vector(rng, static_cast<int>(theta0.size()));
    if (x.dot(theta0) <= -0.6) return x;
  }
  throw std::runtime_error("feature resampling cap exceeded; dimension too high for the "
                           "x' theta <= -0.6 constraint");
}

double binomial(int n, int k) {
  double result = 1.0;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

}  // namespace

void SamplingPlan::validate() const {
  if (!(p_star > 0.0 && p_star <= 1.0))
    throw std::invalid_argument("p_star must lie in (0,1]");
}

Instance gen_mnl_instance(int num_items, int cap, int dim, std::uint64_t seed,
                          const ParamBounds& bounds) {
  if (num_items < 1 || cap < 1 || cap > num_items || dim < 1)
    throw std::invalid_argument("gen_mnl_instance requires N >= K >= 1 and d >= 1");
  bounds.validate();
  Rng rng(seed);

  const Vec theta0 = unit_vector(rng, dim);
  Instance inst;
  inst.seed = seed;
  inst.catalog.num_items = num_items;
  inst.catalog.feature_dim = dim;
  inst.catalog.revenues.resize(num_items);
  for (int j = 0; j < num_items; ++j) inst.catalog.revenues[j] = rng.uniform(5.0, 8.0);
  inst.catalog.features.reserve(num_items);
  for (int j = 0; j < num_items; ++j)
    inst.catalog.features.push_back(constrained_feature(rng, theta0));
  inst.catalog.validate();

  inst.true_model = ChoiceModel(MnlParams{theta0});
  inst.space = AssortmentSpace::capped(cap);
  const OptResult best = solve_mnl_lp(inst.catalog, theta0, cap);
  inst.optimal_assortment = best.assortment;
  inst.optimal_value = best.value;
  return inst;
}

Instance gen_nl_instance(int num_nests, int nest_size, int dim, std::uint64_t seed,
                         const ParamBounds& bounds) {
  if (num_nests < 1 || nest_size < 1 || dim < 1)
    throw std::invalid_argument("gen_nl_instance requires K, kappa, d >= 1");
  bounds.validate();
  Rng rng(seed);
  const int num_items = num_nests * nest_size;

  const Vec theta0 = unit_vector(rng, dim);
  Vec lambdas(num_nests);
  for (int k = 0; k < num_nests; ++k) lambdas[k] = rng.uniform(bounds.lambda_min, 1.0);

  Instance inst;
  inst.seed = seed;
  inst.catalog.num_items = num_items;
  inst.catalog.feature_dim = dim;
  inst.catalog.revenues.resize(num_items);
  for (int j = 0; j < num_items; ++j) inst.catalog.revenues[j] = rng.uniform(5.0, 8.0);
  inst.catalog.features.reserve(num_items);
  for (int j = 0; j < num_items; ++j)
    inst.catalog.features.push_back(constrained_feature(rng, theta0));
  inst.catalog.nests.resize(num_nests);
  for (int k = 0; k < num_nests; ++k)
    for (int i = 0; i < nest_size; ++i)
      inst.catalog.nests[k].push_back(k * nest_size + i + 1);
  inst.catalog.validate();

  inst.true_model = ChoiceModel(NlParams{theta0, lambdas});
  inst.space = AssortmentSpace::nested_prefix_free();
  const OptResult best = solve_nl_lp(inst.catalog, inst.true_model.nl(), true);
  inst.optimal_assortment = best.assortment;
  inst.optimal_value = best.value;
  return inst;
}

Assortment sample_assortment(const AssortmentSpace& space, const ItemCatalog& catalog, Rng& rng) {
  const int n = catalog.num_items;
  switch (space.kind) {
    case AssortmentSpace::Kind::kCardinalityCapped: {
      // P(size m) proportional to C(N,m): uniform over the whole space
      std::vector<double> cumulative(space.cap);
      double total = 0.0;
      for (int m = 1; m <= space.cap; ++m) {
        total += binomial(n, m);
        cumulative[m - 1] = total;
      }
      const double u = rng.uniform01() * total;
      int size = space.cap;
      for (int m = 1; m <= space.cap; ++m) {
        if (u < cumulative[m - 1]) {
          size = m;
          break;
        }
      }
      // Floyd's algorithm for a uniform size-subset
      std::set<int> chosen;
      for (int j = n - size + 1; j <= n; ++j) {
        const int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(j)));
        if (!chosen.insert(t).second) chosen.insert(j);
      }
      return Assortment(std::vector<int>(chosen.begin(), chosen.end()));
    }
    case AssortmentSpace::Kind::kUnconstrained:
    case AssortmentSpace::Kind::kNestedPrefixFree: {
      if (n > 62)
        throw std::invalid_argument("uniform subset sampling supports at most 62 items");
      const std::uint64_t mask =
          1 + rng.below((std::uint64_t{1} << n) - 1);  // uniform nonempty subset
      std::vector<int> items;
      for (int j = 0; j < n; ++j)
        if (mask & (std::uint64_t{1} << j)) items.push_back(j + 1);
      return Assortment(std::move(items));
    }
    case AssortmentSpace::Kind::kNestedPrefixes: {
      const auto order = revenue_ordered_nests(catalog);
      for (;;) {
        std::vector<int> items;
        for (const auto& nest : order) {
          const int lo = space.allow_empty_nests ? 0 : 1;
          const int len =
              lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(nest.size()) - lo + 1));
          for (int i = 0; i < len; ++i) items.push_back(nest[i]);
        }
        if (items.empty()) continue;
        std::sort(items.begin(), items.end());
        return Assortment(std::move(items));
      }
    }
  }
  throw std::logic_error("unknown assortment space");
}

OfflineDataset sample_dataset(const Instance& instance, int n, const SamplingPlan& plan) {
  if (n < 1) throw std::invalid_argument("sample size must be at least 1");
  plan.validate();
  if (plan.p_star < 1.0 && space_size(instance.space, instance.catalog) < 1.5)
    throw std::invalid_argument("cannot sample off-optimum: the space has a single assortment");
  Rng rng(plan.seed);

  OfflineDataset data;
  data.records.reserve(n);
  for (int i = 0; i < n; ++i) {
    Assortment offered;
    if (rng.bernoulli(plan.p_star)) {
      offered = instance.optimal_assortment;
    } else {
      int attempts = 0;
      do {
        offered = sample_assortment(instance.space, instance.catalog, rng);
        if (++attempts > kResampleCap)
          throw std::runtime_error("assortment rejection sampling cap exceeded");
      } while (offered == instance.optimal_assortment);
    }
    const ChoiceProbs probs = choice_prob_vector(instance.true_model, instance.catalog, offered);
    const double u = rng.uniform01();
    double acc = 0.0;
    int choice = probs.outcomes.back();
    for (std::size_t c = 0; c < probs.outcomes.size(); ++c) {
      acc += probs.probs[static_cast<int>(c)];
      if (u < acc) {
        choice = probs.outcomes[c];
        break;
      }
    }
    data.records.push_back({std::move(offered), choice});
  }
  return data;
}

std::pair<Instance, SamplingPlan> gen_minimax_instance(int dim, long n, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("minimax instance requires d >= 1");
  if (n < dim) throw std::invalid_argument("minimax instance requires n >= d");
  Rng rng(seed);

  const double eps = std::sqrt(static_cast<double>(n));
  const double delta = std::sqrt(static_cast<double>(dim));
  Vec theta(dim);
  for (int i = 0; i < dim; ++i) theta[i] = delta * (rng.below(2) ? 1.0 : -1.0);
  const int designated = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(dim)));

  Instance inst;
  inst.seed = seed;
  inst.catalog.num_items = dim;
  inst.catalog.feature_dim = dim;
  inst.catalog.revenues.assign(dim, 0.0);
  inst.catalog.revenues[designated - 1] = 1.0;
  for (int i = 0; i < dim; ++i) {
    Vec x = Vec::Zero(dim);
    x[i] = 1.0 / eps;
    inst.catalog.features.push_back(std::move(x));
  }
  inst.catalog.validate();

  for (int i = 0; i < dim; ++i) {
    if (std::abs(theta.dot(inst.catalog.features[i])) > 1.0 + 1e-12)
      throw std::logic_error("minimax construction violates |theta' x_i| <= 1");
  }

  inst.true_model = ChoiceModel(MnlParams{theta});
  inst.space = AssortmentSpace::capped(1);
  const OptResult best = solve_mnl_lp(inst.catalog, theta, 1);
  inst.optimal_assortment = best.assortment;
  inst.optimal_value = best.value;
  if (!(inst.optimal_assortment == Assortment({designated})))
    throw std::logic_error("minimax construction optimum is not the designated item");

  SamplingPlan plan;
  plan.p_star = 1.0 / dim;  // logging uniform over the d singletons
  plan.seed = Rng::mix(seed, 3);
  return {std::move(inst), plan};
}

}  // namespace pasta
