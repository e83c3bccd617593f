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

#include "pasta/metrics.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace pasta {

void AssortmentDistribution::validate(const ItemCatalog& catalog) const {
  if (support.empty())
    throw std::invalid_argument("assortment distribution has empty support");
  std::set<std::vector<int>> seen;
  double total = 0.0;
  for (const auto& [s, mass] : support) {
    s.validate(catalog.num_items);
    if (!(mass > 0.0))
      throw std::invalid_argument("assortment distribution masses must be positive");
    if (!seen.insert(s.items).second)
      throw std::invalid_argument("assortment distribution support must be distinct");
    total += mass;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("assortment distribution masses must sum to 1 within 1e-12");
}

namespace {

void check_same_size(const Vec& p, const Vec& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("probability vectors have different lengths");
}

}  // namespace

double hellinger_sq(const Vec& p, const Vec& q) {
  check_same_size(p, q);
  double acc = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    const double diff = std::sqrt(p[i]) - std::sqrt(q[i]);
    acc += diff * diff;
  }
  return 0.5 * acc;
}

double total_variation(const Vec& p, const Vec& q) {
  check_same_size(p, q);
  double acc = 0.0;
  for (int i = 0; i < p.size(); ++i) acc += std::abs(p[i] - q[i]);
  return 0.5 * acc;
}

double kl_divergence(const Vec& p, const Vec& q) {
  check_same_size(p, q);
  double acc = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] <= 0.0)
      throw std::domain_error("KL divergence undefined: second argument vanishes on the "
                              "support of the first");
    acc += p[i] * std::log(p[i] / q[i]);
  }
  return acc;
}

double hellinger_sq(const ChoiceModel& p1, const ChoiceModel& p2,
                    const ItemCatalog& catalog, const Assortment& s) {
  return hellinger_sq(choice_prob_vector(p1, catalog, s).probs,
                      choice_prob_vector(p2, catalog, s).probs);
}

double generalized_hellinger_sq(const ChoiceModel& p1, const ChoiceModel& p2,
                                const ItemCatalog& catalog,
                                const AssortmentDistribution& pi) {
  pi.validate(catalog);
  double acc = 0.0;
  for (const auto& [s, mass] : pi.support) acc += mass * hellinger_sq(p1, p2, catalog, s);
  return acc;
}

double total_variation(const ChoiceModel& p1, const ChoiceModel& p2,
                       const ItemCatalog& catalog, const Assortment& s) {
  return total_variation(choice_prob_vector(p1, catalog, s).probs,
                         choice_prob_vector(p2, catalog, s).probs);
}

double kl_divergence(const ChoiceModel& p1, const ChoiceModel& p2,
                     const ItemCatalog& catalog, const Assortment& s) {
  return kl_divergence(choice_prob_vector(p1, catalog, s).probs,
                       choice_prob_vector(p2, catalog, s).probs);
}

}  // namespace pasta
