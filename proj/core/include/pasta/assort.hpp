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

#ifndef PASTA_ASSORT_HPP
#define PASTA_ASSORT_HPP

#include <cstddef>

#include "pasta/catalog.hpp"
#include "pasta/choice_model.hpp"

namespace pasta {

struct OptResult {
  Assortment assortment;
  double value = 0.0;
};

// Exact assortment optimization for a known MNL model over {s : |s| <= cap}
// via the unimodular LP reformulation (variables w_0, w_j; recovery
// gamma_j = w_j / (v_j w_0), which must land on {0,1} within 1e-6).
// Value ties are broken toward the lexicographically smallest item list.
OptResult solve_mnl_lp(const ItemCatalog& catalog, const Vec& theta, int cap);

// Exact assortment optimization for a known nested-logit model. Items inside
// each nest are ranked by decreasing revenue and candidate sub-assortments
// are the resulting prefixes; allow_empty_prefix additionally lets a nest
// contribute nothing (an extra y_k >= 0 constraint), in which case the LP
// optimum equals the optimum over all nonempty subsets. The all-empty
// assortment is never returned.
OptResult solve_nl_lp(const ItemCatalog& catalog, const NlParams& params,
                      bool allow_empty_prefix = true);

// Exhaustive argmax of expected revenue over the space; ties broken toward
// the lexicographically smallest item list. Throws when the enumeration
// exceeds enum_cap assortments.
OptResult brute_force(const ItemCatalog& catalog, const ChoiceModel& model,
                      const AssortmentSpace& space, std::size_t enum_cap = std::size_t{1} << 20);

// Number of assortments in the space (used for the enumeration guard).
double space_size(const AssortmentSpace& space, const ItemCatalog& catalog);

}  // namespace pasta

#endif  // PASTA_ASSORT_HPP
