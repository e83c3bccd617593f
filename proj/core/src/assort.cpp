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

#include "pasta/assort.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "pasta/lp.hpp"

namespace pasta {

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double result = 1.0;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

// best-so-far update with lexicographic canonical tie-break
struct Best {
  bool set = false;
  Assortment assortment;
  double value = 0.0;

  void offer(const Assortment& s, double v) {
    if (!set || v > value || (v == value && s.lex_less(assortment))) {
      set = true;
      assortment = s;
      value = v;
    }
  }
};

}  // namespace

double space_size(const AssortmentSpace& space, const ItemCatalog& catalog) {
  const int n = catalog.num_items;
  switch (space.kind) {
    case AssortmentSpace::Kind::kCardinalityCapped: {
      double total = 0.0;
      for (int m = 1; m <= space.cap; ++m) total += binomial(n, m);
      return total;
    }
    case AssortmentSpace::Kind::kUnconstrained:
    case AssortmentSpace::Kind::kNestedPrefixFree:
      return std::ldexp(1.0, n) - 1.0;
    case AssortmentSpace::Kind::kNestedPrefixes: {
      double total = 1.0;
      for (const auto& nest : catalog.nests)
        total *= static_cast<double>(nest.size()) + (space.allow_empty_nests ? 1.0 : 0.0);
      if (space.allow_empty_nests) total -= 1.0;  // all-empty excluded
      return total;
    }
  }
  return 0.0;
}

OptResult solve_mnl_lp(const ItemCatalog& catalog, const Vec& theta, int cap) {
  if (theta.size() != catalog.feature_dim)
    throw std::invalid_argument("theta dimension does not match catalog");
  if (cap < 1 || cap > catalog.num_items)
    throw std::invalid_argument("cardinality cap must lie in 1..N");
  const int n = catalog.num_items;
  const ChoiceModel model{MnlParams{theta}};

  Vec weights(n);  // preference scores v_j
  for (int j = 0; j < n; ++j) weights[j] = std::exp(theta.dot(catalog.features[j]));

  // variables: w_0, w_1..w_N
  Vec objective = Vec::Zero(n + 1);
  for (int j = 0; j < n; ++j) objective[j + 1] = catalog.revenues[j];
  LinearProgram lp = LinearProgram::maximize(objective);

  Vec sum_row = Vec::Ones(n + 1);
  lp.add_row(sum_row, Relation::kEq, 1.0);

  Vec cap_row(n + 1);
  cap_row[0] = -static_cast<double>(cap);
  for (int j = 0; j < n; ++j) cap_row[j + 1] = 1.0 / weights[j];
  lp.add_row(cap_row, Relation::kLe, 0.0);

  for (int j = 0; j < n; ++j) {
    Vec row = Vec::Zero(n + 1);  // w_j <= v_j w_0
    row[0] = -weights[j];
    row[j + 1] = 1.0;
    lp.add_row(row, Relation::kLe, 0.0);
  }

  const LPSolution sol = solve_lp(lp);
  if (sol.status != LPStatus::kOptimal)
    throw std::runtime_error("assortment LP unexpectedly " + lp_status_name(sol.status));
  const double w0 = sol.x[0];
  if (!(w0 > 0.0)) throw std::runtime_error("assortment LP returned w_0 = 0");

  std::vector<int> picked;
  for (int j = 0; j < n; ++j) {
    const double gamma = sol.x[j + 1] / (weights[j] * w0);
    if (std::abs(gamma - 1.0) <= 1e-6) {
      picked.push_back(j + 1);
    } else if (std::abs(gamma) > 1e-6) {
      throw std::runtime_error("assortment LP recovery not integral: gamma_" +
                               std::to_string(j + 1) + " = " + std::to_string(gamma));
    }
  }
  if (picked.empty()) picked.push_back(1);  // value-0 degenerate; canonical choice

  OptResult out;
  out.assortment = Assortment(picked);
  out.value = expected_revenue(model, catalog, out.assortment);
  if (std::abs(out.value - sol.objective) > 1e-8 * std::max(1.0, std::abs(out.value)))
    throw std::runtime_error("assortment LP objective disagrees with recovered value");
  return out;
}

OptResult solve_nl_lp(const ItemCatalog& catalog, const NlParams& params,
                      bool allow_empty_prefix) {
  if (!catalog.has_nests())
    throw std::invalid_argument("nested-logit optimizer requires catalog nests");
  if (params.theta.size() != catalog.feature_dim)
    throw std::invalid_argument("theta dimension does not match catalog");
  if (params.lambdas.size() != catalog.num_nests())
    throw std::invalid_argument("lambda count does not match catalog nests");
  for (int k = 0; k < params.lambdas.size(); ++k)
    if (!(params.lambdas[k] > 0.0 && params.lambdas[k] <= 1.0))
      throw std::invalid_argument("nested-logit lambdas must lie in (0,1]");
  const ChoiceModel model{params};
  const int num_nests = catalog.num_nests();
  const auto order = revenue_ordered_nests(catalog);

  // per nest: prefix attraction V^lambda and prefix mean revenue R
  struct Prefix {
    double weight = 0.0;  // V^lambda
    double revenue = 0.0; // R
    int length = 0;       // 0 encodes the empty prefix
  };
  std::vector<std::vector<Prefix>> prefixes(num_nests);
  for (int k = 0; k < num_nests; ++k) {
    const double lambda = params.lambdas[k];
    const std::vector<int>& nest = order[k];
    if (allow_empty_prefix) prefixes[k].push_back(Prefix{0.0, 0.0, 0});
    std::vector<double> u(nest.size());
    for (std::size_t i = 0; i < nest.size(); ++i)
      u[i] = params.theta.dot(catalog.feature(nest[i])) / lambda;
    for (std::size_t m = 1; m <= nest.size(); ++m) {
      double umax = u[0];
      for (std::size_t i = 1; i < m; ++i) umax = std::max(umax, u[i]);
      double acc = 0.0, racc = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        const double q = std::exp(u[i] - umax);
        acc += q;
        racc += q * catalog.revenue(nest[i]);
      }
      Prefix p;
      p.length = static_cast<int>(m);
      p.revenue = racc / acc;
      p.weight = std::exp(lambda * (umax + std::log(acc)));
      prefixes[k].push_back(p);
    }
  }

  // variables: eta, y_1..y_K (all free)
  const int nvars = 1 + num_nests;
  Vec objective = Vec::Zero(nvars);
  objective[0] = -1.0;  // minimize eta
  LinearProgram lp = LinearProgram::maximize(objective);
  lp.lower = Vec::Constant(nvars, -LinearProgram::kInf);

  Vec top = Vec::Constant(nvars, -1.0);  // eta - sum_k y_k >= 0
  top[0] = 1.0;
  lp.add_row(top, Relation::kGe, 0.0);
  for (int k = 0; k < num_nests; ++k) {
    for (const Prefix& p : prefixes[k]) {
      Vec row = Vec::Zero(nvars);  // y_k + weight * eta >= weight * revenue
      row[0] = p.weight;
      row[k + 1] = 1.0;
      lp.add_row(row, Relation::kGe, p.weight * p.revenue);
    }
  }

  const LPSolution sol = solve_lp(lp);
  if (sol.status != LPStatus::kOptimal)
    throw std::runtime_error("nested assortment LP unexpectedly " + lp_status_name(sol.status));
  const double eta = sol.x[0];

  // per-nest argmax of weight * (revenue - eta), keeping ties for the
  // canonical (lexicographically smallest) reconstruction
  std::vector<std::vector<const Prefix*>> tied(num_nests);
  for (int k = 0; k < num_nests; ++k) {
    double best = -LinearProgram::kInf;
    for (const Prefix& p : prefixes[k])
      best = std::max(best, p.weight * (p.revenue - eta));
    const double tol = 1e-9 * std::max(1.0, std::abs(best));
    for (const Prefix& p : prefixes[k])
      if (p.weight * (p.revenue - eta) >= best - tol) tied[k].push_back(&p);
  }

  double combos = 1.0;
  for (int k = 0; k < num_nests; ++k) combos *= static_cast<double>(tied[k].size());
  if (combos > static_cast<double>(std::size_t{1} << 20))
    throw std::runtime_error("nested assortment LP recovery has too many tied optima");

  Best best;
  std::vector<int> pick(num_nests, 0);
  std::vector<int> items;
  const std::function<void(int)> enumerate = [&](int k) {
    if (k == num_nests) {
      items.clear();
      for (int j = 0; j < num_nests; ++j)
        for (int i = 0; i < tied[j][pick[j]]->length; ++i) items.push_back(order[j][i]);
      if (items.empty()) return;  // the all-empty assortment is not offered
      std::sort(items.begin(), items.end());
      const Assortment s{items};
      best.offer(s, expected_revenue(model, catalog, s));
      return;
    }
    for (pick[k] = 0; pick[k] < static_cast<int>(tied[k].size()); ++pick[k]) enumerate(k + 1);
  };
  enumerate(0);
  if (!best.set) throw std::runtime_error("nested assortment LP recovered only the empty set");

  if (std::abs(best.value - eta) > 1e-6 * std::max(1.0, std::abs(eta)))
    throw std::runtime_error("nested assortment LP value disagrees with recovery");
  OptResult out;
  out.assortment = best.assortment;
  out.value = best.value;
  return out;
}

OptResult brute_force(const ItemCatalog& catalog, const ChoiceModel& model,
                      const AssortmentSpace& space, std::size_t enum_cap) {
  space.validate(catalog);
  if (space_size(space, catalog) > static_cast<double>(enum_cap))
    throw std::invalid_argument("assortment enumeration exceeds the configured cap");
  const int n = catalog.num_items;

  Best best;
  const auto evaluate = [&](const std::vector<int>& items) {
    const Assortment s{items};
    best.offer(s, expected_revenue(model, catalog, s));
  };

  if (space.kind == AssortmentSpace::Kind::kNestedPrefixes) {
    const auto order = revenue_ordered_nests(catalog);
    const int num_nests = catalog.num_nests();
    std::vector<int> lengths(num_nests, 0);
    std::vector<int> items;
    const std::function<void(int)> enumerate = [&](int k) {
      if (k == num_nests) {
        items.clear();
        for (int j = 0; j < num_nests; ++j)
          for (int i = 0; i < lengths[j]; ++i) items.push_back(order[j][i]);
        if (items.empty()) return;
        std::sort(items.begin(), items.end());
        evaluate(items);
        return;
      }
      const int lo = space.allow_empty_nests ? 0 : 1;
      for (lengths[k] = lo; lengths[k] <= static_cast<int>(order[k].size()); ++lengths[k])
        enumerate(k + 1);
    };
    enumerate(0);
  } else {
    const int cap = space.kind == AssortmentSpace::Kind::kCardinalityCapped ? space.cap : n;
    std::vector<int> items;
    // depth-first in lexicographic order of the item list
    const std::function<void(int)> enumerate = [&](int next) {
      if (!items.empty()) evaluate(items);
      if (static_cast<int>(items.size()) == cap) return;
      for (int j = next; j <= n; ++j) {
        items.push_back(j);
        enumerate(j + 1);
        items.pop_back();
      }
    };
    enumerate(1);
  }

  if (!best.set) throw std::logic_error("assortment space is empty");
  OptResult out;
  out.assortment = best.assortment;
  out.value = best.value;
  return out;
}

}  // namespace pasta
