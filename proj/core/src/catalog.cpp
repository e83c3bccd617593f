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

#include "pasta/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pasta {

Assortment::Assortment(std::vector<int> ids) : items(std::move(ids)) {}

bool Assortment::contains(int item) const {
  return std::binary_search(items.begin(), items.end(), item);
}

std::string Assortment::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out << ',';
    out << items[i];
  }
  out << '}';
  return out.str();
}

void Assortment::validate(int num_items) const {
  if (items.empty()) throw std::invalid_argument("assortment must be nonempty");
  int prev = 0;
  for (int id : items) {
    if (id < 1 || id > num_items)
      throw std::invalid_argument("assortment item id out of range: " + std::to_string(id));
    if (id <= prev)
      throw std::invalid_argument("assortment items must be strictly increasing");
    prev = id;
  }
}

void ItemCatalog::validate() {
  if (num_items < 1) throw std::invalid_argument("catalog needs at least one item");
  if (feature_dim < 1) throw std::invalid_argument("catalog feature dimension must be positive");
  if (static_cast<int>(features.size()) != num_items)
    throw std::invalid_argument("catalog feature count does not match num_items");
  if (static_cast<int>(revenues.size()) != num_items)
    throw std::invalid_argument("catalog revenue count does not match num_items");
  for (const Vec& x : features) {
    if (x.size() != feature_dim)
      throw std::invalid_argument("catalog feature vector has wrong dimension");
    if (!x.allFinite()) throw std::invalid_argument("catalog feature vector is not finite");
  }
  for (double r : revenues) {
    if (!std::isfinite(r) || r < 0.0)
      throw std::invalid_argument("catalog revenues must be finite and nonnegative");
  }
  nest_index_.assign(num_items, -1);
  if (!nests.empty()) {
    int covered = 0;
    for (std::size_t k = 0; k < nests.size(); ++k) {
      if (nests[k].empty()) throw std::invalid_argument("catalog nest is empty");
      for (int id : nests[k]) {
        if (id < 1 || id > num_items)
          throw std::invalid_argument("catalog nest item id out of range");
        if (nest_index_[id - 1] != -1)
          throw std::invalid_argument("catalog nests overlap at item " + std::to_string(id));
        nest_index_[id - 1] = static_cast<int>(k);
        ++covered;
      }
    }
    if (covered != num_items)
      throw std::invalid_argument("catalog nests do not cover all items");
  }
}

void ParamBounds::validate() const {
  if (!(theta_norm_cap > 0.0) || !std::isfinite(theta_norm_cap))
    throw std::invalid_argument("theta_norm_cap must be finite and positive");
  if (!(feature_norm_cap > 0.0) || !std::isfinite(feature_norm_cap))
    throw std::invalid_argument("feature_norm_cap must be finite and positive");
  if (!(lambda_min > 0.0) || !(lambda_min < 1.0))
    throw std::invalid_argument("lambda_min must lie in (0,1)");
}

AssortmentSpace AssortmentSpace::capped(int cap) {
  AssortmentSpace s;
  s.kind = Kind::kCardinalityCapped;
  s.cap = cap;
  return s;
}

AssortmentSpace AssortmentSpace::unconstrained() {
  AssortmentSpace s;
  s.kind = Kind::kUnconstrained;
  return s;
}

AssortmentSpace AssortmentSpace::nested_prefix_free() {
  AssortmentSpace s;
  s.kind = Kind::kNestedPrefixFree;
  return s;
}

AssortmentSpace AssortmentSpace::nested_prefixes(bool allow_empty_nests) {
  AssortmentSpace s;
  s.kind = Kind::kNestedPrefixes;
  s.allow_empty_nests = allow_empty_nests;
  return s;
}

void AssortmentSpace::validate(const ItemCatalog& catalog) const {
  switch (kind) {
    case Kind::kCardinalityCapped:
      if (cap < 1 || cap > catalog.num_items)
        throw std::invalid_argument("cardinality cap must lie in 1..N");
      break;
    case Kind::kUnconstrained:
      break;
    case Kind::kNestedPrefixFree:
    case Kind::kNestedPrefixes:
      if (!catalog.has_nests())
        throw std::invalid_argument("nested assortment space requires catalog nests");
      break;
  }
}

namespace {

// s restricted to nest k must be a prefix of that nest's revenue order.
bool is_prefix_union(const Assortment& s, const ItemCatalog& catalog,
                     const std::vector<std::vector<int>>& order, bool allow_empty) {
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::size_t len = 0;
    for (int id : order[k])
      if (s.contains(id)) ++len;
    // picked items must be exactly the first `len` of the order
    for (std::size_t i = 0; i < len; ++i)
      if (!s.contains(order[k][i])) return false;
    if (!allow_empty && len == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> revenue_ordered_nests(const ItemCatalog& catalog) {
  std::vector<std::vector<int>> order = catalog.nests;
  for (auto& nest : order) {
    std::sort(nest.begin(), nest.end(), [&](int a, int b) {
      if (catalog.revenue(a) != catalog.revenue(b))
        return catalog.revenue(a) > catalog.revenue(b);
      return a < b;
    });
  }
  return order;
}

bool AssortmentSpace::member(const Assortment& s, const ItemCatalog& catalog) const {
  s.validate(catalog.num_items);
  switch (kind) {
    case Kind::kCardinalityCapped:
      return s.size() <= cap;
    case Kind::kUnconstrained:
    case Kind::kNestedPrefixFree:
      return true;
    case Kind::kNestedPrefixes:
      return is_prefix_union(s, catalog, revenue_ordered_nests(catalog), allow_empty_nests);
  }
  return false;
}

}  // namespace pasta
