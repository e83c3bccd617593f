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

#ifndef PASTA_CATALOG_HPP
#define PASTA_CATALOG_HPP

#include <Eigen/Core>
#include <string>
#include <vector>

namespace pasta {

using Vec = Eigen::VectorXd;

// An offered set of items. Item ids are 1-based (0 is the reserved
// no-purchase outcome) and kept strictly increasing.
struct Assortment {
  std::vector<int> items;

  Assortment() = default;
  explicit Assortment(std::vector<int> ids);

  int size() const { return static_cast<int>(items.size()); }
  bool contains(int item) const;
  bool operator==(const Assortment& other) const { return items == other.items; }
  // Lexicographic order on the item list; a proper prefix sorts first.
  bool lex_less(const Assortment& other) const { return items < other.items; }
  std::string to_string() const;

  // Throws std::invalid_argument unless nonempty, strictly increasing, and
  // contained in 1..num_items.
  void validate(int num_items) const;
};

// Item universe: features, revenues, and an optional partition into nests.
struct ItemCatalog {
  int num_items = 0;                   // N
  int feature_dim = 0;                 // d
  std::vector<Vec> features;           // N vectors of dimension d
  std::vector<double> revenues;        // N nonnegative reals; the no-purchase
                                       // option implicitly has revenue 0
  std::vector<std::vector<int>> nests; // optional partition of 1..N

  bool has_nests() const { return !nests.empty(); }
  int num_nests() const { return static_cast<int>(nests.size()); }
  const Vec& feature(int item) const { return features[item - 1]; }
  double revenue(int item) const { return revenues[item - 1]; }
  // Index of the nest containing `item` (0-based); requires nests.
  int nest_of(int item) const { return nest_index_[item - 1]; }

  // Checks dimensions, nonnegative revenues, and that nests (when present)
  // partition 1..N; builds the item->nest lookup.
  void validate();

 private:
  std::vector<int> nest_index_;
};

// Boundedness constants for the parameter spaces: ||theta||_2 <= theta_norm_cap,
// ||x_j||_2 <= feature_norm_cap, and nested-logit dissimilarity parameters in
// [lambda_min, 1].
struct ParamBounds {
  double theta_norm_cap = 10.0;
  double feature_norm_cap = 1.0;
  double lambda_min = 0.05;

  void validate() const;
};

// Feasible assortment collections.
//   kCardinalityCapped : { s : 1 <= |s| <= cap }
//   kUnconstrained     : all nonempty subsets of 1..N
//   kNestedPrefixFree  : all nonempty subsets, read as unions of per-nest
//                        sub-assortments with empty nests allowed
//   kNestedPrefixes    : unions of per-nest revenue-ordered prefixes; the
//                        space the nested-logit LP with literal prefix
//                        constraints optimizes over (allow_empty_nests
//                        controls whether a nest may contribute nothing)
struct AssortmentSpace {
  enum class Kind { kCardinalityCapped, kUnconstrained, kNestedPrefixFree, kNestedPrefixes };

  Kind kind = Kind::kUnconstrained;
  int cap = 0;
  bool allow_empty_nests = true;

  static AssortmentSpace capped(int cap);
  static AssortmentSpace unconstrained();
  static AssortmentSpace nested_prefix_free();
  static AssortmentSpace nested_prefixes(bool allow_empty_nests);

  void validate(const ItemCatalog& catalog) const;
  bool member(const Assortment& s, const ItemCatalog& catalog) const;
};

// Items of each nest ranked by decreasing revenue (ties by increasing id):
// the prefix orders used by the nested-logit optimizer and nested spaces.
std::vector<std::vector<int>> revenue_ordered_nests(const ItemCatalog& catalog);

}  // namespace pasta

#endif  // PASTA_CATALOG_HPP
