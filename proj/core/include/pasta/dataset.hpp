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

#ifndef PASTA_DATASET_HPP
#define PASTA_DATASET_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "pasta/catalog.hpp"

namespace pasta {

// Logged (offered assortment, observed choice) pairs; choice 0 means no
// purchase.
struct OfflineDataset {
  struct Record {
    Assortment assortment;
    int choice = 0;
  };

  std::vector<Record> records;

  int size() const { return static_cast<int>(records.size()); }

  // Throws std::invalid_argument if empty or if any record's choice lies
  // outside its assortment plus the no-purchase option.
  void validate(const ItemCatalog& catalog) const;
};

// Records grouped by assortment so repeated assortments share the utility
// computations inside likelihood evaluations. The grouping is an internal
// acceleration structure; it does not change any result.
class GroupedDataset {
 public:
  struct Group {
    Assortment assortment;
    std::vector<int> choices;     // distinct observed outcomes (0 allowed)
    std::vector<int> counts;      // multiplicity per outcome
    int total = 0;                // records with this assortment
  };

  GroupedDataset(const OfflineDataset& dataset, const ItemCatalog& catalog);

  int num_records() const { return num_records_; }
  const std::vector<Group>& groups() const { return groups_; }

 private:
  int num_records_ = 0;
  std::vector<Group> groups_;
};

}  // namespace pasta

#endif  // PASTA_DATASET_HPP
