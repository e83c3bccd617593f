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

#include "pasta/dataset.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pasta {

void OfflineDataset::validate(const ItemCatalog& catalog) const {
  if (records.empty()) throw std::invalid_argument("dataset must contain at least one record");
  for (std::size_t i = 0; i < records.size(); ++i) {
    const Record& rec = records[i];
    rec.assortment.validate(catalog.num_items);
    if (rec.choice != 0 && !rec.assortment.contains(rec.choice))
      throw std::invalid_argument("record " + std::to_string(i) +
                                  ": choice " + std::to_string(rec.choice) +
                                  " not in assortment " + rec.assortment.to_string());
  }
}

GroupedDataset::GroupedDataset(const OfflineDataset& dataset, const ItemCatalog& catalog) {
  dataset.validate(catalog);
  num_records_ = dataset.size();
  std::map<std::vector<int>, std::map<int, int>> counts;
  for (const auto& rec : dataset.records) ++counts[rec.assortment.items][rec.choice];
  groups_.reserve(counts.size());
  for (auto& [items, per_choice] : counts) {
    Group g;
    g.assortment = Assortment(items);
    for (auto& [choice, count] : per_choice) {
      g.choices.push_back(choice);
      g.counts.push_back(count);
      g.total += count;
    }
    groups_.push_back(std::move(g));
  }
}

}  // namespace pasta
