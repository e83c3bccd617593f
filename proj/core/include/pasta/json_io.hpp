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

#ifndef PASTA_JSON_IO_HPP
#define PASTA_JSON_IO_HPP

#include <string>

#include "pasta/catalog.hpp"
#include "pasta/choice_model.hpp"
#include "pasta/dataset.hpp"
#include "pasta/experiment.hpp"
#include "pasta/simgen.hpp"

namespace pasta {

// JSON schemas (stable field names):
//   catalog : {"n", "d", "features", "revenues", "nests"?}
//   model   : {"family", "theta"} | {"family", "thetas", "weights"}
//             | {"family", "theta", "lambdas"}
//   space   : {"kind", "cap"?, "allow_empty_nests"?}
//   instance: {"catalog", "true_model", "space", "optimal_assortment",
//              "optimal_value", "meta": {"seed", "rng"}}
// Datasets are JSON lines, one record per line: {"s":[...], "a":int}.
// Item ids are 1-based; a == 0 is the no-purchase outcome.

std::string catalog_to_json(const ItemCatalog& catalog);
ItemCatalog catalog_from_json(const std::string& text);

std::string model_to_json(const ChoiceModel& model);
ChoiceModel model_from_json(const std::string& text);

std::string space_to_json(const AssortmentSpace& space);
AssortmentSpace space_from_json(const std::string& text);

std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text);

std::string dataset_to_jsonl(const OfflineDataset& dataset);
OfflineDataset dataset_from_jsonl(const std::string& text);

// Experiment configuration, e.g.
// {
//   "scenario": {"family":"mnl","N":15,"K":4,"d":8},
//   "p_star": 0.1, "sample_sizes": [200,1000], "num_trials": 50,
//   "base_seed": 1,
//   "pasta": {"T":30,"gdls_steps":3,"initial_step":0.01,"shrink":0.2,
//             "line_search_cap":60,"alpha_mode":"empirical",
//             "alpha":0.0,"delta":0.05,"alpha_scale":"unscaled"},
//   "fit": {"max_iters":5000,"grad_tol":1e-8},
//   "bounds": {"theta_norm_cap":10,"feature_norm_cap":1,"lambda_min":0.05}
// }
// NL scenarios use {"family":"nl","K":3,"kappa":5,"d":8}. Every field except
// the scenario has a default.
ExperimentConfig experiment_config_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace pasta

#endif  // PASTA_JSON_IO_HPP
