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

#include "pasta/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "pasta/rng.hpp"

namespace pasta {

namespace {

using nlohmann::json;

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Vec vec_from_json(const json& j) {
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<int>(i)] = j[i].get<double>();
  return v;
}

json catalog_to_node(const ItemCatalog& catalog) {
  json j;
  j["n"] = catalog.num_items;
  j["d"] = catalog.feature_dim;
  j["features"] = json::array();
  for (const Vec& x : catalog.features) j["features"].push_back(vec_to_json(x));
  j["revenues"] = catalog.revenues;
  if (catalog.has_nests()) j["nests"] = catalog.nests;
  return j;
}

ItemCatalog catalog_from_node(const json& j) {
  ItemCatalog catalog;
  catalog.num_items = j.at("n").get<int>();
  catalog.feature_dim = j.at("d").get<int>();
  for (const auto& row : j.at("features")) catalog.features.push_back(vec_from_json(row));
  catalog.revenues = j.at("revenues").get<std::vector<double>>();
  if (j.contains("nests") && !j["nests"].is_null())
    catalog.nests = j["nests"].get<std::vector<std::vector<int>>>();
  catalog.validate();
  return catalog;
}

json model_to_node(const ChoiceModel& model) {
  json j;
  j["family"] = family_name(model.family());
  switch (model.family()) {
    case Family::kMnl:
      j["theta"] = vec_to_json(model.mnl().theta);
      break;
    case Family::kLcl: {
      j["thetas"] = json::array();
      for (const Vec& theta : model.lcl().thetas) j["thetas"].push_back(vec_to_json(theta));
      j["weights"] = vec_to_json(model.lcl().weights);
      break;
    }
    case Family::kNl:
      j["theta"] = vec_to_json(model.nl().theta);
      j["lambdas"] = vec_to_json(model.nl().lambdas);
      break;
  }
  return j;
}

ChoiceModel model_from_node(const json& j) {
  const Family family = family_from_name(j.at("family").get<std::string>());
  switch (family) {
    case Family::kMnl:
      return ChoiceModel(MnlParams{vec_from_json(j.at("theta"))});
    case Family::kLcl: {
      LclParams p;
      for (const auto& row : j.at("thetas")) p.thetas.push_back(vec_from_json(row));
      p.weights = vec_from_json(j.at("weights"));
      return ChoiceModel(std::move(p));
    }
    case Family::kNl:
      return ChoiceModel(NlParams{vec_from_json(j.at("theta")), vec_from_json(j.at("lambdas"))});
  }
  throw std::logic_error("unknown family");
}

json space_to_node(const AssortmentSpace& space) {
  json j;
  switch (space.kind) {
    case AssortmentSpace::Kind::kCardinalityCapped:
      j["kind"] = "cardinality_capped";
      j["cap"] = space.cap;
      break;
    case AssortmentSpace::Kind::kUnconstrained:
      j["kind"] = "unconstrained";
      break;
    case AssortmentSpace::Kind::kNestedPrefixFree:
      j["kind"] = "nested_prefix_free";
      break;
    case AssortmentSpace::Kind::kNestedPrefixes:
      j["kind"] = "nested_prefixes";
      j["allow_empty_nests"] = space.allow_empty_nests;
      break;
  }
  return j;
}

AssortmentSpace space_from_node(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "cardinality_capped") return AssortmentSpace::capped(j.at("cap").get<int>());
  if (kind == "unconstrained") return AssortmentSpace::unconstrained();
  if (kind == "nested_prefix_free") return AssortmentSpace::nested_prefix_free();
  if (kind == "nested_prefixes")
    return AssortmentSpace::nested_prefixes(j.value("allow_empty_nests", true));
  throw std::invalid_argument("unknown assortment space kind: " + kind);
}

}  // namespace

std::string catalog_to_json(const ItemCatalog& catalog) {
  return catalog_to_node(catalog).dump(2) + "\n";
}

ItemCatalog catalog_from_json(const std::string& text) {
  return catalog_from_node(json::parse(text));
}

std::string model_to_json(const ChoiceModel& model) { return model_to_node(model).dump(2) + "\n"; }

ChoiceModel model_from_json(const std::string& text) {
  return model_from_node(json::parse(text));
}

std::string space_to_json(const AssortmentSpace& space) {
  return space_to_node(space).dump(2) + "\n";
}

AssortmentSpace space_from_json(const std::string& text) {
  return space_from_node(json::parse(text));
}

std::string instance_to_json(const Instance& instance) {
  json j;
  j["catalog"] = catalog_to_node(instance.catalog);
  j["true_model"] = model_to_node(instance.true_model);
  j["space"] = space_to_node(instance.space);
  j["optimal_assortment"] = instance.optimal_assortment.items;
  j["optimal_value"] = instance.optimal_value;
  j["meta"] = {{"seed", instance.seed}, {"rng", Rng::kAlgorithm}};
  return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  const json j = json::parse(text);
  Instance inst;
  inst.catalog = catalog_from_node(j.at("catalog"));
  inst.true_model = model_from_node(j.at("true_model"));
  inst.space = space_from_node(j.at("space"));
  inst.optimal_assortment = Assortment(j.at("optimal_assortment").get<std::vector<int>>());
  inst.optimal_value = j.at("optimal_value").get<double>();
  if (j.contains("meta") && j["meta"].contains("seed"))
    inst.seed = j["meta"]["seed"].get<std::uint64_t>();
  inst.optimal_assortment.validate(inst.catalog.num_items);
  return inst;
}

std::string dataset_to_jsonl(const OfflineDataset& dataset) {
  std::ostringstream out;
  for (const auto& rec : dataset.records) {
    json j;
    j["s"] = rec.assortment.items;
    j["a"] = rec.choice;
    out << j.dump() << '\n';
  }
  return out.str();
}

OfflineDataset dataset_from_jsonl(const std::string& text) {
  OfflineDataset data;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw std::invalid_argument("dataset line " + std::to_string(line_no) + ": " + e.what());
    }
    OfflineDataset::Record rec;
    rec.assortment = Assortment(j.at("s").get<std::vector<int>>());
    rec.choice = j.at("a").get<int>();
    data.records.push_back(std::move(rec));
  }
  return data;
}

ExperimentConfig experiment_config_from_json(const std::string& text) {
  const json j = json::parse(text);
  ExperimentConfig config;

  const json& sc = j.at("scenario");
  config.scenario.family = family_from_name(sc.at("family").get<std::string>());
  config.scenario.dim = sc.at("d").get<int>();
  if (config.scenario.family == Family::kMnl) {
    config.scenario.num_items = sc.at("N").get<int>();
    config.scenario.cap = sc.at("K").get<int>();
  } else if (config.scenario.family == Family::kNl) {
    config.scenario.num_nests = sc.at("K").get<int>();
    config.scenario.nest_size = sc.at("kappa").get<int>();
  }

  config.p_star = j.value("p_star", 0.1);
  if (j.contains("sample_sizes"))
    config.sample_sizes = j["sample_sizes"].get<std::vector<int>>();
  config.num_trials = j.value("num_trials", 1);
  config.base_seed = j.value("base_seed", std::uint64_t{0});
  config.workers = j.value("workers", 1);

  if (j.contains("pasta")) {
    const json& p = j["pasta"];
    config.pasta.max_outer_iters = p.value("T", config.pasta.max_outer_iters);
    config.pasta.gdls_steps = p.value("gdls_steps", config.pasta.gdls_steps);
    config.pasta.initial_step = p.value("initial_step", config.pasta.initial_step);
    config.pasta.shrink_factor = p.value("shrink", config.pasta.shrink_factor);
    config.pasta.line_search_cap = p.value("line_search_cap", config.pasta.line_search_cap);
    if (p.contains("alpha_mode"))
      config.pasta.alpha_mode = alpha_mode_from_name(p["alpha_mode"].get<std::string>());
    config.pasta.alpha = p.value("alpha", config.pasta.alpha);
    config.pasta.delta = p.value("delta", config.pasta.delta);
    config.pasta.crit_multiplier = p.value("crit_multiplier", config.pasta.crit_multiplier);
    if (p.contains("alpha_scale"))
      config.pasta.alpha_scale = alpha_scale_from_name(p["alpha_scale"].get<std::string>());
    config.pasta.lcl_classes = p.value("lcl_classes", config.pasta.lcl_classes);
  }
  if (j.contains("fit")) {
    const json& f = j["fit"];
    config.pasta.fit.max_iters = f.value("max_iters", config.pasta.fit.max_iters);
    config.pasta.fit.grad_tol = f.value("grad_tol", config.pasta.fit.grad_tol);
    config.pasta.fit.armijo = f.value("armijo", config.pasta.fit.armijo);
    config.pasta.fit.shrink = f.value("shrink", config.pasta.fit.shrink);
    config.pasta.fit.init_step = f.value("init_step", config.pasta.fit.init_step);
    config.pasta.fit.max_backtracks = f.value("max_backtracks", config.pasta.fit.max_backtracks);
  }
  if (j.contains("bounds")) {
    const json& b = j["bounds"];
    ParamBounds& bounds = config.pasta.fit.bounds;
    bounds.theta_norm_cap = b.value("theta_norm_cap", bounds.theta_norm_cap);
    bounds.feature_norm_cap = b.value("feature_norm_cap", bounds.feature_norm_cap);
    bounds.lambda_min = b.value("lambda_min", bounds.lambda_min);
  }
  config.validate();
  return config;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file for reading: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << contents;
  if (!out) throw std::runtime_error("failed to write file: " + path);
}

}  // namespace pasta
