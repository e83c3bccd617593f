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

#include "pasta/choice_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pasta {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

[[noreturn]] void zero_probability(const Assortment& s, int choice) {
  throw std::domain_error("model assigns zero probability to choice " +
                          std::to_string(choice) + " in assortment " + s.to_string() +
                          "; model and data are incompatible");
}

// Utilities and normalizer of one MNL class on one assortment:
// lse = log(1 + sum_j exp(u_j)), shifted by the max utility.
struct MnlEval {
  std::vector<double> u;  // aligned with s.items
  double lse = 0.0;
};

MnlEval eval_mnl(const Vec& theta, const ItemCatalog& catalog, const Assortment& s) {
  MnlEval e;
  e.u.resize(s.items.size());
  double shift = 0.0;  // outside option utility
  for (std::size_t i = 0; i < s.items.size(); ++i) {
    e.u[i] = theta.dot(catalog.feature(s.items[i]));
    shift = std::max(shift, e.u[i]);
  }
  double acc = std::exp(-shift);
  for (double ui : e.u) acc += std::exp(ui - shift);
  e.lse = shift + std::log(acc);
  return e;
}

// Per-nest pieces of a nested-logit evaluation on one assortment.
struct NlEval {
  struct Part {
    int nest = 0;                 // 0-based nest index
    std::vector<int> item_pos;    // positions within s.items
    std::vector<double> u;        // x' theta / lambda
    double logv = 0.0;            // log sum_i exp(u_i)
    double w = 0.0;               // lambda * logv
  };
  std::vector<Part> parts;        // ordered by nest index
  double big_lse = 0.0;           // log(1 + sum_k exp(w_k))

  const Part* part_of(int nest) const {
    for (const Part& p : parts)
      if (p.nest == nest) return &p;
    return nullptr;
  }
};

NlEval eval_nl(const NlParams& params, const ItemCatalog& catalog, const Assortment& s) {
  NlEval e;
  std::vector<int> part_of_nest(catalog.num_nests(), -1);
  for (std::size_t i = 0; i < s.items.size(); ++i) {
    const int nest = catalog.nest_of(s.items[i]);
    if (part_of_nest[nest] < 0) {
      part_of_nest[nest] = static_cast<int>(e.parts.size());
      e.parts.push_back({});
      e.parts.back().nest = nest;
    }
    e.parts[part_of_nest[nest]].item_pos.push_back(static_cast<int>(i));
  }
  std::sort(e.parts.begin(), e.parts.end(),
            [](const NlEval::Part& a, const NlEval::Part& b) { return a.nest < b.nest; });
  double shift = 0.0;  // outside option, exp(0)
  for (auto& part : e.parts) {
    const double lambda = params.lambdas[part.nest];
    part.u.resize(part.item_pos.size());
    double umax = kNegInf;
    for (std::size_t i = 0; i < part.item_pos.size(); ++i) {
      part.u[i] = params.theta.dot(catalog.feature(s.items[part.item_pos[i]])) / lambda;
      umax = std::max(umax, part.u[i]);
    }
    double acc = 0.0;
    for (double ui : part.u) acc += std::exp(ui - umax);
    part.logv = umax + std::log(acc);
    part.w = lambda * part.logv;
    shift = std::max(shift, part.w);
  }
  double acc = std::exp(-shift);
  for (const auto& part : e.parts) acc += std::exp(part.w - shift);
  e.big_lse = shift + std::log(acc);
  return e;
}

void check_model_catalog(const ChoiceModel& model, const ItemCatalog& catalog) {
  if (model.feature_dim() != catalog.feature_dim)
    throw std::invalid_argument("model dimension does not match catalog");
  if (model.family() == Family::kNl) {
    if (!catalog.has_nests())
      throw std::invalid_argument("nested-logit model requires a catalog with nests");
    if (model.num_classes() != catalog.num_nests())
      throw std::invalid_argument("nested-logit lambda count does not match catalog nests");
  }
}

}  // namespace

std::string family_name(Family family) {
  switch (family) {
    case Family::kMnl: return "mnl";
    case Family::kLcl: return "lcl";
    case Family::kNl: return "nl";
  }
  throw std::logic_error("unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "mnl") return Family::kMnl;
  if (name == "lcl") return Family::kLcl;
  if (name == "nl") return Family::kNl;
  throw std::invalid_argument("unknown choice-model family: " + name);
}

Family ChoiceModel::family() const {
  if (std::holds_alternative<MnlParams>(params_)) return Family::kMnl;
  if (std::holds_alternative<LclParams>(params_)) return Family::kLcl;
  return Family::kNl;
}

const MnlParams& ChoiceModel::mnl() const {
  if (!std::holds_alternative<MnlParams>(params_))
    throw std::logic_error("model is not MNL");
  return std::get<MnlParams>(params_);
}

const LclParams& ChoiceModel::lcl() const {
  if (!std::holds_alternative<LclParams>(params_))
    throw std::logic_error("model is not LCL");
  return std::get<LclParams>(params_);
}

const NlParams& ChoiceModel::nl() const {
  if (!std::holds_alternative<NlParams>(params_))
    throw std::logic_error("model is not NL");
  return std::get<NlParams>(params_);
}

int ChoiceModel::feature_dim() const {
  switch (family()) {
    case Family::kMnl: return static_cast<int>(mnl().theta.size());
    case Family::kLcl: return static_cast<int>(lcl().thetas.front().size());
    case Family::kNl: return static_cast<int>(nl().theta.size());
  }
  return 0;
}

int ChoiceModel::num_classes() const {
  switch (family()) {
    case Family::kMnl: return 1;
    case Family::kLcl: return static_cast<int>(lcl().thetas.size());
    case Family::kNl: return static_cast<int>(nl().lambdas.size());
  }
  return 0;
}

int ChoiceModel::param_dim() const {
  const int d = feature_dim();
  switch (family()) {
    case Family::kMnl: return d;
    case Family::kLcl: return num_classes() * (d + 1);
    case Family::kNl: return d + num_classes();
  }
  return 0;
}

Vec ChoiceModel::to_flat() const {
  Vec flat(param_dim());
  switch (family()) {
    case Family::kMnl:
      flat = mnl().theta;
      break;
    case Family::kLcl: {
      const auto& p = lcl();
      const int d = feature_dim();
      for (std::size_t k = 0; k < p.thetas.size(); ++k)
        flat.segment(static_cast<int>(k) * d, d) = p.thetas[k];
      flat.tail(static_cast<int>(p.thetas.size())) = p.weights;
      break;
    }
    case Family::kNl: {
      const auto& p = nl();
      flat.head(p.theta.size()) = p.theta;
      flat.tail(p.lambdas.size()) = p.lambdas;
      break;
    }
  }
  return flat;
}

ChoiceModel ChoiceModel::with_flat(const Vec& flat) const {
  if (flat.size() != param_dim())
    throw std::invalid_argument("flat parameter vector has wrong dimension");
  switch (family()) {
    case Family::kMnl:
      return ChoiceModel(MnlParams{flat});
    case Family::kLcl: {
      const int d = feature_dim();
      const int K = num_classes();
      LclParams p;
      p.thetas.resize(K);
      for (int k = 0; k < K; ++k) p.thetas[k] = flat.segment(k * d, d);
      p.weights = flat.tail(K);
      return ChoiceModel(std::move(p));
    }
    case Family::kNl: {
      const int d = feature_dim();
      const int K = num_classes();
      NlParams p;
      p.theta = flat.head(d);
      p.lambdas = flat.tail(K);
      return ChoiceModel(std::move(p));
    }
  }
  throw std::logic_error("unknown family");
}

void ChoiceModel::validate(const ItemCatalog* catalog, const ParamBounds& bounds) const {
  bounds.validate();
  switch (family()) {
    case Family::kMnl:
      if (!mnl().theta.allFinite()) throw std::invalid_argument("MNL theta not finite");
      break;
    case Family::kLcl: {
      const auto& p = lcl();
      if (p.thetas.empty()) throw std::invalid_argument("LCL needs at least one class");
      if (p.weights.size() != static_cast<int>(p.thetas.size()))
        throw std::invalid_argument("LCL weight count does not match class count");
      const int d = static_cast<int>(p.thetas.front().size());
      double sum = 0.0;
      for (const Vec& th : p.thetas) {
        if (th.size() != d) throw std::invalid_argument("LCL class dimensions differ");
        if (!th.allFinite()) throw std::invalid_argument("LCL theta not finite");
      }
      for (int k = 0; k < p.weights.size(); ++k) {
        if (p.weights[k] < 0.0) throw std::invalid_argument("LCL weights must be nonnegative");
        sum += p.weights[k];
      }
      if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("LCL weights must sum to 1 within 1e-12");
      break;
    }
    case Family::kNl: {
      const auto& p = nl();
      if (!p.theta.allFinite()) throw std::invalid_argument("NL theta not finite");
      if (p.lambdas.size() < 1) throw std::invalid_argument("NL needs at least one nest");
      for (int k = 0; k < p.lambdas.size(); ++k) {
        if (!(p.lambdas[k] >= bounds.lambda_min && p.lambdas[k] <= 1.0))
          throw std::invalid_argument("NL lambda outside [lambda_min, 1]");
      }
      break;
    }
  }
  if (catalog) check_model_catalog(*this, *catalog);
}

double ChoiceProbs::prob_of(int item) const {
  for (std::size_t i = 0; i < outcomes.size(); ++i)
    if (outcomes[i] == item) return probs[static_cast<int>(i)];
  return 0.0;
}

ChoiceProbs choice_prob_vector(const ChoiceModel& model, const ItemCatalog& catalog,
                               const Assortment& s) {
  s.validate(catalog.num_items);
  check_model_catalog(model, catalog);
  ChoiceProbs out;
  out.outcomes.reserve(s.items.size() + 1);
  out.outcomes.push_back(0);
  out.outcomes.insert(out.outcomes.end(), s.items.begin(), s.items.end());
  out.probs = Vec::Zero(static_cast<int>(out.outcomes.size()));

  switch (model.family()) {
    case Family::kMnl: {
      const MnlEval e = eval_mnl(model.mnl().theta, catalog, s);
      out.probs[0] = std::exp(-e.lse);
      for (std::size_t i = 0; i < e.u.size(); ++i)
        out.probs[static_cast<int>(i) + 1] = std::exp(e.u[i] - e.lse);
      break;
    }
    case Family::kLcl: {
      const auto& p = model.lcl();
      for (std::size_t k = 0; k < p.thetas.size(); ++k) {
        const double wk = p.weights[static_cast<int>(k)];
        if (wk == 0.0) continue;
        const MnlEval e = eval_mnl(p.thetas[k], catalog, s);
        out.probs[0] += wk * std::exp(-e.lse);
        for (std::size_t i = 0; i < e.u.size(); ++i)
          out.probs[static_cast<int>(i) + 1] += wk * std::exp(e.u[i] - e.lse);
      }
      break;
    }
    case Family::kNl: {
      const auto& p = model.nl();
      const NlEval e = eval_nl(p, catalog, s);
      out.probs[0] = std::exp(-e.big_lse);
      for (const auto& part : e.parts) {
        const double lambda = p.lambdas[part.nest];
        for (std::size_t i = 0; i < part.item_pos.size(); ++i) {
          out.probs[part.item_pos[i] + 1] =
              std::exp((lambda - 1.0) * part.logv + part.u[i] - e.big_lse);
        }
      }
      break;
    }
  }
  return out;
}

double expected_revenue(const ChoiceModel& model, const ItemCatalog& catalog,
                        const Assortment& s) {
  const ChoiceProbs probs = choice_prob_vector(model, catalog, s);
  double value = 0.0;
  for (std::size_t i = 1; i < probs.outcomes.size(); ++i)
    value += catalog.revenue(probs.outcomes[i]) * probs.probs[static_cast<int>(i)];
  return value;
}

namespace {

// Mean NLL over grouped records, optionally with the gradient in flat
// coordinates. Repeated assortments share the per-assortment evaluation.
double grouped_nll(const ChoiceModel& model, const GroupedDataset& data,
                   const ItemCatalog& catalog, Vec* grad) {
  check_model_catalog(model, catalog);
  const double n = static_cast<double>(data.num_records());
  const int d = catalog.feature_dim;
  double loss = 0.0;
  if (grad) *grad = Vec::Zero(model.param_dim());

  switch (model.family()) {
    case Family::kMnl: {
      const Vec& theta = model.mnl().theta;
      std::vector<double> u;  // reused across groups
      Vec pbar_x(d);
      for (const auto& g : data.groups()) {
        const auto& items = g.assortment.items;
        u.resize(items.size());
        double shift = 0.0;
        for (std::size_t i = 0; i < items.size(); ++i) {
          u[i] = theta.dot(catalog.feature(items[i]));
          shift = std::max(shift, u[i]);
        }
        double acc = std::exp(-shift);
        for (double ui : u) acc += std::exp(ui - shift);
        const double lse = shift + std::log(acc);
        if (grad) {
          pbar_x.setZero();
          for (std::size_t i = 0; i < items.size(); ++i)
            pbar_x.noalias() += std::exp(u[i] - lse) * catalog.feature(items[i]);
        }
        for (std::size_t c = 0; c < g.choices.size(); ++c) {
          const int choice = g.choices[c];
          const double count = g.counts[c];
          double u_a = 0.0;
          if (choice != 0) {
            const auto it = std::lower_bound(items.begin(), items.end(), choice);
            u_a = u[static_cast<std::size_t>(it - items.begin())];
          }
          const double neg_logp = lse - u_a;
          if (!std::isfinite(neg_logp)) zero_probability(g.assortment, choice);
          loss += count * neg_logp;
          if (grad) {
            grad->noalias() += count * pbar_x;
            if (choice != 0) grad->noalias() -= count * catalog.feature(choice);
          }
        }
      }
      break;
    }

    case Family::kLcl: {
      const auto& p = model.lcl();
      const int K = static_cast<int>(p.thetas.size());
      std::vector<MnlEval> evals(K);
      std::vector<Vec> xbar(K);
      std::vector<double> logw(K);
      for (int k = 0; k < K; ++k)
        logw[k] = p.weights[k] > 0.0 ? std::log(p.weights[k]) : kNegInf;
      for (const auto& g : data.groups()) {
        for (int k = 0; k < K; ++k) {
          evals[k] = eval_mnl(p.thetas[k], catalog, g.assortment);
          if (grad) {
            xbar[k] = Vec::Zero(d);
            for (std::size_t i = 0; i < evals[k].u.size(); ++i)
              xbar[k] += std::exp(evals[k].u[i] - evals[k].lse) *
                         catalog.feature(g.assortment.items[i]);
          }
        }
        for (std::size_t c = 0; c < g.choices.size(); ++c) {
          const int choice = g.choices[c];
          const double count = g.counts[c];
          int pos = -1;
          if (choice != 0) {
            const auto it = std::lower_bound(g.assortment.items.begin(),
                                             g.assortment.items.end(), choice);
            pos = static_cast<int>(it - g.assortment.items.begin());
          }
          // log p = logsumexp_k (log w_k + log g_k(a|s))
          double m = kNegInf;
          std::vector<double> z(K);
          for (int k = 0; k < K; ++k) {
            const double u_a = pos >= 0 ? evals[k].u[static_cast<std::size_t>(pos)] : 0.0;
            z[k] = u_a - evals[k].lse;
            m = std::max(m, logw[k] + z[k]);
          }
          if (!std::isfinite(m)) zero_probability(g.assortment, choice);
          double acc = 0.0;
          for (int k = 0; k < K; ++k)
            if (logw[k] != kNegInf) acc += std::exp(logw[k] + z[k] - m);
          const double logp = m + std::log(acc);
          if (!std::isfinite(logp)) zero_probability(g.assortment, choice);
          loss += count * (-logp);
          if (grad) {
            for (int k = 0; k < K; ++k) {
              // d(-logp)/dw_k = -g_k(a|s) / p(a|s), defined even at w_k = 0
              (*grad)[K * d + k] -= count * std::exp(z[k] - logp);
              if (logw[k] == kNegInf) continue;
              const double resp = std::exp(logw[k] + z[k] - logp);
              grad->segment(k * d, d).noalias() += count * resp * xbar[k];
              if (pos >= 0)
                grad->segment(k * d, d).noalias() -= count * resp * catalog.feature(choice);
            }
          }
        }
      }
      break;
    }

    case Family::kNl: {
      const auto& p = model.nl();
      const int K = static_cast<int>(p.lambdas.size());
      for (const auto& g : data.groups()) {
        const NlEval e = eval_nl(p, catalog, g.assortment);
        const int parts = static_cast<int>(e.parts.size());
        std::vector<double> nest_prob(parts), ubar(parts);
        std::vector<Vec> xbar(parts);
        Vec gtheta0;
        std::vector<double> glam0;
        if (grad) {
          gtheta0 = Vec::Zero(d);
          glam0.assign(parts, 0.0);
        }
        for (int j = 0; j < parts; ++j) {
          const auto& part = e.parts[j];
          nest_prob[j] = std::exp(part.w - e.big_lse);
          if (grad) {
            xbar[j] = Vec::Zero(d);
            ubar[j] = 0.0;
            for (std::size_t i = 0; i < part.item_pos.size(); ++i) {
              const double q = std::exp(part.u[i] - part.logv);
              xbar[j] += q * catalog.feature(g.assortment.items[part.item_pos[i]]);
              ubar[j] += q * part.u[i];
            }
            gtheta0.noalias() += nest_prob[j] * xbar[j];
            glam0[j] = nest_prob[j] * (part.logv - ubar[j]);
          }
        }
        for (std::size_t c = 0; c < g.choices.size(); ++c) {
          const int choice = g.choices[c];
          const double count = g.counts[c];
          int part_idx = -1;
          double u_a = 0.0;
          if (choice != 0) {
            const int nest = catalog.nest_of(choice);
            for (int j = 0; j < parts; ++j) {
              if (e.parts[j].nest != nest) continue;
              part_idx = j;
              for (std::size_t i = 0; i < e.parts[j].item_pos.size(); ++i) {
                if (g.assortment.items[e.parts[j].item_pos[i]] == choice) {
                  u_a = e.parts[j].u[i];
                  break;
                }
              }
              break;
            }
          }
          double neg_logp = e.big_lse;
          if (part_idx >= 0) {
            const double lambda = p.lambdas[e.parts[part_idx].nest];
            neg_logp -= (lambda - 1.0) * e.parts[part_idx].logv + u_a;
          }
          if (!std::isfinite(neg_logp)) zero_probability(g.assortment, choice);
          loss += count * neg_logp;
          if (grad) {
            grad->head(d).noalias() += count * gtheta0;
            for (int j = 0; j < parts; ++j) (*grad)[d + e.parts[j].nest] += count * glam0[j];
            if (part_idx >= 0) {
              const auto& part = e.parts[part_idx];
              const double lambda = p.lambdas[part.nest];
              grad->head(d).noalias() -=
                  count * ((lambda - 1.0) / lambda * xbar[part_idx] +
                           catalog.feature(choice) / lambda);
              (*grad)[d + part.nest] +=
                  count * (-part.logv + (lambda - 1.0) * ubar[part_idx] / lambda +
                           u_a / lambda);
            }
          }
        }
      }
      break;
    }
  }

  loss /= n;
  if (grad) *grad /= n;
  if (!std::isfinite(loss)) throw std::domain_error("negative log-likelihood is not finite");
  return loss;
}

}  // namespace

double nll(const ChoiceModel& model, const OfflineDataset& dataset, const ItemCatalog& catalog) {
  return grouped_nll(model, GroupedDataset(dataset, catalog), catalog, nullptr);
}

double nll(const ChoiceModel& model, const GroupedDataset& dataset, const ItemCatalog& catalog) {
  return grouped_nll(model, dataset, catalog, nullptr);
}

Vec nll_gradient(const ChoiceModel& model, const OfflineDataset& dataset,
                 const ItemCatalog& catalog) {
  Vec grad;
  grouped_nll(model, GroupedDataset(dataset, catalog), catalog, &grad);
  return grad;
}

double nll_with_gradient(const ChoiceModel& model, const GroupedDataset& dataset,
                         const ItemCatalog& catalog, Vec* grad) {
  return grouped_nll(model, dataset, catalog, grad);
}

Vec value_gradient(const ChoiceModel& model, const ItemCatalog& catalog, const Assortment& s) {
  s.validate(catalog.num_items);
  check_model_catalog(model, catalog);
  const int d = catalog.feature_dim;
  Vec grad = Vec::Zero(model.param_dim());

  switch (model.family()) {
    case Family::kMnl: {
      const MnlEval e = eval_mnl(model.mnl().theta, catalog, s);
      Vec xbar = Vec::Zero(d);
      Vec rpx = Vec::Zero(d);
      double value = 0.0;
      for (std::size_t i = 0; i < e.u.size(); ++i) {
        const double prob = std::exp(e.u[i] - e.lse);
        const Vec& x = catalog.feature(s.items[i]);
        const double r = catalog.revenue(s.items[i]);
        xbar += prob * x;
        rpx += r * prob * x;
        value += r * prob;
      }
      grad = rpx - value * xbar;
      break;
    }

    case Family::kLcl: {
      const auto& p = model.lcl();
      const int K = static_cast<int>(p.thetas.size());
      for (int k = 0; k < K; ++k) {
        const MnlEval e = eval_mnl(p.thetas[k], catalog, s);
        Vec xbar = Vec::Zero(d);
        Vec rpx = Vec::Zero(d);
        double class_value = 0.0;
        for (std::size_t i = 0; i < e.u.size(); ++i) {
          const double prob = std::exp(e.u[i] - e.lse);
          const Vec& x = catalog.feature(s.items[i]);
          const double r = catalog.revenue(s.items[i]);
          xbar += prob * x;
          rpx += r * prob * x;
          class_value += r * prob;
        }
        grad.segment(k * d, d) = p.weights[k] * (rpx - class_value * xbar);
        grad[K * d + k] = class_value;
      }
      break;
    }

    case Family::kNl: {
      const auto& p = model.nl();
      const NlEval e = eval_nl(p, catalog, s);
      const int parts = static_cast<int>(e.parts.size());
      std::vector<double> nest_prob(parts), nest_rev(parts), ubar(parts), rqu(parts);
      std::vector<Vec> xbar(parts), rqx(parts);
      double value = 0.0;
      Vec xbarbar = Vec::Zero(d);
      for (int j = 0; j < parts; ++j) {
        const auto& part = e.parts[j];
        nest_prob[j] = std::exp(part.w - e.big_lse);
        xbar[j] = Vec::Zero(d);
        rqx[j] = Vec::Zero(d);
        nest_rev[j] = ubar[j] = rqu[j] = 0.0;
        for (std::size_t i = 0; i < part.item_pos.size(); ++i) {
          const double q = std::exp(part.u[i] - part.logv);
          const int item = s.items[part.item_pos[i]];
          const Vec& x = catalog.feature(item);
          const double r = catalog.revenue(item);
          xbar[j] += q * x;
          ubar[j] += q * part.u[i];
          rqx[j] += r * q * x;
          rqu[j] += r * q * part.u[i];
          nest_rev[j] += r * q;
        }
        value += nest_prob[j] * nest_rev[j];
        xbarbar += nest_prob[j] * xbar[j];
      }
      for (int j = 0; j < parts; ++j) {
        const auto& part = e.parts[j];
        const double lambda = p.lambdas[part.nest];
        const Vec grad_rev = (rqx[j] - nest_rev[j] * xbar[j]) / lambda;
        grad.head(d).noalias() +=
            nest_prob[j] * (grad_rev + nest_rev[j] * (xbar[j] - xbarbar));
        grad[d + part.nest] =
            nest_prob[j] * ((nest_rev[j] * ubar[j] - rqu[j]) / lambda +
                            (nest_rev[j] - value) * (part.logv - ubar[j]));
      }
      break;
    }
  }
  return grad;
}

Vec project_to_simplex(const Vec& v) {
  const int n = static_cast<int>(v.size());
  std::vector<double> sorted(v.data(), v.data() + n);
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double running = 0.0;
  double tau = 0.0;
  int support = 0;
  for (int j = 0; j < n; ++j) {
    running += sorted[j];
    const double candidate = (running - 1.0) / (j + 1);
    if (sorted[j] - candidate > 0.0) {
      tau = candidate;
      support = j + 1;
    }
  }
  (void)support;
  Vec out(n);
  for (int j = 0; j < n; ++j) out[j] = std::max(v[j] - tau, 0.0);
  return out;
}

namespace {

Vec clip_to_ball(const Vec& v, double radius) {
  const double norm = v.norm();
  if (norm <= radius) return v;
  return v * (radius / norm);
}

}  // namespace

Vec project_params(const ChoiceModel& shape, const Vec& flat, const ParamBounds& bounds) {
  if (flat.size() != shape.param_dim())
    throw std::invalid_argument("flat parameter vector has wrong dimension");
  Vec out = flat;
  const int d = shape.feature_dim();
  switch (shape.family()) {
    case Family::kMnl:
      out = clip_to_ball(out, bounds.theta_norm_cap);
      break;
    case Family::kLcl: {
      const int K = shape.num_classes();
      for (int k = 0; k < K; ++k)
        out.segment(k * d, d) = clip_to_ball(out.segment(k * d, d), bounds.theta_norm_cap);
      out.tail(K) = project_to_simplex(out.tail(K));
      break;
    }
    case Family::kNl: {
      const int K = shape.num_classes();
      out.head(d) = clip_to_ball(out.head(d), bounds.theta_norm_cap);
      for (int k = 0; k < K; ++k)
        out[d + k] = std::clamp(out[d + k], bounds.lambda_min, 1.0);
      break;
    }
  }
  return out;
}

}  // namespace pasta
