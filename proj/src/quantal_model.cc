// Copyright 2026 The Quantal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quantal/quantal_model.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

namespace quantal {

QuantalModel QuantalModel::Logit(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw GameError("logit rationality lambda must be positive and finite");
  }
  QuantalModel m;
  m.kind_ = Kind::kLogit;
  m.lambda_ = lambda;
  m.name_ = "logit";
  return m;
}

QuantalModel QuantalModel::OrderingBased(std::vector<double> weights) {
  if (!weights.empty()) {
    double sum = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (!(weights[i] >= 0.0)) {
        throw GameError("ordering weights must be nonnegative");
      }
      if (i > 0 && weights[i] > weights[i - 1]) {
        throw GameError("ordering weights must be descending");
      }
      sum += weights[i];
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw GameError("ordering weights must sum to one");
    }
  }
  QuantalModel m;
  m.kind_ = Kind::kOrderingBased;
  m.weights_ = std::move(weights);
  m.name_ = "ordering_based";
  return m;
}

QuantalModel QuantalModel::Custom(std::function<double(double)> generator,
                                  std::string name) {
  if (!generator) throw GameError("custom model needs a generator");
  // Positivity and strict monotonicity on a sampled grid.
  double prev = 0.0;
  for (int k = 0; k <= 200; ++k) {
    const double x = -50.0 + 0.5 * k;
    const double q = generator(x);
    if (!(q > 0.0) || !std::isfinite(q)) {
      throw GameError("generator must be strictly positive and finite");
    }
    if (k > 0 && !(q > prev)) {
      throw GameError("generator must be strictly increasing");
    }
    prev = q;
  }
  QuantalModel m;
  m.kind_ = Kind::kCustom;
  m.generator_ = std::move(generator);
  m.name_ = std::move(name);
  return m;
}

QuantalModel QuantalModel::Uniform() { return QuantalModel(); }

std::vector<double> QuantalModel::OrderingWeightsFor(int n) const {
  if (!weights_.empty()) {
    if (static_cast<int>(weights_.size()) != n) {
      throw DomainError("ordering weights cover " +
                        std::to_string(weights_.size()) +
                        " actions, decision has " + std::to_string(n));
    }
    return weights_;
  }
  if (n == 1) return {1.0};
  if (n == 2) return {0.5 / 0.8, 0.3 / 0.8};
  std::vector<double> w(n, 0.2 / (n - 2));
  w[0] = 0.5;
  w[1] = 0.3;
  return w;
}

void QuantalModel::Respond(std::span<const double> u,
                           std::span<double> out) const {
  const std::size_t n = u.size();
  switch (kind_) {
    case Kind::kUniform:
      std::fill(out.begin(), out.end(), 1.0 / n);
      return;
    case Kind::kLogit: {
      // Max-subtraction keeps exp() in range for large lambda * u.
      const double top = *std::max_element(u.begin(), u.end());
      double sum = 0.0;
      for (std::size_t a = 0; a < n; ++a) {
        out[a] = std::exp(lambda_ * (u[a] - top));
        sum += out[a];
      }
      for (std::size_t a = 0; a < n; ++a) out[a] /= sum;
      return;
    }
    case Kind::kCustom: {
      double sum = 0.0;
      for (std::size_t a = 0; a < n; ++a) {
        out[a] = generator_(u[a]);
        sum += out[a];
      }
      for (std::size_t a = 0; a < n; ++a) out[a] /= sum;
      return;
    }
    case Kind::kOrderingBased: {
      const std::vector<double> w = OrderingWeightsFor(static_cast<int>(n));
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return u[a] > u[b]; });
      // Tied actions share the mean weight of the ranks they occupy.
      for (std::size_t k = 0; k < n;) {
        std::size_t end = k + 1;
        while (end < n && u[order[end]] == u[order[k]]) ++end;
        double share = 0.0;
        for (std::size_t j = k; j < end; ++j) share += w[j];
        share /= static_cast<double>(end - k);
        for (std::size_t j = k; j < end; ++j) out[order[j]] = share;
        k = end;
      }
      return;
    }
  }
}

std::vector<double> QuantalModel::Respond(std::span<const double> u) const {
  std::vector<double> out(u.size());
  Respond(u, out);
  return out;
}

void QuantalModel::LogGeneratorSlope(std::span<const double> u,
                                     std::span<double> out) const {
  switch (kind_) {
    case Kind::kLogit:
      std::fill(out.begin(), out.end(), lambda_);
      return;
    case Kind::kUniform:
    case Kind::kOrderingBased:
      std::fill(out.begin(), out.end(), 0.0);
      return;
    case Kind::kCustom:
      for (std::size_t a = 0; a < u.size(); ++a) {
        const double h = 1e-6 * std::max(1.0, std::abs(u[a]));
        out[a] = (std::log(generator_(u[a] + h)) -
                  std::log(generator_(u[a] - h))) /
                 (2.0 * h);
      }
      return;
  }
}

QuantalModel QuantalModel::Scaled(double factor) const {
  if (kind_ != Kind::kLogit) return *this;
  return Logit(lambda_ * factor);
}

std::string QuantalModel::Describe() const {
  std::ostringstream os;
  os << name_;
  if (kind_ == Kind::kLogit) os << "(lambda=" << lambda_ << ")";
  return os.str();
}

double LambertW(double x, int iterations) {
  if (x < 0.0) throw GameError("LambertW implemented for x >= 0 only");
  double w = std::log1p(x);
  for (int i = 0; i < iterations; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double df = ew * (w + 1.0);
    w -= f / df;
  }
  return w;
}

double SoftmaxAverage(std::span<const double> values, double lambda) {
  const double top = *std::max_element(values.begin(), values.end());
  double num = 0.0, den = 0.0;
  for (double v : values) {
    const double e = std::exp(lambda * (v - top));
    num += v * e;
    den += e;
  }
  return num / den;
}

double SoftmaxGapBound(int n, double lambda) {
  if (n < 2) throw GameError("softmax gap bound needs at least two values");
  static const double kW = LambertW(1.0 / std::exp(1.0));
  return kW / lambda + (n - 2) / (lambda * std::exp(1.0));
}

}  // namespace quantal
