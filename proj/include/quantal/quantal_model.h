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

#ifndef QUANTAL_QUANTAL_MODEL_H_
#define QUANTAL_QUANTAL_MODEL_H_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "quantal/common.h"

namespace quantal {

// How the bounded-rational follower turns action utilities into a
// distribution.
//
//  - kLogit:          p(a) proportional to exp(lambda * u(a)).
//  - kOrderingBased:  fixed weights assigned by descending utility rank; the
//                     response depends only on the ordering of utilities.
//  - kCustom:         p(a) proportional to q(u(a)) for a strictly positive
//                     increasing generator q.
//  - kUniform:        the lambda -> 0 limit of logit.
class QuantalModel {
 public:
  enum class Kind { kLogit, kOrderingBased, kCustom, kUniform };

  static QuantalModel Logit(double lambda);
  // Empty weights select the default family: 0.5 to the best action, 0.3 to
  // the second, the remaining 0.2 spread uniformly (renormalized for n <= 2).
  static QuantalModel OrderingBased(std::vector<double> weights = {});
  static QuantalModel Custom(std::function<double(double)> generator,
                             std::string name = "custom");
  static QuantalModel Uniform();

  Kind kind() const { return kind_; }
  double lambda() const { return lambda_; }
  const std::vector<double>& ordering_weights() const { return weights_; }
  const std::string& name() const { return name_; }

  // Weights used for an n-action decision by an ordering-based model.
  std::vector<double> OrderingWeightsFor(int n) const;

  // Distribution over actions given their utilities for the follower.
  void Respond(std::span<const double> utilities, std::span<double> out) const;
  std::vector<double> Respond(std::span<const double> utilities) const;

  // d/du log q(u) at each utility; zero for piecewise-constant responses.
  // Used by analytic gradients of the commitment objective.
  void LogGeneratorSlope(std::span<const double> utilities,
                         std::span<double> out) const;

  // Same kind with lambda multiplied by `factor` (logit only; other kinds are
  // returned unchanged).
  QuantalModel Scaled(double factor) const;

  std::string Describe() const;

 private:
  QuantalModel() = default;

  Kind kind_ = Kind::kUniform;
  double lambda_ = 0.0;
  std::vector<double> weights_;
  std::function<double(double)> generator_;
  std::string name_ = "uniform";
};

// Principal branch of the Lambert W function on x >= 0, via Newton's method.
double LambertW(double x, int iterations = 50);

// Softmax-weighted average sum_i a_i e^{lambda a_i} / sum_i e^{lambda a_i}.
double SoftmaxAverage(std::span<const double> values, double lambda);

// Upper bound on max(A) - SoftmaxAverage(A) for |A| = n >= 2:
// W(1/e)/lambda + (n - 2)/(lambda e).
double SoftmaxGapBound(int n, double lambda);

}  // namespace quantal

#endif  // QUANTAL_QUANTAL_MODEL_H_
