// Copyright 2026 The convpde Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Independent checks of the convolution engine and the randomized
// classification-invariance experiment.

#ifndef CONVPDE_ORACLE_H_
#define CONVPDE_ORACLE_H_

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "convpde/bipoly.h"
#include "convpde/conv.h"
#include "convpde/pde.h"

namespace convpde {

// Convolution computed by expanding (x - s)^i with binomial coefficients
// (Pascal's triangle) and integrating each power of s separately. Shares no
// code with BetaCoefficient or ConvSingle/ConvDouble.
BiPoly ConvOracleExact(const BiPoly& p, const BiPoly& q, Axis axis);

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule MakeGaussLegendre(int n);

// Evaluates the defining convolution integral at `point` by Gauss-Legendre
// quadrature with `nodes` points per integrated variable. Throws
// std::domain_error unless the convolved coordinates are positive, and
// std::invalid_argument if nodes < 8.
double ConvNumericAt(const BiPoly& p, const BiPoly& q, Axis axis,
                     std::pair<double, double> point, int nodes = 64);

// Evaluates p at a floating-point point.
double EvalDouble(const BiPoly& p, std::pair<double, double> point);

enum class Family { kWave, kGeneral };

std::string ToString(Family f);

struct ExperimentConfig {
  int trials = 500;
  int max_degree = 6;
  int max_chain_length = 3;
  std::uint64_t seed = 0;
  Axis axis = Axis::kXY;
  Family family = Family::kWave;
  // Worker threads; the report does not depend on this.
  int threads = 1;

  // Throws std::invalid_argument when trials < 1, max_degree is outside
  // [1, 12] or max_chain_length < 1.
  void Validate() const;
};

// Deterministic generator derived from (seed, trial).
std::mt19937_64 TrialRng(std::uint64_t seed, std::uint64_t trial);

struct GeneratedTrial {
  SecondOrderPde pde;
  KernelChain chain;
};

// Random equation and kernel chain with positive rational coefficients,
// degrees in [0, max_degree] and 1..max_chain_length kernels. The wave
// family has b = 0 and a negated u_22 coefficient.
GeneratedTrial RandomPdeAndChain(const ExperimentConfig& config,
                                 std::mt19937_64& rng);

struct TrialRecord {
  std::uint64_t trial = 0;
  std::string id;  // "<family>:seed=<s>:trial=<n>"
  bool fixed = false;  // a hand-picked reference instance, not random
  std::array<TypeVerdict, 4> original{};
  std::array<TypeVerdict, 4> convolved{};
  bool agree = false;  // all four quadrants equal

  bool agree_in(Quadrant q) const {
    return original[static_cast<int>(q)] == convolved[static_cast<int>(q)];
  }
};

struct InvarianceReport {
  ExperimentConfig config;
  std::vector<TrialRecord> records;
  int agreeing = 0;
  int disagreeing = 0;
  int agreeing_quadrant_one = 0;
  // Trials with Hyperbolic quadrant-I verdicts both before and after.
  int hyperbolic_quadrant_one_both = 0;
};

// The single-x-convolution reference instance x^3 *x (x^2 y^3 u_xx +
// x^3 y^4 u_xy + x^4 y^5 u_yy), whose original discriminant vanishes
// identically while the convolved one is negative.
GeneratedTrial ReferenceDisagreementTrial();

// Runs every trial and tallies agreement. Trial 0 of the general family is
// ReferenceDisagreementTrial(); every other trial is drawn from
// TrialRng(seed, trial).
InvarianceReport RunInvarianceExperiment(const ExperimentConfig& config);

}  // namespace convpde

#endif  // CONVPDE_ORACLE_H_
