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

#include "convpde/oracle.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace convpde {

namespace {

// Row n of Pascal's triangle.
std::vector<BigInt> BinomialRow(std::uint32_t n) {
  std::vector<BigInt> row{BigInt(1)};
  for (std::uint32_t r = 1; r <= n; ++r) {
    std::vector<BigInt> next(r + 1, BigInt(1));
    for (std::uint32_t k = 1; k < r; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  return row;
}

// int_0^1 (1 - s)^i s^a ds = sum_k C(i, k) (-1)^k / (k + a + 1).
Rational ExpandedIntegral(std::uint32_t i, std::uint32_t a) {
  const std::vector<BigInt> row = BinomialRow(i);
  Rational sum;
  for (std::uint32_t k = 0; k <= i; ++k) {
    Rational term(row[k], BigInt(k + a + 1));
    if (k % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform integer in [lo, hi]. Modulo reduction keeps the stream identical
// across standard libraries, unlike std::uniform_int_distribution.
int Uniform(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

Rational RandomPositiveRational(std::mt19937_64& rng) {
  return MakeRational(Uniform(rng, 1, 9), Uniform(rng, 1, 9));
}

BiPoly RandomPositivePoly(std::mt19937_64& rng, int max_degree, int max_terms) {
  BiPoly p;
  const int terms = Uniform(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    const auto d1 = static_cast<std::uint32_t>(Uniform(rng, 0, max_degree));
    const auto d2 = static_cast<std::uint32_t>(Uniform(rng, 0, max_degree));
    p.AddTerm({d1, d2}, RandomPositiveRational(rng));
  }
  return p;
}

TrialRecord RunTrial(const ExperimentConfig& config, std::uint64_t trial) {
  TrialRecord rec;
  rec.trial = trial;
  rec.id = ToString(config.family) + ":seed=" + std::to_string(config.seed) +
           ":trial=" + std::to_string(trial);
  const bool reference = config.family == Family::kGeneral && trial == 0;
  rec.fixed = reference;

  std::mt19937_64 rng = TrialRng(config.seed, trial);
  const GeneratedTrial gen =
      reference ? ReferenceDisagreementTrial() : RandomPdeAndChain(config, rng);
  const EquationReport report = ClassifyEquation(gen.pde, gen.chain);
  rec.original = report.original_types;
  rec.convolved = report.types;
  rec.agree = report.agrees_everywhere();
  return rec;
}

}  // namespace

BiPoly ConvOracleExact(const BiPoly& p, const BiPoly& q, Axis axis) {
  BiPoly out;
  for (const auto& [m1, c1] : p.terms()) {
    for (const auto& [m2, c2] : q.terms()) {
      Rational coeff = c1 * c2;
      Monomial mono{m1.deg1 + m2.deg1, m1.deg2 + m2.deg2};
      if (axis == Axis::kX || axis == Axis::kXY) {
        coeff *= ExpandedIntegral(m1.deg1, m2.deg1);
        mono.deg1 += 1;
      }
      if (axis == Axis::kY || axis == Axis::kXY) {
        coeff *= ExpandedIntegral(m1.deg2, m2.deg2);
        mono.deg2 += 1;
      }
      out.AddTerm(mono, coeff);
    }
  }
  return out;
}

GaussLegendreRule MakeGaussLegendre(int n) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre needs n >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const auto un = static_cast<unsigned>(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      const double pn = std::legendre(un, x);
      const double pn1 = std::legendre(un - 1, x);
      dp = n * (x * pn - pn1) / (x * x - 1.0);
      const double step = pn / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double pn1 = std::legendre(un - 1, x);
    dp = n * (x * std::legendre(un, x) - pn1) / (x * x - 1.0);
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

double EvalDouble(const BiPoly& p, std::pair<double, double> point) {
  double sum = 0.0;
  for (const auto& [mono, c] : p.terms()) {
    sum += c.to_double() * std::pow(point.first, mono.deg1) *
           std::pow(point.second, mono.deg2);
  }
  return sum;
}

double ConvNumericAt(const BiPoly& p, const BiPoly& q, Axis axis,
                     std::pair<double, double> point, int nodes) {
  if (nodes < 8) throw std::invalid_argument("quadrature needs >= 8 nodes");
  if (!(point.first > 0.0) || !(point.second > 0.0)) {
    throw std::domain_error("quadrature point must have positive coordinates");
  }
  const GaussLegendreRule rule = MakeGaussLegendre(nodes);
  const auto [x, y] = point;
  double sum = 0.0;
  switch (axis) {
    case Axis::kX:
      for (int i = 0; i < nodes; ++i) {
        const double s = 0.5 * x * (rule.nodes[i] + 1.0);
        sum += rule.weights[i] * EvalDouble(p, {x - s, y}) * EvalDouble(q, {s, y});
      }
      return 0.5 * x * sum;
    case Axis::kY:
      for (int i = 0; i < nodes; ++i) {
        const double s = 0.5 * y * (rule.nodes[i] + 1.0);
        sum += rule.weights[i] * EvalDouble(p, {x, y - s}) * EvalDouble(q, {x, s});
      }
      return 0.5 * y * sum;
    case Axis::kXY:
      for (int i = 0; i < nodes; ++i) {
        const double s = 0.5 * x * (rule.nodes[i] + 1.0);
        for (int j = 0; j < nodes; ++j) {
          const double r = 0.5 * y * (rule.nodes[j] + 1.0);
          sum += rule.weights[i] * rule.weights[j] *
                 EvalDouble(p, {x - s, y - r}) * EvalDouble(q, {s, r});
        }
      }
      return 0.25 * x * y * sum;
  }
  return sum;
}

std::string ToString(Family f) {
  return f == Family::kWave ? "wave" : "general";
}

void ExperimentConfig::Validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (max_degree < 1 || max_degree > 12) {
    throw std::invalid_argument("max_degree must be in [1, 12]");
  }
  if (max_chain_length < 1) {
    throw std::invalid_argument("max_chain_length must be >= 1");
  }
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
}

std::mt19937_64 TrialRng(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(SplitMix64(SplitMix64(seed) ^ (trial * 0x2545f4914f6cdd1dULL)));
}

GeneratedTrial RandomPdeAndChain(const ExperimentConfig& config,
                                 std::mt19937_64& rng) {
  const int deg = config.max_degree;
  const int chain_len = Uniform(rng, 1, config.max_chain_length);
  std::vector<BiPoly> kernels;
  for (int k = 0; k < chain_len; ++k) {
    kernels.push_back(RandomPositivePoly(rng, deg, 2));
  }
  KernelChain chain(std::move(kernels), config.axis);

  if (config.family == Family::kWave) {
    BiPoly a = RandomPositivePoly(rng, deg, 3);
    BiPoly c = -RandomPositivePoly(rng, deg, 3);
    return {SecondOrderPde(std::move(a), BiPoly(), std::move(c)),
            std::move(chain)};
  }
  BiPoly a = RandomPositivePoly(rng, deg, 3);
  BiPoly b = Uniform(rng, 0, 3) == 0 ? BiPoly() : RandomPositivePoly(rng, deg, 3);
  BiPoly c = RandomPositivePoly(rng, deg, 3);
  return {SecondOrderPde(std::move(a), std::move(b), std::move(c)),
          std::move(chain)};
}

GeneratedTrial ReferenceDisagreementTrial() {
  return {SecondOrderPde(BiPoly::Term(Rational(1), 2, 3),
                         BiPoly::Term(Rational(1), 3, 4),
                         BiPoly::Term(Rational(1), 4, 5)),
          KernelChain({BiPoly::Term(Rational(1), 3, 0)}, Axis::kX)};
}

InvarianceReport RunInvarianceExperiment(const ExperimentConfig& config) {
  config.Validate();
  InvarianceReport report;
  report.config = config;
  report.records.resize(static_cast<std::size_t>(config.trials));

  const int workers = std::min(config.threads, config.trials);
  if (workers <= 1) {
    for (int t = 0; t < config.trials; ++t) {
      report.records[t] = RunTrial(config, static_cast<std::uint64_t>(t));
    }
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int t = w; t < config.trials; t += workers) {
          report.records[t] = RunTrial(config, static_cast<std::uint64_t>(t));
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  for (const TrialRecord& rec : report.records) {
    if (rec.agree) {
      ++report.agreeing;
    } else {
      ++report.disagreeing;
    }
    if (rec.agree_in(Quadrant::kI)) ++report.agreeing_quadrant_one;
    if (rec.original[0] == TypeVerdict::kHyperbolic &&
        rec.convolved[0] == TypeVerdict::kHyperbolic) {
      ++report.hyperbolic_quadrant_one_both;
    }
  }
  return report;
}

}  // namespace convpde
