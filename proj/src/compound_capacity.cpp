// Copyright 2026 The cqchan authors
//
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

#include "cqchan/compound_capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cqchan/rng.hpp"

namespace cqchan {

namespace {

// Divergences with empty-support inputs are capped at this value when
// they appear inside ascent directions.
constexpr double kGradCap = 1e3;

Eigen::VectorXd project_to_simplex(Eigen::VectorXd v) {
  const Eigen::Index n = v.size();
  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cssv = 0.0, theta = 0.0;
  int rho = 0;
  for (int i = 0; i < n; ++i) {
    cssv += u[i];
    double t = (cssv - 1.0) / (i + 1);
    if (u[i] - t > 0.0) {
      rho = i;
      theta = t;
    }
  }
  (void)rho;
  for (Eigen::Index i = 0; i < n; ++i) v[i] = std::max(0.0, v[i] - theta);
  double s = v.sum();
  if (s > 0.0) v /= s;
  return v;
}

struct Objective {
  const CompoundSet& set;
  mutable long evals = 0;

  // min over channels of the mutual information, with the attaining index.
  double value(const Eigen::VectorXd& p, std::size_t* worst = nullptr) const {
    ++evals;
    InputDistribution dist(set.alphabet(), p);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < set.size(); ++t) {
      double chi = holevo(dist, set.channel(t));
      if (chi < best) {
        best = chi;
        if (worst) *worst = t;
      }
    }
    return best;
  }

  // Ascent direction: per-channel directions are the divergences of each
  // output from the average output; the worst channels (ties within 1e-9)
  // are averaged.
  Eigen::VectorXd supergradient(const Eigen::VectorXd& p) const {
    InputDistribution dist(set.alphabet(), p);
    const Eigen::Index n = p.size();
    std::vector<double> chis(set.size());
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < set.size(); ++t) {
      chis[t] = holevo(dist, set.channel(t));
      best = std::min(best, chis[t]);
    }
    Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
    int active = 0;
    for (std::size_t t = 0; t < set.size(); ++t) {
      if (chis[t] > best + 1e-9) continue;
      ++active;
      DensityMatrix avg = average_output(dist, set.channel(t));
      for (Eigen::Index x = 0; x < n; ++x) {
        RelEntropy d = relative_entropy(set.channel(t).output(x), avg);
        g[x] += d.is_finite ? std::min(d.value, kGradCap) : kGradCap;
      }
    }
    return g / active;
  }
};

}  // namespace

CompoundSet::CompoundSet(std::vector<CqChannel> channels) : channels_(std::move(channels)) {
  if (channels_.empty()) throw InputError("compound set needs at least one channel");
  for (std::size_t t = 1; t < channels_.size(); ++t) {
    if (channels_[t].alphabet() != channels_[0].alphabet()) {
      throw InputError("compound set channel " + std::to_string(t) +
                       " has a different alphabet");
    }
    if (channels_[t].dim() != channels_[0].dim()) {
      throw InputError("compound set channel " + std::to_string(t) +
                       " has a different output dimension");
    }
  }
}

CqChannel mix_channels(const Eigen::VectorXd& weights, const CompoundSet& set) {
  if (static_cast<std::size_t>(weights.size()) != set.size()) {
    throw InputError("mixture needs one weight per channel");
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    if (weights[i] < -1e-12) throw InputError("mixture weights must be nonnegative");
    sum += weights[i];
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InputError("mixture weights sum to " + std::to_string(sum));
  }
  std::vector<DensityMatrix> outputs;
  for (std::size_t x = 0; x < set.alphabet().size(); ++x) {
    Matrix m = Matrix::Zero(set.dim(), set.dim());
    for (std::size_t t = 0; t < set.size(); ++t) {
      m += std::max(0.0, weights[static_cast<Eigen::Index>(t)]) *
           set.channel(t).output(x).matrix();
    }
    outputs.emplace_back(HermitianOperator(std::move(m)));
  }
  return CqChannel(set.alphabet(), std::move(outputs));
}

double cq_distance(const CqChannel& a, const CqChannel& b) {
  if (a.alphabet() != b.alphabet() || a.dim() != b.dim()) {
    throw InputError("channel distance needs matching alphabets and dimensions");
  }
  double worst = 0.0;
  for (std::size_t x = 0; x < a.alphabet_size(); ++x) {
    Matrix diff = a.output(x).matrix() - b.output(x).matrix();
    worst = std::max(worst, trace_norm(HermitianOperator(std::move(diff))));
  }
  return worst;
}

std::vector<Eigen::VectorXd> simplex_grid(int dims, int denominator) {
  if (dims < 1 || denominator < 1) {
    throw InputError("weight grid needs positive dimensions and denominator");
  }
  std::vector<Eigen::VectorXd> out;
  Eigen::VectorXd cur = Eigen::VectorXd::Zero(dims);
  // Depth-first over compositions of `denominator` into `dims` parts.
  std::vector<int> counts(dims, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == dims - 1) {
      counts[pos] = remaining;
      for (int i = 0; i < dims; ++i) cur[i] = static_cast<double>(counts[i]) / denominator;
      out.push_back(cur);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      counts[pos] = k;
      self(self, pos + 1, remaining - k);
    }
    if (out.size() > 2'000'000) throw BudgetError("weight grid too large");
  };
  rec(rec, 0, denominator);
  return out;
}

CapacityResult compound_capacity(const CompoundSet& set, double tol, std::uint64_t seed) {
  if (!(tol > 0.0)) throw InputError("capacity tolerance must be positive");
  const Eigen::Index n = static_cast<Eigen::Index>(set.alphabet().size());
  Objective obj{set};

  const int kStarts = 8;
  const int kAscentIters = 200;
  Eigen::VectorXd best_p;
  double best_val = -std::numeric_limits<double>::infinity();

  for (int s = 0; s < kStarts; ++s) {
    Eigen::VectorXd p;
    if (s == 0) {
      p = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    } else {
      auto rng = stream_rng(seed, static_cast<std::uint64_t>(s));
      p.resize(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        p[i] = -std::log(1.0 - uniform_double(rng));
      }
      p /= p.sum();
    }
    for (int k = 0; k < kAscentIters; ++k) {
      Eigen::VectorXd g = obj.supergradient(p);
      double step = 0.25 / std::sqrt(static_cast<double>(k + 1));
      p = project_to_simplex(p + step * g);
    }
    double val = obj.value(p);
    if (val > best_val) {
      best_val = val;
      best_p = p;
    }
  }

  // Pattern search: move probability mass h between coordinate pairs,
  // halving h until below tol / 4.
  const double h_min = std::max(tol / 4.0, 1e-12);
  const long kEvalCap = 200'000;
  double h = 0.25;
  bool converged = true;
  while (h >= h_min) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (best_p[i] < h - 1e-15) continue;
        for (Eigen::Index j = 0; j < n; ++j) {
          if (i == j) continue;
          Eigen::VectorXd cand = best_p;
          cand[i] -= h;
          cand[j] += h;
          if (cand[i] < 0.0) cand[i] = 0.0;
          double val = obj.value(cand);
          if (val > best_val + 1e-15) {
            best_val = val;
            best_p = cand;
            improved = true;
          }
        }
      }
      if (obj.evals > kEvalCap) {
        converged = false;
        improved = false;
        h = 0.0;
      }
    }
    h /= 2.0;
  }

  std::size_t worst = 0;
  double value = obj.value(best_p, &worst);
  Eigen::VectorXd g = obj.supergradient(best_p);
  double grad_span = g.maxCoeff() - g.minCoeff();
  CapacityResult out{value,
                     InputDistribution(set.alphabet(), best_p),
                     worst,
                     obj.evals,
                     std::max(h_min, 2.0 * h_min * grad_span),
                     converged};
  return out;
}

MinimaxResult minimax_check(const CompoundSet& set, int grid_denominator, double tol,
                            std::uint64_t seed) {
  auto weights = simplex_grid(static_cast<int>(set.size()), grid_denominator);
  if (weights.size() > 100'000) {
    throw BudgetError("minimax weight grid has " + std::to_string(weights.size()) +
                      " points, limit is 100000");
  }
  std::vector<CqChannel> grid;
  grid.reserve(weights.size());
  for (const auto& q : weights) grid.push_back(mix_channels(q, set));

  double lhs = compound_capacity(CompoundSet(grid), tol, seed).value;
  double rhs = std::numeric_limits<double>::infinity();
  for (const auto& ch : grid) {
    rhs = std::min(rhs, compound_capacity(CompoundSet({ch}), tol, seed).value);
  }
  MinimaxResult out{lhs, rhs, rhs - lhs};
  if (out.gap < -tol) {
    throw CheckError("minimax gap " + std::to_string(out.gap) + " below -tol");
  }
  return out;
}

std::vector<Eigen::VectorXd> alpha_net_weights(const CompoundSet& set, double alpha) {
  if (!(alpha > 0.0) || alpha >= 1.0) {
    throw InputError("net resolution alpha must be in (0, 1)");
  }
  int m = static_cast<int>(set.size());
  int denom = static_cast<int>(std::ceil(static_cast<double>(m) / alpha));
  auto weights = simplex_grid(m, denom);

  // Any hull point has a weight vector within l1 distance m/denom <= alpha
  // of a grid point, and mixing is 1-Lipschitz from l1 weights to the
  // max-output trace-norm distance; the grid is a 2*alpha net.
  std::vector<Eigen::VectorXd> kept;
  std::vector<CqChannel> kept_channels;
  for (const auto& q : weights) {
    CqChannel ch = mix_channels(q, set);
    bool dup = false;
    for (const auto& seen : kept_channels) {
      if (cq_distance(ch, seen) <= 1e-12) {
        dup = true;
        break;
      }
    }
    if (!dup) {
      kept.push_back(q);
      kept_channels.push_back(std::move(ch));
    }
  }

  double log2_card = std::log2(static_cast<double>(kept.size()));
  double log2_bound = 2.0 * static_cast<double>(set.alphabet().size()) *
                      static_cast<double>(set.dim()) * static_cast<double>(set.dim()) *
                      std::log2(6.0 / alpha);
  if (log2_card > log2_bound) {
    throw CheckError("net cardinality exceeds the guaranteed bound");
  }
  return kept;
}

}  // namespace cqchan
