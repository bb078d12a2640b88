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

#ifndef CQCHAN_COMPOUND_CAPACITY_HPP_
#define CQCHAN_COMPOUND_CAPACITY_HPP_

#include <cstdint>
#include <vector>

#include "cqchan/info_measures.hpp"

namespace cqchan {

/// A finite family of channels over one alphabet and one output space.
class CompoundSet {
 public:
  explicit CompoundSet(std::vector<CqChannel> channels);

  std::size_t size() const { return channels_.size(); }
  const CqChannel& channel(std::size_t t) const { return channels_[t]; }
  const std::vector<CqChannel>& channels() const { return channels_; }
  const std::vector<std::string>& alphabet() const { return channels_[0].alphabet(); }
  int dim() const { return channels_[0].dim(); }

 private:
  std::vector<CqChannel> channels_;
};

struct CapacityResult {
  double value;                 // min over the set of the mutual information at argmax_p
  InputDistribution argmax_p;
  std::size_t worst_index;      // a channel attaining the minimum at argmax_p
  long iterations;              // objective evaluations spent
  double achieved_tol;          // first-order estimate of residual suboptimality
  bool converged;
};

struct MinimaxResult {
  double lhs;   // max over p of the min over the weight grid
  double rhs;   // min over the weight grid of the per-channel maximum
  double gap;   // rhs - lhs
};

/// Channel mixed from the family with the given convex weights.
CqChannel mix_channels(const Eigen::VectorXd& weights, const CompoundSet& set);

/// Largest trace-norm distance between corresponding outputs.
double cq_distance(const CqChannel& a, const CqChannel& b);

/// All weight vectors with the given denominator: every coordinate a
/// multiple of 1/denominator, summing to one.
std::vector<Eigen::VectorXd> simplex_grid(int dims, int denominator);

/// max over input distributions of the worst-case mutual information
/// min_t I(p; W_t).  Multi-start projected supergradient ascent (ties
/// among worst channels are averaged) followed by a mass-move pattern
/// search at shrinking resolution.  Deterministic for a fixed seed.
CapacityResult compound_capacity(const CompoundSet& set, double tol = 1e-4,
                                 std::uint64_t seed = 1);

/// Evaluates both orders of optimization over the convex hull of the
/// set, discretized at the given weight denominator.  gap >= -tol is
/// checked; the hull makes the two sides agree up to grid error.
MinimaxResult minimax_check(const CompoundSet& set, int grid_denominator,
                            double tol = 1e-4, std::uint64_t seed = 1);

/// Weight vectors whose mixtures cover the convex hull of the set to
/// within 2 * alpha in the max-output trace-norm distance.  Mixtures
/// that coincide (distance <= 1e-12) are deduplicated.
std::vector<Eigen::VectorXd> alpha_net_weights(const CompoundSet& set, double alpha);

}  // namespace cqchan

#endif  // CQCHAN_COMPOUND_CAPACITY_HPP_
