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

#ifndef CQCHAN_INFO_MEASURES_HPP_
#define CQCHAN_INFO_MEASURES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "cqchan/operator_core.hpp"

namespace cqchan {

// All entropies and divergences are in bits (base-2 logarithms).

/// A probability distribution over a named finite alphabet.
/// Entries are nonnegative and sum to one within 1e-9.
class InputDistribution {
 public:
  InputDistribution(std::vector<std::string> alphabet, Eigen::VectorXd probs);

  static InputDistribution uniform(std::vector<std::string> alphabet);

  std::size_t size() const { return alphabet_.size(); }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const Eigen::VectorXd& probs() const { return probs_; }
  double prob(std::size_t x) const { return probs_[static_cast<Eigen::Index>(x)]; }

 private:
  std::vector<std::string> alphabet_;
  Eigen::VectorXd probs_;
};

/// A channel with classical inputs and quantum outputs: one density
/// matrix per input symbol, all of the same dimension.
class CqChannel {
 public:
  CqChannel(std::vector<std::string> alphabet, std::vector<DensityMatrix> outputs);

  std::size_t alphabet_size() const { return alphabet_.size(); }
  int dim() const { return outputs_[0].dim(); }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const DensityMatrix& output(std::size_t x) const { return outputs_[x]; }
  const std::vector<DensityMatrix>& outputs() const { return outputs_; }

 private:
  std::vector<std::string> alphabet_;
  std::vector<DensityMatrix> outputs_;
};

/// Relative entropy value with an explicit infinity tag.  The numeric
/// value is only meaningful when is_finite is true; callers must check.
struct RelEntropy {
  bool is_finite;
  double value;

  static RelEntropy finite(double v) { return {true, v}; }
  static RelEntropy infinite() { return {false, 0.0}; }
};

/// Trace distance between two states, plus the induced entropy-difference
/// bound eps * log2(d / eps) when eps = trace distance <= 1/e.  Outside
/// that range only the distance is reported.
struct FannesBound {
  double trace_distance;
  std::optional<double> bound;
};

/// Von Neumann entropy in bits.  Eigenvalues in [-1e-9, 0] are clamped
/// to zero before the log.
double von_neumann_entropy(const DensityMatrix& rho);

/// D(rho || sigma) in bits; infinite() when the support of rho is not
/// contained in the support of sigma (support tolerance 1e-9 relative).
RelEntropy relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Average output sum_x p(x) W(x).
DensityMatrix average_output(const InputDistribution& p, const CqChannel& w);

/// Mutual information between the input and the channel output:
/// S(sum_x p(x) W(x)) - sum_x p(x) S(W(x)).
double holevo(const InputDistribution& p, const CqChannel& w);

/// Block-diagonal classical-quantum state sum_x p(x) |e_x><e_x| (x) W(x)
/// on a space of dimension |alphabet| * dim.
DensityMatrix cq_joint_state(const InputDistribution& p, const CqChannel& w);

/// See FannesBound.
FannesBound fannes_bound(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace cqchan

#endif  // CQCHAN_INFO_MEASURES_HPP_
