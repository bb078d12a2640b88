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

#ifndef CQCHAN_HYPOTEST_HPP_
#define CQCHAN_HYPOTEST_HPP_

#include <cstdint>
#include <vector>

#include "cqchan/compound_capacity.hpp"

namespace cqchan {

/// Block states for discriminating "joint" from "product" behaviour of
/// an unknown channel from the family, uniformly over the family.
///
/// Both states live on (C^n)^{(x) l} (x) (C^d)^{(x) l} with the classical
/// registers collected in front: rho_l averages the permuted l-fold
/// joint states of the family members, tau_l pairs the l-fold input
/// distribution with the family-averaged l-fold mean outputs.
struct TestStates {
  DensityMatrix rho_l;
  DensityMatrix tau_l;
  int blocklength;    // l
  int num_inputs;     // alphabet size n
  int local_dim;      // output dimension d
  double a;           // worst-case divergence between joint and product, in bits
};

/// Outcome of the universal test at a given rate offset delta.
struct TestResult {
  HermitianOperator projector;  // q, commutes with tau_l
  double alpha_error;           // tr((1 - q) rho_l)
  double beta;                  // tr(q tau_l)
  double beta_bound;            // 2^{-l (a - delta)}, always >= beta - 1e-9
  double epsilon_used;
  bool vacuous;                 // beta_bound >= 1
};

/// Builds the discrimination states for blocklength l.
/// Requires (n * d)^l <= 4096.
TestStates build_test_states(const CompoundSet& set, const InputDistribution& p, int l);

/// The universal projector: mix epsilon of tau_l into rho_l, pinch onto
/// the eigenspaces of tau_l (restricted to its support), subtract
/// 2^{l(a-delta)} tau_l and keep the nonnegative spectral part.
/// Guarantees tr(q tau_l) <= 2^{-l(a-delta)} and [q, tau_l] = 0, both
/// enforced within tolerance.
TestResult universal_test(const TestStates& states, double delta, double epsilon);

/// Number of distinct eigenvalue clusters of a permutation-invariant
/// operator on (C^d)^{(x) l}.  Rejects operators that fail invariance
/// under adjacent factor swaps; checks the count against (l+1)^(d^2).
int spectrum_count(const HermitianOperator& y, int l, int local_dim,
                   double cluster_tol = kClusterTol);

/// Minimum eigenvalue of K * sum_k P_k x P_k - x for a state x and an
/// orthogonal resolution {P_k} of the identity (K projections).
/// Nonnegative up to rounding.
double pinching_inequality_check(const DensityMatrix& x,
                                 const std::vector<HermitianOperator>& projections);

}  // namespace cqchan

#endif  // CQCHAN_HYPOTEST_HPP_
