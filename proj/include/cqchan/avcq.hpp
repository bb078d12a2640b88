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

#ifndef CQCHAN_AVCQ_HPP_
#define CQCHAN_AVCQ_HPP_

#include <cstdint>
#include <vector>

#include "cqchan/coding.hpp"

namespace cqchan {

/// A channel whose behaviour is picked per letter by an adversary from
/// a finite set of states: one member channel per state, all over one
/// input alphabet and output space.
class Avcq {
 public:
  Avcq(std::vector<std::string> state_names, std::vector<CqChannel> channels);

  std::size_t num_states() const { return channels_.size(); }
  const std::vector<std::string>& state_names() const { return state_names_; }
  const CqChannel& channel(std::size_t s) const { return channels_[s]; }
  const std::vector<std::string>& alphabet() const { return channels_[0].alphabet(); }
  int dim() const { return channels_[0].dim(); }

  /// The member channels as a compound family.
  CompoundSet generators() const { return CompoundSet(channels_); }

 private:
  std::vector<std::string> state_names_;
  std::vector<CqChannel> channels_;
};

/// A finitely supported random code: codes with convex weights.
/// All atoms share alphabet size, blocklength, and message count.
class DiscreteRandomCode {
 public:
  DiscreteRandomCode(std::vector<Code> atoms, Eigen::VectorXd weights);

  std::size_t size() const { return atoms_.size(); }
  const Code& atom(std::size_t k) const { return atoms_[k]; }
  const Eigen::VectorXd& weights() const { return weights_; }
  int blocklength() const { return atoms_[0].blocklength(); }
  std::size_t messages() const { return atoms_[0].size(); }

 private:
  std::vector<Code> atoms_;
  Eigen::VectorXd weights_;
};

struct EvalMode {
  bool exhaustive = true;
  long long sample_count = 100000;  // used when exhaustive is false
  std::uint64_t seed = 1;
};

struct WorstCaseResult {
  double success;                   // smallest average success found
  std::vector<int> argmin_sequence; // a state sequence attaining it
  bool exhaustive;
  long long sequences_checked;
};

/// Distributions solving the pairwise mixture-matching problem for one
/// unordered input pair: mixing the adversary states with p on input x
/// and with q on input y should produce the same output.  `distance` is
/// the Frobenius norm of the best achievable mismatch.
struct PairWitness {
  std::size_t x, y;
  Eigen::VectorXd p, q;
  double distance;
};

struct SymmetrizabilityCertificate {
  bool symmetrizable;
  double tol;
  std::vector<PairWitness> witnesses;  // one per unordered pair, lexicographic
  std::size_t separating_pair;         // index into witnesses when not symmetrizable
};

struct ReductionResult {
  std::vector<Code> codes;   // the sampled deterministic codes
  WorstCaseResult worst;     // of the uniform family over them
  double target;
  int retries_used;
  bool target_met;
};

struct AttackResult {
  double success_bound;      // min of the two attacked messages' success
  double success_first, success_second;
  double slack;              // tolerance implied by the witness residuals
};

/// The l-letter output when the adversary plays `states` against the
/// input word `word`.
DensityMatrix realize(const Avcq& a, const std::vector<int>& states,
                      const std::vector<int>& word);

/// Smallest average decoding success over adversary state sequences.
/// Exhaustive when |S|^l <= 10^6 (required in exhaustive mode);
/// otherwise seeded uniform sampling with the coverage reported.
WorstCaseResult worst_case_eval(const Code& code, const Avcq& a, const EvalMode& mode = {});
WorstCaseResult worst_case_eval(const DiscreteRandomCode& rc, const Avcq& a,
                                const EvalMode& mode = {});

/// Smallest success of the code against the i.i.d. mixtures of the
/// adversary states by all empirical types of length l.
double min_type_success(const Code& code, const Avcq& a);

/// The uniform random code over all factor-permuted variants of the
/// code.  Requires the code to succeed with probability at least
/// 1 - compound_gamma against every type mixture (checked); the result
/// then has worst-case success at least 1 - (l+1)^|S| * compound_gamma,
/// which is asserted when `verify` is set and the check is affordable.
DiscreteRandomCode robustify(const Code& code, const Avcq& a, double compound_gamma,
                             bool verify = true);

/// Replaces a random code by K atoms sampled by weight, retrying until
/// the uniform family over the sample meets the target worst-case
/// success (at most max_retries rounds).
ReductionResult reduce_random_code(const DiscreteRandomCode& rc, const Avcq& a, int k,
                                   double target_success, std::uint64_t seed,
                                   int max_retries = 20);

/// Concatenates a K-message prefix code with one M-message bank code
/// per prefix message: codeword (i, j) is prefix word i followed by
/// bank i's word j, decoded by the tensor product of the two elements.
Code compose_cr_code(const Code& prefix, const std::vector<Code>& banks);

/// Decides whether every pair of inputs admits matching adversary
/// mixtures (see PairWitness), by alternating exact minimization over
/// the two simplices with an exhaustive active-set polish.
SymmetrizabilityCertificate is_m_symmetrizable(const Avcq& a, double tol = 1e-7);

/// Uses the certificate's witnesses to attack the first two messages of
/// the code with product state distributions; the worse of the two
/// messages then succeeds with probability at most 1/2 up to the
/// witness residual slack (asserted).
AttackResult symmetrizable_attack(const Avcq& a, const SymmetrizabilityCertificate& cert,
                                  const Code& code);

}  // namespace cqchan

#endif  // CQCHAN_AVCQ_HPP_
