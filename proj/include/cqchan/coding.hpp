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

#ifndef CQCHAN_CODING_HPP_
#define CQCHAN_CODING_HPP_

#include <cstdint>
#include <vector>

#include "cqchan/hypotest.hpp"

namespace cqchan {

/// A block code: M codewords of fixed length over the input alphabet
/// (by index), and one decoding measurement element per message, acting
/// on the l-fold output space.
class Code {
 public:
  Code(int num_symbols, std::vector<std::vector<int>> words, Povm decoder);

  int num_symbols() const { return num_symbols_; }
  int blocklength() const { return static_cast<int>(words_[0].size()); }
  std::size_t size() const { return words_.size(); }
  const std::vector<int>& word(std::size_t m) const { return words_[m]; }
  const std::vector<std::vector<int>>& words() const { return words_; }
  const Povm& decoder() const { return decoder_; }

 private:
  int num_symbols_;
  std::vector<std::vector<int>> words_;
  Povm decoder_;
};

/// Decoding error per family member and message, with the aggregates
/// used by the direct coding bounds.  All errors are clamped to [0, 1].
struct CodeEvaluation {
  std::vector<std::vector<double>> errors;  // [channel][message]
  std::vector<double> per_channel_avg;
  std::vector<double> per_channel_max;
  double worst_avg;
  double worst_max;
};

/// The end-to-end construction of a code from the universal test at
/// one blocklength: test statistics, the floor-rate message count, and
/// the evaluated square-root-measurement code.
struct CompoundCodeRun {
  int blocklength;
  double a;             // worst-case divergence from the universal test states
  double delta, gamma, epsilon;
  long num_messages;    // floor(2^{l (a - delta - gamma)}), at least 1
  double rate;          // log2(num_messages) / l
  double alpha_error;   // test miss probability, the lambda of the error bound
  double beta;
  Code code;
  CodeEvaluation eval;
  double error_bound;   // |family| * (2 alpha_error + 4 * 2^{-l gamma})
};

/// Splits a block-diagonal operator on (C^n)^{(x) l} (x) (C^d)^{(x) l}
/// into its diagonal blocks, one per classical word (mixed-radix index,
/// first letter most significant).  Off-block mass above 1e-8 is an error.
std::vector<HermitianOperator> extract_conditional_projectors(const HermitianOperator& q_l,
                                                              int num_inputs, int l,
                                                              int local_dim);

/// M codewords of length l drawn i.i.d. from p, one deterministic
/// stream per message index.
std::vector<std::vector<int>> sample_codewords(const InputDistribution& p, int l, int m,
                                               std::uint64_t seed);

/// Square-root measurement from per-word conditional projectors:
/// D_m = S^{-1/2} P_m S^{-1/2} with S the sum over messages.
/// `conditional` is indexed by classical word (as produced by
/// extract_conditional_projectors).
Code build_srm_decoder(int num_inputs, const std::vector<std::vector<int>>& words,
                       const std::vector<HermitianOperator>& conditional);

/// Decoding errors of the code against every member of the family.
CodeEvaluation eval_code(const Code& code, const CompoundSet& set);

/// Minimum eigenvalue of 2(1-a) + 4b - (1 - (a+b)^{-1/2} a (a+b)^{-1/2});
/// nonnegative up to rounding for 0 <= a <= 1 and b >= 0.
double hayashi_nagaoka_slack(const HermitianOperator& a, const HermitianOperator& b);

/// Subcode of the floor(eps/(1-eps) * M) messages with the smallest
/// worst-case (over the family) error, keeping their decoder elements.
Code expurgate(const Code& code, const CodeEvaluation& eval, double eps);

/// Full pipeline at blocklength l: build test states, run the universal
/// test at offset delta, cut the floor-rate message count at offset
/// gamma, draw `candidates` seeded codeword sets, keep the one with the
/// smallest family-averaged error, and evaluate it.
CompoundCodeRun build_compound_code(const CompoundSet& set, const InputDistribution& p, int l,
                                    double delta, double gamma, double epsilon, int candidates,
                                    std::uint64_t seed);

}  // namespace cqchan

#endif  // CQCHAN_CODING_HPP_
