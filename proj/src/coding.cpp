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

#include "cqchan/coding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cqchan/rng.hpp"

namespace cqchan {

namespace {

long long ipow(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

long long word_index(const std::vector<int>& word, int num_inputs) {
  long long idx = 0;
  for (int letter : word) idx = idx * num_inputs + letter;
  return idx;
}

// l-fold output of one family member along a word.
Matrix word_output(const CqChannel& w, const std::vector<int>& word) {
  Matrix out = Matrix::Identity(1, 1);
  for (int letter : word) out = tensor(out, w.output(static_cast<std::size_t>(letter)).matrix());
  return out;
}

}  // namespace

Code::Code(int num_symbols, std::vector<std::vector<int>> words, Povm decoder)
    : num_symbols_(num_symbols), words_(std::move(words)), decoder_(std::move(decoder)) {
  if (num_symbols_ < 1) throw InputError("code needs a positive alphabet size");
  if (words_.empty()) throw InputError("code needs at least one codeword");
  for (std::size_t m = 0; m < words_.size(); ++m) {
    if (words_[m].size() != words_[0].size() || words_[m].empty()) {
      throw InputError("codeword " + std::to_string(m) + " has inconsistent length");
    }
    for (int letter : words_[m]) {
      if (letter < 0 || letter >= num_symbols_) {
        throw InputError("codeword " + std::to_string(m) + " uses an out-of-range symbol");
      }
    }
  }
  if (decoder_.size() != words_.size()) {
    throw InputError("decoder has " + std::to_string(decoder_.size()) + " elements for " +
                     std::to_string(words_.size()) + " codewords");
  }
}

std::vector<HermitianOperator> extract_conditional_projectors(const HermitianOperator& q_l,
                                                              int num_inputs, int l,
                                                              int local_dim) {
  if (num_inputs < 1 || l < 1 || local_dim < 1) {
    throw InputError("conditional projectors need positive dimensions");
  }
  long long classical = ipow(num_inputs, l);
  long long quantum = ipow(local_dim, l);
  if (q_l.dim() != classical * quantum) {
    throw InputError("operator dimension " + std::to_string(q_l.dim()) +
                     " does not match n^l * d^l = " + std::to_string(classical * quantum));
  }
  const Matrix& q = q_l.matrix();
  double off = 0.0;
  for (long long u = 0; u < classical; ++u) {
    for (long long v = 0; v < classical; ++v) {
      if (u != v) {
        off = std::max(off,
                       q.block(u * quantum, v * quantum, quantum, quantum).cwiseAbs().maxCoeff());
      }
    }
  }
  if (off > 1e-8) {
    throw InputError("operator carries off-block mass " + std::to_string(off) +
                     " across classical words");
  }
  std::vector<HermitianOperator> out;
  out.reserve(static_cast<std::size_t>(classical));
  for (long long u = 0; u < classical; ++u) {
    out.emplace_back(Matrix(q.block(u * quantum, u * quantum, quantum, quantum)));
  }
  return out;
}

std::vector<std::vector<int>> sample_codewords(const InputDistribution& p, int l, int m,
                                               std::uint64_t seed) {
  if (l < 1 || m < 1) throw InputError("codeword sampling needs l >= 1 and m >= 1");
  std::vector<std::vector<int>> words(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    auto rng = stream_rng(seed, static_cast<std::uint64_t>(i));
    words[i].resize(static_cast<std::size_t>(l));
    for (int j = 0; j < l; ++j) words[i][j] = sample_index(p.probs(), rng);
  }
  return words;
}

Code build_srm_decoder(int num_inputs, const std::vector<std::vector<int>>& words,
                       const std::vector<HermitianOperator>& conditional) {
  if (words.empty()) throw InputError("decoder construction needs codewords");
  if (conditional.empty()) throw InputError("decoder construction needs conditional projectors");
  const int dim = conditional[0].dim();
  Matrix sum = Matrix::Zero(dim, dim);
  std::vector<const HermitianOperator*> per_message;
  per_message.reserve(words.size());
  for (const auto& w : words) {
    long long u = word_index(w, num_inputs);
    if (u < 0 || static_cast<std::size_t>(u) >= conditional.size()) {
      throw InputError("codeword indexes outside the conditional projector table");
    }
    per_message.push_back(&conditional[static_cast<std::size_t>(u)]);
    sum += conditional[static_cast<std::size_t>(u)].matrix();
  }
  HermitianOperator root = gen_inverse_sqrt(HermitianOperator(std::move(sum)));
  std::vector<HermitianOperator> elements;
  elements.reserve(words.size());
  for (const auto* p : per_message) {
    elements.emplace_back(Matrix(root.matrix() * p->matrix() * root.matrix()));
  }
  return Code(num_inputs, words, Povm(std::move(elements)));
}

CodeEvaluation eval_code(const Code& code, const CompoundSet& set) {
  if (code.num_symbols() != static_cast<int>(set.alphabet().size())) {
    throw InputError("code and family alphabet sizes differ");
  }
  long long quantum = ipow(set.dim(), code.blocklength());
  if (code.decoder()[0].dim() != quantum) {
    throw InputError("decoder dimension " + std::to_string(code.decoder()[0].dim()) +
                     " does not match d^l = " + std::to_string(quantum));
  }
  CodeEvaluation out;
  out.errors.resize(set.size());
  out.per_channel_avg.resize(set.size());
  out.per_channel_max.resize(set.size());
  for (std::size_t t = 0; t < set.size(); ++t) {
    double sum = 0.0, worst = 0.0;
    out.errors[t].resize(code.size());
    for (std::size_t m = 0; m < code.size(); ++m) {
      Matrix output = word_output(set.channel(t), code.word(m));
      double success = re_trace_product(output, code.decoder()[m].matrix());
      double err = std::clamp(1.0 - success, 0.0, 1.0);
      out.errors[t][m] = err;
      sum += err;
      worst = std::max(worst, err);
    }
    out.per_channel_avg[t] = sum / static_cast<double>(code.size());
    out.per_channel_max[t] = worst;
  }
  out.worst_avg = *std::max_element(out.per_channel_avg.begin(), out.per_channel_avg.end());
  out.worst_max = *std::max_element(out.per_channel_max.begin(), out.per_channel_max.end());
  return out;
}

double hayashi_nagaoka_slack(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) throw InputError("operator pair dimensions differ");
  Eigen::SelfAdjointEigenSolver<Matrix> a_eig(a.matrix(), Eigen::EigenvaluesOnly);
  if (a_eig.eigenvalues().minCoeff() < -kPsdTol ||
      a_eig.eigenvalues().maxCoeff() > 1.0 + kPsdTol) {
    throw InputError("first operator must satisfy 0 <= a <= 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> b_eig(b.matrix(), Eigen::EigenvaluesOnly);
  if (b_eig.eigenvalues().minCoeff() < -kPsdTol * (1.0 + b_eig.eigenvalues().cwiseAbs().maxCoeff())) {
    throw InputError("second operator must be positive semidefinite");
  }
  const Matrix id = Matrix::Identity(a.dim(), a.dim());
  HermitianOperator root = gen_inverse_sqrt(HermitianOperator(Matrix(a.matrix() + b.matrix())));
  Matrix lhs = id - root.matrix() * a.matrix() * root.matrix();
  Matrix rhs = 2.0 * (id - a.matrix()) + 4.0 * b.matrix();
  Matrix slack = rhs - lhs;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(Matrix(0.5 * (slack + slack.adjoint())),
                                            Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

Code expurgate(const Code& code, const CodeEvaluation& eval, double eps) {
  if (!(eps > 0.0) || eps >= 1.0) throw InputError("expurgation rate must be in (0, 1)");
  if (eval.errors.empty() || eval.errors[0].size() != code.size()) {
    throw InputError("evaluation does not match the code");
  }
  const auto m = static_cast<long>(code.size());
  // The +1e-12 keeps exact-integer targets from rounding down one slot.
  long target = static_cast<long>(std::floor(eps / (1.0 - eps) * static_cast<double>(m) + 1e-12));
  if (target < 1) {
    throw InputError("expurgation target is empty at eps = " + std::to_string(eps));
  }
  target = std::min(target, m);

  std::vector<double> worst(code.size(), 0.0);
  for (const auto& row : eval.errors) {
    for (std::size_t i = 0; i < row.size(); ++i) worst[i] = std::max(worst[i], row[i]);
  }
  std::vector<std::size_t> order(code.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return worst[a] < worst[b]; });

  std::vector<std::vector<int>> words;
  std::vector<HermitianOperator> elements;
  for (long i = 0; i < target; ++i) {
    words.push_back(code.word(order[static_cast<std::size_t>(i)]));
    elements.push_back(code.decoder()[order[static_cast<std::size_t>(i)]]);
  }
  return Code(code.num_symbols(), std::move(words), Povm(std::move(elements)));
}

CompoundCodeRun build_compound_code(const CompoundSet& set, const InputDistribution& p, int l,
                                    double delta, double gamma, double epsilon, int candidates,
                                    std::uint64_t seed) {
  if (candidates < 1) throw InputError("codeword search needs at least one candidate");
  if (!(gamma > 0.0)) throw InputError("rate offset gamma must be positive");

  TestStates states = build_test_states(set, p, l);
  TestResult test = universal_test(states, delta, epsilon);
  auto conditional = extract_conditional_projectors(
      test.projector, states.num_inputs, states.blocklength, states.local_dim);

  double raw = std::pow(2.0, l * (states.a - delta - gamma));
  long num_messages = std::max(1L, static_cast<long>(std::floor(raw)));

  // The direct bound holds for the expected family-averaged error over
  // random codewords; keeping the best of a few draws realizes it.
  std::uint64_t derive = seed ^ 0x636f646562616e6bULL;
  Code best = build_srm_decoder(states.num_inputs,
                                sample_codewords(p, l, static_cast<int>(num_messages),
                                                 splitmix64(derive)),
                                conditional);
  CodeEvaluation best_eval = eval_code(best, set);
  double best_mix = std::accumulate(best_eval.per_channel_avg.begin(),
                                    best_eval.per_channel_avg.end(), 0.0) /
                    static_cast<double>(set.size());
  for (int c = 1; c < candidates; ++c) {
    Code cand = build_srm_decoder(states.num_inputs,
                                  sample_codewords(p, l, static_cast<int>(num_messages),
                                                   splitmix64(derive)),
                                  conditional);
    CodeEvaluation cand_eval = eval_code(cand, set);
    double mix = std::accumulate(cand_eval.per_channel_avg.begin(),
                                 cand_eval.per_channel_avg.end(), 0.0) /
                 static_cast<double>(set.size());
    if (mix < best_mix) {
      best = std::move(cand);
      best_eval = std::move(cand_eval);
      best_mix = mix;
    }
  }

  double bound = static_cast<double>(set.size()) *
                 (2.0 * test.alpha_error + 4.0 * std::pow(2.0, -static_cast<double>(l) * gamma));
  return CompoundCodeRun{l,
                         states.a,
                         delta,
                         gamma,
                         epsilon,
                         num_messages,
                         std::log2(static_cast<double>(num_messages)) / l,
                         test.alpha_error,
                         test.beta,
                         std::move(best),
                         std::move(best_eval),
                         bound};
}

}  // namespace cqchan
