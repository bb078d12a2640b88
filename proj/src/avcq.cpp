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

#include "cqchan/avcq.hpp"

#include <algorithm>
#include <cmath>
#include <map>
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

// Raw l-letter output for a state sequence and input word; realize()
// wraps this with validation.
Matrix sequence_output(const Avcq& a, const std::vector<int>& states,
                       const std::vector<int>& word) {
  Matrix out = Matrix::Identity(1, 1);
  for (std::size_t i = 0; i < states.size(); ++i) {
    out = tensor(out, a.channel(static_cast<std::size_t>(states[i]))
                          .output(static_cast<std::size_t>(word[i]))
                          .matrix());
  }
  return out;
}

double success_on_sequence(const Code& code, const Avcq& a, const std::vector<int>& states) {
  double sum = 0.0;
  for (std::size_t m = 0; m < code.size(); ++m) {
    sum += re_trace_product(sequence_output(a, states, code.word(m)),
                            code.decoder()[m].matrix());
  }
  return std::clamp(sum / static_cast<double>(code.size()), 0.0, 1.0);
}

bool next_sequence(std::vector<int>& seq, int radix) {
  for (int i = static_cast<int>(seq.size()) - 1; i >= 0; --i) {
    if (++seq[static_cast<std::size_t>(i)] < radix) return true;
    seq[static_cast<std::size_t>(i)] = 0;
  }
  return false;
}

template <typename SuccessFn>
WorstCaseResult scan_sequences(int num_states, int l, const EvalMode& mode, SuccessFn&& fn) {
  long long total = ipow(num_states, l);
  WorstCaseResult out{2.0, {}, true, 0};
  if (mode.exhaustive) {
    if (total > 1'000'000) {
      throw BudgetError("state sequence space has " + std::to_string(total) +
                        " elements; exhaustive scan is limited to 1000000");
    }
    std::vector<int> seq(static_cast<std::size_t>(l), 0);
    do {
      double s = fn(seq);
      ++out.sequences_checked;
      if (s < out.success) {
        out.success = s;
        out.argmin_sequence = seq;
      }
    } while (next_sequence(seq, num_states));
  } else {
    out.exhaustive = false;
    auto rng = stream_rng(mode.seed, 0x5eedULL);
    std::vector<int> seq(static_cast<std::size_t>(l), 0);
    for (long long i = 0; i < mode.sample_count; ++i) {
      for (auto& v : seq) {
        v = static_cast<int>(uniform_double(rng) * num_states);
        v = std::min(v, num_states - 1);
      }
      double s = fn(seq);
      ++out.sequences_checked;
      if (s < out.success) {
        out.success = s;
        out.argmin_sequence = seq;
      }
    }
  }
  return out;
}

}  // namespace

Avcq::Avcq(std::vector<std::string> state_names, std::vector<CqChannel> channels)
    : state_names_(std::move(state_names)), channels_(std::move(channels)) {
  if (channels_.empty()) throw InputError("adversarial family needs at least one state");
  if (state_names_.size() != channels_.size()) {
    throw InputError("got " + std::to_string(state_names_.size()) + " state names for " +
                     std::to_string(channels_.size()) + " channels");
  }
  for (std::size_t s = 1; s < channels_.size(); ++s) {
    if (channels_[s].alphabet() != channels_[0].alphabet() ||
        channels_[s].dim() != channels_[0].dim()) {
      throw InputError("state '" + state_names_[s] +
                       "' has a mismatched alphabet or dimension");
    }
  }
}

DiscreteRandomCode::DiscreteRandomCode(std::vector<Code> atoms, Eigen::VectorXd weights)
    : atoms_(std::move(atoms)), weights_(std::move(weights)) {
  if (atoms_.empty()) throw InputError("random code needs at least one atom");
  if (weights_.size() != static_cast<Eigen::Index>(atoms_.size())) {
    throw InputError("random code needs one weight per atom");
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < -1e-12) throw InputError("random code weights must be nonnegative");
    sum += weights_[i];
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InputError("random code weights sum to " + std::to_string(sum));
  }
  for (std::size_t k = 1; k < atoms_.size(); ++k) {
    if (atoms_[k].blocklength() != atoms_[0].blocklength() ||
        atoms_[k].size() != atoms_[0].size() ||
        atoms_[k].num_symbols() != atoms_[0].num_symbols()) {
      throw InputError("random code atom " + std::to_string(k) + " has a mismatched shape");
    }
  }
}

DensityMatrix realize(const Avcq& a, const std::vector<int>& states,
                      const std::vector<int>& word) {
  if (states.size() != word.size() || states.empty()) {
    throw InputError("state sequence and word must have equal positive length");
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i] < 0 || static_cast<std::size_t>(states[i]) >= a.num_states()) {
      throw InputError("state index out of range at position " + std::to_string(i));
    }
    if (word[i] < 0 || static_cast<std::size_t>(word[i]) >= a.alphabet().size()) {
      throw InputError("input symbol out of range at position " + std::to_string(i));
    }
  }
  return DensityMatrix(HermitianOperator(sequence_output(a, states, word)));
}

WorstCaseResult worst_case_eval(const Code& code, const Avcq& a, const EvalMode& mode) {
  if (code.num_symbols() != static_cast<int>(a.alphabet().size())) {
    throw InputError("code and adversarial family alphabet sizes differ");
  }
  return scan_sequences(static_cast<int>(a.num_states()), code.blocklength(), mode,
                        [&](const std::vector<int>& seq) {
                          return success_on_sequence(code, a, seq);
                        });
}

WorstCaseResult worst_case_eval(const DiscreteRandomCode& rc, const Avcq& a,
                                const EvalMode& mode) {
  if (rc.atom(0).num_symbols() != static_cast<int>(a.alphabet().size())) {
    throw InputError("random code and adversarial family alphabet sizes differ");
  }
  return scan_sequences(static_cast<int>(a.num_states()), rc.blocklength(), mode,
                        [&](const std::vector<int>& seq) {
                          double s = 0.0;
                          for (std::size_t k = 0; k < rc.size(); ++k) {
                            if (rc.weights()[static_cast<Eigen::Index>(k)] <= 0.0) continue;
                            s += rc.weights()[static_cast<Eigen::Index>(k)] *
                                 success_on_sequence(rc.atom(k), a, seq);
                          }
                          return std::clamp(s, 0.0, 1.0);
                        });
}

double min_type_success(const Code& code, const Avcq& a) {
  const int l = code.blocklength();
  CompoundSet gens = a.generators();
  double worst = 2.0;
  for (const auto& type : simplex_grid(static_cast<int>(a.num_states()), l)) {
    CqChannel mixed = mix_channels(type, gens);
    double sum = 0.0;
    for (std::size_t m = 0; m < code.size(); ++m) {
      Matrix out = Matrix::Identity(1, 1);
      for (int letter : code.word(m)) {
        out = tensor(out, mixed.output(static_cast<std::size_t>(letter)).matrix());
      }
      sum += re_trace_product(out, code.decoder()[m].matrix());
    }
    worst = std::min(worst, sum / static_cast<double>(code.size()));
  }
  return std::clamp(worst, 0.0, 1.0);
}

DiscreteRandomCode robustify(const Code& code, const Avcq& a, double compound_gamma,
                             bool verify) {
  const int l = code.blocklength();
  long long factorial = 1;
  for (int i = 2; i <= l; ++i) factorial *= i;
  if (factorial > 1'000'000) {
    throw BudgetError("permutation family of size " + std::to_string(factorial) +
                      " exceeds the 1000000 limit");
  }

  if (verify) {
    CompoundSet gens = a.generators();
    for (const auto& type : simplex_grid(static_cast<int>(a.num_states()), l)) {
      CqChannel mixed = mix_channels(type, gens);
      double sum = 0.0;
      for (std::size_t m = 0; m < code.size(); ++m) {
        Matrix out = Matrix::Identity(1, 1);
        for (int letter : code.word(m)) {
          out = tensor(out, mixed.output(static_cast<std::size_t>(letter)).matrix());
        }
        sum += re_trace_product(out, code.decoder()[m].matrix());
      }
      double succ = sum / static_cast<double>(code.size());
      if (succ < 1.0 - compound_gamma - 1e-12) {
        std::string type_str;
        for (Eigen::Index i = 0; i < type.size(); ++i) {
          type_str += (i ? "," : "") + std::to_string(type[i]);
        }
        throw InputError("code succeeds with probability " + std::to_string(succ) +
                         " < 1 - gamma against the type mixture (" + type_str + ")");
      }
    }
  }

  int d = 0;
  for (int cand = 1; cand <= code.decoder()[0].dim(); ++cand) {
    if (ipow(cand, l) == code.decoder()[0].dim()) {
      d = cand;
      break;
    }
  }
  if (d == 0) throw InputError("decoder dimension is not a perfect l-th power");

  std::vector<Code> atoms;
  std::vector<int> sigma(static_cast<std::size_t>(l));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::vector<std::vector<int>> words(code.size());
    std::vector<HermitianOperator> elements;
    elements.reserve(code.size());
    for (std::size_t m = 0; m < code.size(); ++m) {
      std::vector<int> w(static_cast<std::size_t>(l));
      for (int i = 0; i < l; ++i) {
        w[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] =
            code.word(m)[static_cast<std::size_t>(i)];
      }
      words[m] = std::move(w);
      elements.emplace_back(permute_factors(code.decoder()[m].matrix(), sigma, d));
    }
    atoms.emplace_back(code.num_symbols(), std::move(words), Povm(std::move(elements)));
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  // Permutation-invariant codes collapse: merge atoms that coincide.
  std::vector<Code> unique_atoms;
  std::vector<double> weights;
  for (const auto& atom : atoms) {
    bool merged = false;
    for (std::size_t k = 0; k < unique_atoms.size(); ++k) {
      if (unique_atoms[k].words() != atom.words()) continue;
      double diff = 0.0;
      for (std::size_t m = 0; m < atom.size(); ++m) {
        diff = std::max(diff, (unique_atoms[k].decoder()[m].matrix() -
                               atom.decoder()[m].matrix())
                                  .cwiseAbs()
                                  .maxCoeff());
      }
      if (diff <= 1e-12) {
        weights[k] += 1.0;
        merged = true;
        break;
      }
    }
    if (!merged) {
      unique_atoms.push_back(atom);
      weights.push_back(1.0);
    }
  }
  Eigen::VectorXd w(static_cast<Eigen::Index>(weights.size()));
  for (std::size_t k = 0; k < weights.size(); ++k) {
    w[static_cast<Eigen::Index>(k)] = weights[k] / static_cast<double>(atoms.size());
  }
  DiscreteRandomCode rc(std::move(unique_atoms), std::move(w));

  long long combos = ipow(static_cast<long long>(a.num_states()), l) *
                     static_cast<long long>(rc.size());
  if (verify && combos <= 50'000) {
    double guarantee = 1.0 - std::pow(static_cast<double>(l + 1),
                                      static_cast<double>(a.num_states())) *
                                 compound_gamma;
    WorstCaseResult worst = worst_case_eval(rc, a);
    if (worst.success < guarantee - 1e-9) {
      throw CheckError("permuted random code succeeds with probability " +
                       std::to_string(worst.success) + ", below the guarantee " +
                       std::to_string(guarantee));
    }
  }
  return rc;
}

ReductionResult reduce_random_code(const DiscreteRandomCode& rc, const Avcq& a, int k,
                                   double target_success, std::uint64_t seed,
                                   int max_retries) {
  if (k < 1) throw InputError("reduction needs at least one sampled code");
  if (max_retries < 1) throw InputError("reduction needs at least one round");

  ReductionResult best{{}, {-1.0, {}, true, 0}, target_success, 0, false};
  for (int round = 0; round < max_retries; ++round) {
    auto rng = stream_rng(seed, static_cast<std::uint64_t>(round));
    std::vector<Code> sampled;
    sampled.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      sampled.push_back(rc.atom(static_cast<std::size_t>(sample_index(rc.weights(), rng))));
    }
    DiscreteRandomCode family(
        sampled, Eigen::VectorXd::Constant(k, 1.0 / static_cast<double>(k)));
    WorstCaseResult worst = worst_case_eval(family, a);
    if (worst.success > best.worst.success) {
      best.codes = std::move(sampled);
      best.worst = worst;
      best.retries_used = round + 1;
    }
    if (best.worst.success >= target_success - 1e-12) {
      best.target_met = true;
      break;
    }
  }
  return best;
}

Code compose_cr_code(const Code& prefix, const std::vector<Code>& banks) {
  if (banks.size() != prefix.size()) {
    throw InputError("need exactly one bank code per prefix message, got " +
                     std::to_string(banks.size()) + " for " + std::to_string(prefix.size()));
  }
  for (std::size_t i = 0; i < banks.size(); ++i) {
    if (banks[i].num_symbols() != prefix.num_symbols()) {
      throw InputError("bank " + std::to_string(i) + " uses a different alphabet size");
    }
    if (banks[i].blocklength() != banks[0].blocklength() ||
        banks[i].size() != banks[0].size()) {
      throw InputError("bank " + std::to_string(i) + " has a mismatched shape");
    }
    if (banks[i].decoder()[0].dim() != banks[0].decoder()[0].dim()) {
      throw InputError("bank " + std::to_string(i) + " has a mismatched decoder dimension");
    }
  }
  Eigen::Index dim = prefix.decoder()[0].dim() * banks[0].decoder()[0].dim();
  if (dim > 4096) {
    throw BudgetError("composite decoder dimension " + std::to_string(dim) +
                      " exceeds the 4096 limit");
  }

  std::vector<std::vector<int>> words;
  std::vector<HermitianOperator> elements;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    for (std::size_t j = 0; j < banks[i].size(); ++j) {
      std::vector<int> w = prefix.word(i);
      w.insert(w.end(), banks[i].word(j).begin(), banks[i].word(j).end());
      words.push_back(std::move(w));
      elements.emplace_back(
          tensor(prefix.decoder()[i].matrix(), banks[i].decoder()[j].matrix()));
    }
  }
  return Code(prefix.num_symbols(), std::move(words), Povm(std::move(elements)));
}

namespace {

// Exact minimizer of ||B z - y||^2 over the probability simplex, by
// enumerating supports and solving the equality-constrained problem on
// each; feasible stationary points cover the optimum of this convex
// problem.
Eigen::VectorXd min_over_simplex(const Eigen::MatrixXd& b, const Eigen::VectorXd& y) {
  const int s = static_cast<int>(b.cols());
  Eigen::MatrixXd gram = b.transpose() * b;
  Eigen::VectorXd lin = b.transpose() * y;
  Eigen::VectorXd best;
  double best_obj = std::numeric_limits<double>::infinity();
  for (int mask = 1; mask < (1 << s); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < s; ++i) {
      if (mask & (1 << i)) idx.push_back(i);
    }
    const int n = static_cast<int>(idx.size());
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(n + 1, n + 1);
    Eigen::VectorXd rhs(n + 1);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) kkt(r, c) = 2.0 * gram(idx[r], idx[c]);
      kkt(r, n) = 1.0;
      kkt(n, r) = 1.0;
      rhs[r] = 2.0 * lin[idx[r]];
    }
    rhs[n] = 1.0;
    Eigen::VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);
    if ((kkt * sol - rhs).cwiseAbs().maxCoeff() > 1e-9 * (1.0 + rhs.cwiseAbs().maxCoeff())) {
      continue;  // no stationary point on this support
    }
    Eigen::VectorXd z = Eigen::VectorXd::Zero(s);
    bool feasible = true;
    for (int r = 0; r < n; ++r) {
      if (sol[r] < -1e-12) {
        feasible = false;
        break;
      }
      z[idx[r]] = std::max(0.0, sol[r]);
    }
    if (!feasible) continue;
    double drift = z.sum();
    if (drift <= 0.0) continue;
    z /= drift;
    double obj = (b * z - y).squaredNorm();
    if (obj < best_obj) {
      best_obj = obj;
      best = z;
    }
  }
  return best;
}

// Exact joint minimizer of ||B p - C q||^2 over two simplices, by
// enumerating support pairs of the stacked problem.
void min_joint(const Eigen::MatrixXd& b, const Eigen::MatrixXd& c, Eigen::VectorXd& p,
               Eigen::VectorXd& q, double& obj) {
  const int sp = static_cast<int>(b.cols());
  const int sq = static_cast<int>(c.cols());
  Eigen::MatrixXd d(b.rows(), sp + sq);
  d << b, -c;
  Eigen::MatrixXd gram = d.transpose() * d;
  for (int mp = 1; mp < (1 << sp); ++mp) {
    for (int mq = 1; mq < (1 << sq); ++mq) {
      std::vector<int> idx;
      for (int i = 0; i < sp; ++i) {
        if (mp & (1 << i)) idx.push_back(i);
      }
      std::size_t np = idx.size();
      for (int i = 0; i < sq; ++i) {
        if (mq & (1 << i)) idx.push_back(sp + i);
      }
      const int n = static_cast<int>(idx.size());
      Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(n + 2, n + 2);
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 2);
      for (int r = 0; r < n; ++r) {
        for (int col = 0; col < n; ++col) kkt(r, col) = 2.0 * gram(idx[r], idx[col]);
        int which = static_cast<std::size_t>(r) < np ? n : n + 1;
        kkt(r, which) = 1.0;
        kkt(which, r) = 1.0;
      }
      rhs[n] = 1.0;
      rhs[n + 1] = 1.0;
      Eigen::VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);
      if ((kkt * sol - rhs).cwiseAbs().maxCoeff() > 1e-9 * (1.0 + rhs.cwiseAbs().maxCoeff())) {
        continue;
      }
      Eigen::VectorXd z = Eigen::VectorXd::Zero(sp + sq);
      bool feasible = true;
      for (int r = 0; r < n; ++r) {
        if (sol[r] < -1e-12) {
          feasible = false;
          break;
        }
        z[idx[r]] = std::max(0.0, sol[r]);
      }
      if (!feasible) continue;
      double cand = (d * z).squaredNorm();
      if (cand < obj) {
        obj = cand;
        p = z.head(sp);
        q = z.tail(sq);
        double ps = p.sum(), qs = q.sum();
        if (ps > 0.0) p /= ps;
        if (qs > 0.0) q /= qs;
      }
    }
  }
}

Eigen::MatrixXd stacked_outputs(const Avcq& a, std::size_t x) {
  const int d = a.dim();
  Eigen::MatrixXd b(2 * d * d, static_cast<Eigen::Index>(a.num_states()));
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    const Matrix& m = a.channel(s).output(x).matrix();
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        b(i * d + j, static_cast<Eigen::Index>(s)) = m(i, j).real();
        b(d * d + i * d + j, static_cast<Eigen::Index>(s)) = m(i, j).imag();
      }
    }
  }
  return b;
}

}  // namespace

SymmetrizabilityCertificate is_m_symmetrizable(const Avcq& a, double tol) {
  if (!(tol > 0.0)) throw InputError("feasibility tolerance must be positive");
  if (a.num_states() > 20) {
    throw BudgetError("support enumeration is limited to 20 adversary states");
  }
  SymmetrizabilityCertificate cert{true, tol, {}, 0};
  const std::size_t n = a.alphabet().size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      Eigen::MatrixXd b = stacked_outputs(a, x);
      Eigen::MatrixXd c = stacked_outputs(a, y);
      const Eigen::Index s = b.cols();
      Eigen::VectorXd p = Eigen::VectorXd::Constant(s, 1.0 / static_cast<double>(s));
      Eigen::VectorXd q = p;
      double obj = (b * p - c * q).squaredNorm();
      for (int round = 0; round < 100; ++round) {
        Eigen::VectorXd pn = min_over_simplex(b, c * q);
        if (pn.size()) p = pn;
        Eigen::VectorXd qn = min_over_simplex(c, b * p);
        if (qn.size()) q = qn;
        double next = (b * p - c * q).squaredNorm();
        if (obj - next < 1e-15) {
          obj = std::min(obj, next);
          break;
        }
        obj = next;
      }
      // Alternation can stall on flat faces; the joint enumeration is
      // exact and protects the infeasibility verdict.
      if (std::sqrt(obj) > tol) min_joint(b, c, p, q, obj);

      double distance = std::sqrt(std::max(0.0, obj));
      if (distance > tol && cert.symmetrizable) {
        cert.symmetrizable = false;
        cert.separating_pair = cert.witnesses.size();
      }
      cert.witnesses.push_back(PairWitness{x, y, p, q, distance});
    }
  }
  if (cert.symmetrizable) cert.separating_pair = cert.witnesses.size();
  return cert;
}

AttackResult symmetrizable_attack(const Avcq& a, const SymmetrizabilityCertificate& cert,
                                  const Code& code) {
  if (code.size() < 2) throw InputError("the attack needs a code with at least two messages");
  if (!cert.symmetrizable) {
    throw InputError("the attack needs a certificate of symmetrizability");
  }
  const std::vector<int>& wa = code.word(0);
  const std::vector<int>& wb = code.word(1);
  const int l = code.blocklength();
  const std::size_t s = a.num_states();

  Matrix mu_a = Matrix::Identity(1, 1);
  Matrix mu_b = Matrix::Identity(1, 1);
  double max_residual = 0.0;
  for (int i = 0; i < l; ++i) {
    std::size_t xa = static_cast<std::size_t>(wa[static_cast<std::size_t>(i)]);
    std::size_t xb = static_cast<std::size_t>(wb[static_cast<std::size_t>(i)]);
    Eigen::VectorXd pa, pb;
    if (xa == xb) {
      pa = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(s), 1.0 / static_cast<double>(s));
      pb = pa;
    } else {
      std::size_t lo = std::min(xa, xb), hi = std::max(xa, xb);
      const PairWitness* wit = nullptr;
      for (const auto& w : cert.witnesses) {
        if (w.x == lo && w.y == hi) {
          wit = &w;
          break;
        }
      }
      if (!wit) throw InputError("certificate lacks a witness for a codeword letter pair");
      pa = xa == lo ? wit->p : wit->q;
      pb = xa == lo ? wit->q : wit->p;
      max_residual = std::max(max_residual, wit->distance);
    }
    Matrix mix_a = Matrix::Zero(a.dim(), a.dim());
    Matrix mix_b = Matrix::Zero(a.dim(), a.dim());
    for (std::size_t st = 0; st < s; ++st) {
      mix_a += pa[static_cast<Eigen::Index>(st)] * a.channel(st).output(xa).matrix();
      mix_b += pb[static_cast<Eigen::Index>(st)] * a.channel(st).output(xb).matrix();
    }
    mu_a = tensor(mu_a, mix_a);
    mu_b = tensor(mu_b, mix_b);
  }

  double succ_a = std::clamp(re_trace_product(mu_a, code.decoder()[0].matrix()), 0.0, 1.0);
  double succ_b = std::clamp(re_trace_product(mu_b, code.decoder()[1].matrix()), 0.0, 1.0);
  double bound = std::min(succ_a, succ_b);
  // succ_a + succ_b <= 1 + ||mu_a - mu_b||_1 and the mixtures differ by
  // at most sqrt(dim) * residual in trace norm per position.
  double slack = 0.5 * l * std::sqrt(static_cast<double>(a.dim())) * max_residual;
  if (bound > 0.5 + slack + 1e-9) {
    throw CheckError("attacked success " + std::to_string(bound) +
                     " exceeds 1/2 beyond the witness slack");
  }
  return AttackResult{bound, succ_a, succ_b, slack};
}

}  // namespace cqchan
