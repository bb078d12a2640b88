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

// Command line front end. All numeric output goes to CSV (stdout or
// --out) with values printed as %.12g, so repeated runs with the same
// seed are byte identical; progress notes go to stderr.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cqchan/avcq.hpp"
#include "cqchan/channel_file.hpp"
#include "cqchan/coding.hpp"
#include "cqchan/compound_capacity.hpp"
#include "cqchan/errors.hpp"
#include "cqchan/hypotest.hpp"
#include "cqchan/info_measures.hpp"
#include "cqchan/zero_error.hpp"

namespace {

using namespace cqchan;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt(long long v) { return std::to_string(v); }
std::string fmt(long v) { return std::to_string(v); }
std::string fmt(int v) { return std::to_string(v); }
std::string fmt(std::size_t v) { return std::to_string(v); }
std::string fmt(bool v) { return v ? "1" : "0"; }

class Csv {
 public:
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) body_ += ',';
      body_ += cells[i];
    }
    body_ += '\n';
  }

  void write(const std::string& out_path) const {
    if (out_path.empty()) {
      std::fputs(body_.c_str(), stdout);
      return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot write " + out_path);
    out << body_;
  }

 private:
  std::string body_;
};

struct CapacityArgs {
  std::string file, mode = "compound", out;
  double tol = 1e-4;
  int grid = 16;
  std::uint64_t seed = 1;
};

void run_capacity(const CapacityArgs& a) {
  ChannelFile cf = load_channel_file(a.file);
  CompoundSet set = cf.to_compound();
  Csv csv;
  if (a.mode == "compound") {
    CapacityResult r = compound_capacity(set, a.tol, a.seed);
    std::vector<std::string> header = {"mode",      "value",        "worst_index",
                                       "iterations", "converged",    "achieved_tol"};
    for (const auto& letter : cf.alphabet) header.push_back("p_" + letter);
    csv.row(header);
    std::vector<std::string> row = {a.mode,
                                    fmt(r.value),
                                    fmt(r.worst_index),
                                    fmt(r.iterations),
                                    fmt(r.converged),
                                    fmt(r.achieved_tol)};
    for (Eigen::Index i = 0; i < r.argmax_p.probs().size(); ++i) {
      row.push_back(fmt(r.argmax_p.probs()[i]));
    }
    csv.row(row);
    std::fprintf(stderr, "capacity %.6f bits, worst member %zu, %ld evaluations\n", r.value,
                 r.worst_index, r.iterations);
  } else {
    MinimaxResult m = minimax_check(set, a.grid, a.tol, a.seed);
    csv.row({"mode", "lhs", "rhs", "gap"});
    csv.row({a.mode, fmt(m.lhs), fmt(m.rhs), fmt(m.gap)});
    std::fprintf(stderr, "max-min %.6f, min-max %.6f over a 1/%d weight grid\n", m.lhs, m.rhs,
                 a.grid);
  }
  csv.write(a.out);
}

struct CodeArgs {
  std::string file, out;
  std::vector<int> lengths = {2, 3, 4};
  double delta = 0.0;   // 0 means a/4
  double gamma = 0.0;   // 0 means a/4
  double epsilon = 0.0; // 0 means 2^-l
  int candidates = 8;
  std::uint64_t seed = 1;
};

void run_code(const CodeArgs& a) {
  ChannelFile cf = load_channel_file(a.file);
  CompoundSet set = cf.to_compound();
  InputDistribution p = InputDistribution::uniform(cf.alphabet);
  TestStates single = build_test_states(set, p, 1);
  double delta = a.delta > 0.0 ? a.delta : single.a / 4.0;
  double gamma = a.gamma > 0.0 ? a.gamma : single.a / 4.0;
  std::fprintf(stderr, "single copy divergence %.6f, delta %.6f, gamma %.6f\n", single.a,
               delta, gamma);

  Csv csv;
  csv.row({"l", "a", "delta", "gamma", "epsilon", "messages", "rate", "alpha_error", "beta",
           "worst_avg", "worst_max", "bound"});
  for (int l : a.lengths) {
    double eps = a.epsilon > 0.0 ? a.epsilon : std::pow(2.0, -l);
    CompoundCodeRun run = build_compound_code(set, p, l, delta, gamma, eps, a.candidates,
                                              a.seed);
    csv.row({fmt(run.blocklength), fmt(run.a), fmt(run.delta), fmt(run.gamma),
             fmt(run.epsilon), fmt(run.num_messages), fmt(run.rate), fmt(run.alpha_error),
             fmt(run.beta), fmt(run.eval.worst_avg), fmt(run.eval.worst_max),
             fmt(run.error_bound)});
    std::fprintf(stderr, "l=%d: %ld messages, worst average error %.6f (bound %.6f)\n", l,
                 run.num_messages, run.eval.worst_avg, run.error_bound);
  }
  csv.write(a.out);
}

struct AvcqArgs {
  std::string file, out;
  int l = 3;
  int prefix_l = 0;  // 0 means smallest length addressing all banks
  int k = 0;         // 0 means l * l
  int retries = 20;
  double tol = 1e-7;
  double target = 0.0;  // 0 means 1 - 1/l
  std::uint64_t seed = 1;
};

// The deterministic code fed to the permutation and reduction steps: a
// compound code against every type mixture of the adversary states.
CompoundCodeRun hull_code(const Avcq& av, int l, std::uint64_t seed) {
  std::vector<CqChannel> mixtures;
  for (const auto& type : simplex_grid(static_cast<int>(av.num_states()), l)) {
    mixtures.push_back(mix_channels(type, av.generators()));
  }
  CompoundSet hull(mixtures);
  InputDistribution p = InputDistribution::uniform(av.alphabet());
  TestStates single = build_test_states(hull, p, 1);
  return build_compound_code(hull, p, l, single.a / 4.0, single.a / 4.0, std::pow(2.0, -l),
                             8, seed);
}

DiscreteRandomCode robustified(const Avcq& av, int l, std::uint64_t seed, double* gamma_out) {
  CompoundCodeRun run = hull_code(av, l, seed);
  double gamma = std::min(1.0, run.eval.worst_avg + 1e-9);
  std::fprintf(stderr, "hull code: %ld messages, worst type error %.6f\n", run.num_messages,
               run.eval.worst_avg);
  if (gamma_out) *gamma_out = gamma;
  return robustify(run.code, av, gamma);
}

void run_symmetrize(const AvcqArgs& a) {
  ChannelFile cf = load_channel_file(a.file);
  Avcq av = cf.to_avcq();
  SymmetrizabilityCertificate cert = is_m_symmetrizable(av, a.tol);
  Csv csv;
  csv.row({"x", "y", "distance", "feasible"});
  for (const auto& w : cert.witnesses) {
    csv.row({cf.alphabet[w.x], cf.alphabet[w.y], fmt(w.distance),
             fmt(w.distance <= cert.tol)});
  }
  csv.write(a.out);
  std::fprintf(stderr, "symmetrizable: %s\n", cert.symmetrizable ? "yes" : "no");
}

void run_robustify(const AvcqArgs& a) {
  ChannelFile cf = load_channel_file(a.file);
  Avcq av = cf.to_avcq();
  double gamma = 0.0;
  DiscreteRandomCode rc = robustified(av, a.l, a.seed, &gamma);
  WorstCaseResult worst = worst_case_eval(rc, av);
  double guarantee =
      1.0 - std::pow(static_cast<double>(a.l + 1), static_cast<double>(av.num_states())) *
                gamma;
  Csv csv;
  csv.row({"l", "atoms", "messages", "gamma", "guarantee", "worst_success", "sequences"});
  csv.row({fmt(a.l), fmt(rc.size()), fmt(rc.messages()), fmt(gamma), fmt(guarantee),
           fmt(worst.success), fmt(worst.sequences_checked)});
  csv.write(a.out);
  std::fprintf(stderr, "random code of %zu atoms, worst sequence success %.6f\n", rc.size(),
               worst.success);
}

void run_reduce(const AvcqArgs& a) {
  ChannelFile cf = load_channel_file(a.file);
  Avcq av = cf.to_avcq();
  DiscreteRandomCode rc = robustified(av, a.l, a.seed, nullptr);
  int k = a.k > 0 ? a.k : a.l * a.l;
  double target = a.target > 0.0 ? a.target : 1.0 - 1.0 / static_cast<double>(a.l);
  ReductionResult red = reduce_random_code(rc, av, k, target, a.seed, a.retries);
  Csv csv;
  csv.row({"l", "k", "target", "achieved", "met", "retries"});
  csv.row({fmt(a.l), fmt(k), fmt(red.target), fmt(red.worst.success), fmt(red.target_met),
           fmt(red.retries_used)});
  csv.write(a.out);
  std::fprintf(stderr, "reduced to %d codes, worst sequence success %.6f (target %.6f)\n", k,
               red.worst.success, red.target);
}

// Basis-measurement prefix: every length-lp word is a message and the
// decoder projects onto the matching computational basis product state.
// Needs channel dimension equal to the alphabet size.
Code basis_prefix(const Avcq& av, int lp) {
  const int n = static_cast<int>(av.alphabet().size());
  if (av.dim() != n) {
    throw InputError("basis prefix needs channel dimension " + std::to_string(n) +
                     ", the family has " + std::to_string(av.dim()));
  }
  long long total = 1;
  for (int i = 0; i < lp; ++i) total *= n;
  long long dim = total;  // channel dimension equals n, so (C^n)^{(x) lp}
  std::vector<std::vector<int>> words;
  std::vector<HermitianOperator> elements;
  for (long long idx = 0; idx < total; ++idx) {
    std::vector<int> w(static_cast<std::size_t>(lp));
    long long rest = idx;
    for (int i = lp - 1; i >= 0; --i) {
      w[static_cast<std::size_t>(i)] = static_cast<int>(rest % n);
      rest /= n;
    }
    words.push_back(w);
    Matrix e = Matrix::Zero(dim, dim);
    e(idx, idx) = 1.0;
    elements.emplace_back(e);
  }
  return Code(n, std::move(words), Povm(std::move(elements)));
}

void run_compose(const AvcqArgs& a) {
  ChannelFile cf = load_channel_file(a.file);
  Avcq av = cf.to_avcq();
  DiscreteRandomCode rc = robustified(av, a.l, a.seed, nullptr);
  int k = a.k > 0 ? a.k : a.l * a.l;
  double target = a.target > 0.0 ? a.target : 1.0 - 1.0 / static_cast<double>(a.l);
  ReductionResult red = reduce_random_code(rc, av, k, target, a.seed, a.retries);

  const int n = static_cast<int>(av.alphabet().size());
  int lp = a.prefix_l;
  if (lp <= 0) {
    lp = 1;
    long long cover = n;
    while (cover < k) {
      cover *= n;
      ++lp;
    }
  }
  Code prefix = basis_prefix(av, lp);
  std::vector<Code> banks;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    banks.push_back(red.codes[i % red.codes.size()]);
  }
  Code composite = compose_cr_code(prefix, banks);
  WorstCaseResult worst = worst_case_eval(composite, av);

  Csv csv;
  csv.row({"prefix_l", "bank_l", "banks", "messages", "blocklength", "worst_success"});
  csv.row({fmt(lp), fmt(a.l), fmt(banks.size()), fmt(composite.size()),
           fmt(composite.blocklength()), fmt(worst.success)});
  csv.write(a.out);
  std::fprintf(stderr, "composite code: %zu messages over %d letters, worst success %.6f\n",
               composite.size(), composite.blocklength(), worst.success);
}

struct ZeroErrorArgs {
  std::string file, out;
  int l_max = 3;
  double tol = 1e-10;
};

void run_zero_error(const ZeroErrorArgs& a) {
  ChannelFile cf = load_channel_file(a.file);
  // Vet the whole sweep first; a budget overrun at the top blocklength
  // must not cost the hours the smaller blocklengths can take.
  if (!cf.channels.empty()) {
    check_word_graph_budget(cf.single().alphabet().size(), a.l_max);
  }
  if (cf.kraus) check_kraus_product_budget(*cf.kraus, a.l_max);
  Csv csv;
  csv.row({"l", "size", "rate", "span_dim", "full_dim", "obstructed"});
  for (int l = 1; l <= a.l_max; ++l) {
    std::string size_s, rate_s, span_s, full_s, obst_s;
    if (!cf.channels.empty()) {
      int size = zero_error_size(cf.single(), l, a.tol);
      size_s = fmt(size);
      rate_s = fmt(std::log2(static_cast<double>(size)) / l);
    }
    if (cf.kraus) {
      long long full = 1;
      for (int i = 0; i < l; ++i) full *= cf.kraus->dim_in();
      full *= full;
      int span = kraus_product_span_dim(*cf.kraus, l);
      span_s = fmt(span);
      full_s = fmt(full);
      obst_s = fmt(static_cast<long long>(span) == full);
    }
    csv.row({fmt(l), size_s, rate_s, span_s, full_s, obst_s});
  }
  csv.write(a.out);
  if (!cf.channels.empty()) {
    std::fprintf(stderr, "output states %s pure\n",
                 is_extremal_cq(cf.single()) ? "are all" : "are not all");
  }
  if (cf.kraus) {
    std::fprintf(stderr, "Kraus form %s extremal with %zu canonical operators\n",
                 is_extremal_kraus(*cf.kraus) ? "is" : "is not",
                 canonical_kraus(*cf.kraus).num_operators());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coding tools for compound and adversarial cq channels"};
  app.require_subcommand(1);

  CapacityArgs cap;
  CLI::App* cap_cmd = app.add_subcommand("capacity", "Worst case achievable rate");
  cap_cmd->add_option("--file", cap.file, "channel family JSON")->required();
  cap_cmd->add_option("--mode", cap.mode)->check(CLI::IsMember({"compound", "convex-hull"}));
  cap_cmd->add_option("--tol", cap.tol);
  cap_cmd->add_option("--grid", cap.grid, "weight grid denominator for convex-hull");
  cap_cmd->add_option("--seed", cap.seed);
  cap_cmd->add_option("--out", cap.out, "CSV path, stdout when omitted");

  CodeArgs code;
  CLI::App* code_cmd = app.add_subcommand("code", "Universal test based code construction");
  code_cmd->add_option("--file", code.file)->required();
  code_cmd->add_option("--l", code.lengths, "blocklengths to run");
  code_cmd->add_option("--delta", code.delta, "test rate offset, default a/4");
  code_cmd->add_option("--gamma", code.gamma, "rate back-off, default a/4");
  code_cmd->add_option("--epsilon", code.epsilon, "test mixing weight, default 2^-l");
  code_cmd->add_option("--candidates", code.candidates);
  code_cmd->add_option("--seed", code.seed);
  code_cmd->add_option("--out", code.out);

  AvcqArgs av;
  CLI::App* av_cmd = app.add_subcommand("avcq", "Adversarial channel tools");
  av_cmd->require_subcommand(1);
  CLI::App* sym_cmd = av_cmd->add_subcommand("symmetrize", "Decide symmetrizability");
  CLI::App* rob_cmd = av_cmd->add_subcommand("robustify", "Permutation-average a hull code");
  CLI::App* red_cmd = av_cmd->add_subcommand("reduce", "Sample a small code family");
  CLI::App* com_cmd = av_cmd->add_subcommand("compose", "Prefix-addressed composite code");
  for (CLI::App* sub : {sym_cmd, rob_cmd, red_cmd, com_cmd}) {
    sub->add_option("--file", av.file)->required();
    sub->add_option("--out", av.out);
    sub->add_option("--seed", av.seed);
  }
  sym_cmd->add_option("--tol", av.tol, "pair feasibility tolerance");
  for (CLI::App* sub : {rob_cmd, red_cmd, com_cmd}) {
    sub->add_option("--l", av.l, "bank blocklength");
  }
  for (CLI::App* sub : {red_cmd, com_cmd}) {
    sub->add_option("--k", av.k, "family size, default l^2");
    sub->add_option("--target", av.target, "success target, default 1 - 1/l");
    sub->add_option("--retries", av.retries);
  }
  com_cmd->add_option("--prefix-l", av.prefix_l, "prefix blocklength");

  ZeroErrorArgs ze;
  CLI::App* ze_cmd = app.add_subcommand("zero-error", "Confusability and obstructions");
  ze_cmd->add_option("--file", ze.file)->required();
  ze_cmd->add_option("--l-max", ze.l_max);
  ze_cmd->add_option("--tol", ze.tol);
  ze_cmd->add_option("--out", ze.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*cap_cmd) run_capacity(cap);
    if (*code_cmd) run_code(code);
    if (*sym_cmd) run_symmetrize(av);
    if (*rob_cmd) run_robustify(av);
    if (*red_cmd) run_reduce(av);
    if (*com_cmd) run_compose(av);
    if (*ze_cmd) run_zero_error(ze);
  } catch (const BudgetError& e) {
    std::fprintf(stderr, "budget: %s\n", e.what());
    return 3;
  } catch (const InputError& e) {
    std::fprintf(stderr, "input: %s\n", e.what());
    return 2;
  } catch (const CheckError& e) {
    std::fprintf(stderr, "check: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
