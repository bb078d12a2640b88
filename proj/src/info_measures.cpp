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

#include "cqchan/info_measures.hpp"

#include <cmath>

namespace cqchan {

namespace {

constexpr double kEigClampTol = 1e-9;
constexpr double kSupportTol = 1e-9;

// Eigenvalues of a valid state, with the [-1e-9, 0] band clamped to 0.
Eigen::VectorXd state_eigenvalues(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix(), Eigen::EigenvaluesOnly);
  Eigen::VectorXd vals = solver.eigenvalues();
  for (int i = 0; i < vals.size(); ++i) {
    if (vals[i] < 0.0 && vals[i] >= -kEigClampTol) vals[i] = 0.0;
  }
  return vals;
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

InputDistribution::InputDistribution(std::vector<std::string> alphabet, Eigen::VectorXd probs)
    : alphabet_(std::move(alphabet)), probs_(std::move(probs)) {
  if (alphabet_.empty()) throw InputError("input distribution needs a nonempty alphabet");
  if (static_cast<std::size_t>(probs_.size()) != alphabet_.size()) {
    throw InputError("input distribution has " + std::to_string(probs_.size()) +
                     " probabilities for " + std::to_string(alphabet_.size()) + " symbols");
  }
  double sum = 0.0;
  for (int i = 0; i < probs_.size(); ++i) {
    if (!(probs_[i] >= -1e-12)) {
      throw InputError("probability of symbol '" + alphabet_[i] + "' is negative");
    }
    if (probs_[i] < 0.0) probs_[i] = 0.0;
    sum += probs_[i];
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InputError("probabilities sum to " + std::to_string(sum) + ", expected 1");
  }
}

InputDistribution InputDistribution::uniform(std::vector<std::string> alphabet) {
  Eigen::Index n = static_cast<Eigen::Index>(alphabet.size());
  return InputDistribution(std::move(alphabet),
                           Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n)));
}

CqChannel::CqChannel(std::vector<std::string> alphabet, std::vector<DensityMatrix> outputs)
    : alphabet_(std::move(alphabet)), outputs_(std::move(outputs)) {
  if (alphabet_.empty()) throw InputError("channel needs a nonempty input alphabet");
  if (alphabet_.size() != outputs_.size()) {
    throw InputError("channel has " + std::to_string(outputs_.size()) + " outputs for " +
                     std::to_string(alphabet_.size()) + " symbols");
  }
  for (std::size_t x = 1; x < outputs_.size(); ++x) {
    if (outputs_[x].dim() != outputs_[0].dim()) {
      throw InputError("channel output for symbol '" + alphabet_[x] +
                       "' has a different dimension");
    }
  }
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::VectorXd vals = state_eigenvalues(rho);
  double s = 0.0;
  for (int i = 0; i < vals.size(); ++i) s -= xlog2x(vals[i]);
  return s;
}

RelEntropy relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw InputError("relative entropy needs states of equal dimension");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> rho_eig(rho.matrix());
  Eigen::SelfAdjointEigenSolver<Matrix> sig_eig(sigma.matrix());

  // Support check: all of rho must live inside the support of sigma.
  double rho_top = rho_eig.eigenvalues().cwiseAbs().maxCoeff();
  double sig_top = sig_eig.eigenvalues().cwiseAbs().maxCoeff();
  Matrix sig_ker = Matrix::Zero(sigma.dim(), sigma.dim());
  for (int j = 0; j < sig_eig.eigenvalues().size(); ++j) {
    if (sig_eig.eigenvalues()[j] <= kSupportTol * sig_top) {
      sig_ker += sig_eig.eigenvectors().col(j) * sig_eig.eigenvectors().col(j).adjoint();
    }
  }
  double leak = 0.0;
  for (int i = 0; i < rho_eig.eigenvalues().size(); ++i) {
    if (rho_eig.eigenvalues()[i] > kSupportTol * rho_top) {
      leak += (sig_ker * rho_eig.eigenvectors().col(i)).squaredNorm();
    }
  }
  if (leak > kSupportTol) return RelEntropy::infinite();

  // tr rho log2 rho over the spectrum of rho.
  double value = 0.0;
  for (int i = 0; i < rho_eig.eigenvalues().size(); ++i) {
    double v = rho_eig.eigenvalues()[i];
    if (v < 0.0 && v >= -kEigClampTol) v = 0.0;
    value += xlog2x(v);
  }
  // minus tr rho log2 sigma over the support of sigma.
  for (int j = 0; j < sig_eig.eigenvalues().size(); ++j) {
    double mu = sig_eig.eigenvalues()[j];
    if (mu <= kSupportTol * sig_top) continue;
    const auto v = sig_eig.eigenvectors().col(j);
    double weight = (v.adjoint() * rho.matrix() * v)(0, 0).real();
    value -= weight * std::log2(mu);
  }
  return RelEntropy::finite(value);
}

DensityMatrix average_output(const InputDistribution& p, const CqChannel& w) {
  if (p.alphabet() != w.alphabet()) {
    throw InputError("distribution and channel alphabets differ");
  }
  Matrix avg = Matrix::Zero(w.dim(), w.dim());
  for (std::size_t x = 0; x < w.alphabet_size(); ++x) {
    avg += p.prob(x) * w.output(x).matrix();
  }
  return DensityMatrix(HermitianOperator(std::move(avg)));
}

double holevo(const InputDistribution& p, const CqChannel& w) {
  DensityMatrix avg = average_output(p, w);
  double chi = von_neumann_entropy(avg);
  for (std::size_t x = 0; x < w.alphabet_size(); ++x) {
    if (p.prob(x) > 0.0) chi -= p.prob(x) * von_neumann_entropy(w.output(x));
  }
  return chi;
}

DensityMatrix cq_joint_state(const InputDistribution& p, const CqChannel& w) {
  if (p.alphabet() != w.alphabet()) {
    throw InputError("distribution and channel alphabets differ");
  }
  int n = static_cast<int>(w.alphabet_size());
  int d = w.dim();
  Matrix joint = Matrix::Zero(n * d, n * d);
  for (int x = 0; x < n; ++x) {
    joint.block(x * d, x * d, d, d) = p.prob(x) * w.output(x).matrix();
  }
  return DensityMatrix(HermitianOperator(std::move(joint)));
}

FannesBound fannes_bound(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw InputError("entropy continuity bound needs states of equal dimension");
  }
  double eps = trace_norm(HermitianOperator(Matrix(rho.matrix() - sigma.matrix())));
  FannesBound out{eps, std::nullopt};
  if (eps > 0.0 && eps <= 1.0 / std::exp(1.0)) {
    out.bound = eps * std::log2(rho.dim() / eps);
  } else if (eps == 0.0) {
    out.bound = 0.0;
  }
  return out;
}

}  // namespace cqchan
