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

#include "cqchan/hypotest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cqchan {

namespace {

// Eigenvalues of the shifted operator this close to zero from below are
// treated as numerically nonnegative when the test projector is formed;
// tight enough that the acceptance slack 1e-9 on tr(q tau_l) survives.
constexpr double kBoundaryTol = 1e-12;

long long ipow(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

TestStates build_test_states(const CompoundSet& set, const InputDistribution& p, int l) {
  if (l < 1) throw InputError("blocklength must be at least 1");
  if (p.alphabet() != set.alphabet()) {
    throw InputError("distribution and compound set alphabets differ");
  }
  const int n = static_cast<int>(set.alphabet().size());
  const int d = set.dim();
  long long total = ipow(static_cast<long long>(n) * d, l);
  if (total > 4096) {
    throw BudgetError("test states would have dimension " + std::to_string(total) +
                      ", limit is 4096");
  }

  // Routing that collects the classical registers of the l interleaved
  // (classical x quantum) blocks in front of the quantum ones.
  std::vector<int> dims(2 * l), collect(2 * l);
  for (int i = 0; i < l; ++i) {
    dims[2 * i] = n;
    dims[2 * i + 1] = d;
    collect[2 * i] = i;
    collect[2 * i + 1] = l + i;
  }

  Matrix p_diag = Matrix::Zero(n, n);
  for (int x = 0; x < n; ++x) p_diag(x, x) = p.prob(x);

  const double inv_size = 1.0 / static_cast<double>(set.size());
  Matrix rho_sum = Matrix::Zero(total, total);
  Matrix mean_sum = Matrix::Zero(ipow(d, l), ipow(d, l));
  double a = std::numeric_limits<double>::infinity();

  for (std::size_t t = 0; t < set.size(); ++t) {
    DensityMatrix joint = cq_joint_state(p, set.channel(t));
    DensityMatrix mean = average_output(p, set.channel(t));

    rho_sum += permute_factors(tensor_power(joint.matrix(), l), collect, dims);
    mean_sum += tensor_power(mean.matrix(), l);

    RelEntropy div =
        relative_entropy(joint, DensityMatrix(HermitianOperator(
                                    tensor(p_diag, mean.matrix()))));
    if (!div.is_finite) {
      throw CheckError("joint state escapes the product support for family member " +
                       std::to_string(t));
    }
    a = std::min(a, div.value);
  }

  Matrix tau = tensor(tensor_power(p_diag, l), Matrix(inv_size * mean_sum));
  return TestStates{DensityMatrix(HermitianOperator(Matrix(inv_size * rho_sum))),
                    DensityMatrix(HermitianOperator(std::move(tau))),
                    l,
                    n,
                    d,
                    a};
}

namespace {

// One diagonal block of the classical register decomposition.
struct Block {
  Eigen::Index offset;
  Eigen::Index size;
};

// The test states are block diagonal across the classical basis
// whenever they come from build_test_states; the blockwise pipeline is
// then exact and much cheaper than the dense one.  Returns the block
// list, or a single whole-space block if off-block mass is present.
std::vector<Block> diagonal_blocks(const TestStates& s) {
  long long classical = ipow(s.num_inputs, s.blocklength);
  long long quantum = ipow(s.local_dim, s.blocklength);
  Eigen::Index dim = s.rho_l.dim();
  if (classical * quantum != dim) return {{0, dim}};
  double off = 0.0;
  for (long long u = 0; u < classical; ++u) {
    for (long long v = 0; v < classical; ++v) {
      if (u == v) continue;
      off = std::max(off, s.rho_l.matrix()
                              .block(u * quantum, v * quantum, quantum, quantum)
                              .cwiseAbs()
                              .maxCoeff());
      off = std::max(off, s.tau_l.matrix()
                              .block(u * quantum, v * quantum, quantum, quantum)
                              .cwiseAbs()
                              .maxCoeff());
    }
    if (off > 1e-12) return {{0, dim}};
  }
  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(classical));
  for (long long u = 0; u < classical; ++u) {
    blocks.push_back({static_cast<Eigen::Index>(u * quantum),
                      static_cast<Eigen::Index>(quantum)});
  }
  return blocks;
}

}  // namespace

TestResult universal_test(const TestStates& states, double delta, double epsilon) {
  if (!(epsilon > 0.0) || epsilon >= 1.0) {
    throw InputError("mixing weight epsilon must be in (0, 1)");
  }
  if (!(delta > 0.0)) throw InputError("rate offset delta must be positive");

  const Eigen::Index dim = states.rho_l.dim();
  if (states.tau_l.dim() != dim) throw InputError("test states have different dimensions");

  const double threshold = std::pow(2.0, states.blocklength * (states.a - delta));
  const double beta_bound = 1.0 / threshold;

  // Global support cut for tau_l, shared across blocks.
  Eigen::SelfAdjointEigenSolver<Matrix> tau_probe(states.tau_l.matrix(), Eigen::EigenvaluesOnly);
  const double tau_top = tau_probe.eigenvalues().cwiseAbs().maxCoeff();
  const double support_cut = 1e-12 * tau_top;

  auto blocks = diagonal_blocks(states);
  Matrix q = Matrix::Zero(dim, dim);
  double alpha_acc = 0.0, beta_acc = 0.0, commutator = 0.0;

  for (const auto& blk : blocks) {
    Matrix r = states.rho_l.matrix().block(blk.offset, blk.offset, blk.size, blk.size);
    Matrix t = states.tau_l.matrix().block(blk.offset, blk.offset, blk.size, blk.size);
    Matrix mixed = (1.0 - epsilon) * r + epsilon * t;

    // Pinch the mixed state onto the eigenspaces of tau_l, restricted to
    // the support of tau_l.
    Eigen::SelfAdjointEigenSolver<Matrix> tau_eig(t);
    const Eigen::VectorXd& tvals = tau_eig.eigenvalues();
    const Matrix& tvecs = tau_eig.eigenvectors();
    double scale = 1.0 + tvals.cwiseAbs().maxCoeff();
    Matrix in_basis = tvecs.adjoint() * mixed * tvecs;
    Matrix pinched_basis = Matrix::Zero(blk.size, blk.size);
    Eigen::Index lo = 0;
    while (lo < blk.size) {
      Eigen::Index hi = lo + 1;
      while (hi < blk.size && tvals[hi] - tvals[hi - 1] <= kClusterTol * scale) ++hi;
      if (tvals[lo] > support_cut) {
        pinched_basis.block(lo, lo, hi - lo, hi - lo) = in_basis.block(lo, lo, hi - lo, hi - lo);
      }
      lo = hi;
    }

    Matrix shifted_basis = pinched_basis - threshold * Matrix((tvecs.adjoint() * t * tvecs));
    Eigen::SelfAdjointEigenSolver<Matrix> shift_eig(0.5 * (shifted_basis + shifted_basis.adjoint()));
    double boundary = kBoundaryTol * (1.0 + shift_eig.eigenvalues().cwiseAbs().maxCoeff());

    Matrix q_basis = Matrix::Zero(blk.size, blk.size);
    for (Eigen::Index i = 0; i < blk.size; ++i) {
      if (shift_eig.eigenvalues()[i] >= -boundary) {
        q_basis += shift_eig.eigenvectors().col(i) * shift_eig.eigenvectors().col(i).adjoint();
      }
    }
    Matrix q_blk = tvecs * q_basis * tvecs.adjoint();
    q.block(blk.offset, blk.offset, blk.size, blk.size) = q_blk;

    alpha_acc += re_trace_product(q_blk, r);
    beta_acc += re_trace_product(q_blk, t);
    commutator = std::max(commutator, (q_blk * t - t * q_blk).cwiseAbs().maxCoeff());
  }

  double alpha_error = std::max(0.0, 1.0 - alpha_acc);
  if (commutator > 1e-8) {
    throw CheckError("test projector fails to commute with the product state by " +
                     std::to_string(commutator));
  }
  if (beta_acc > beta_bound + 1e-9) {
    throw CheckError("tr(q tau) = " + std::to_string(beta_acc) + " exceeds the target " +
                     std::to_string(beta_bound));
  }
  return TestResult{HermitianOperator(std::move(q)), alpha_error, beta_acc,
                    beta_bound,          epsilon,    beta_bound >= 1.0};
}

int spectrum_count(const HermitianOperator& y, int l, int local_dim, double cluster_tol) {
  if (l < 1 || local_dim < 1) throw InputError("spectrum count needs l >= 1 and d >= 1");
  long long total = ipow(local_dim, l);
  if (y.dim() != total) {
    throw InputError("operator dimension " + std::to_string(y.dim()) + " is not d^l");
  }

  double scale = 1.0 + y.matrix().cwiseAbs().maxCoeff();
  for (int i = 0; i + 1 < l; ++i) {
    std::vector<int> perm(l);
    for (int j = 0; j < l; ++j) perm[j] = j;
    std::swap(perm[i], perm[i + 1]);
    Matrix swapped = permute_factors(y.matrix(), perm, local_dim);
    if ((swapped - y.matrix()).cwiseAbs().maxCoeff() > 1e-8 * scale) {
      throw InputError("operator is not invariant under factor swap " + std::to_string(i) +
                       " <-> " + std::to_string(i + 1));
    }
  }

  auto decomp = spectral_decompose(y, cluster_tol);
  double bound = std::pow(static_cast<double>(l + 1),
                          static_cast<double>(local_dim) * local_dim);
  if (static_cast<double>(decomp.eigenvalues.size()) > bound) {
    throw CheckError("distinct eigenvalue count " + std::to_string(decomp.eigenvalues.size()) +
                     " exceeds (l+1)^(d^2)");
  }
  return static_cast<int>(decomp.eigenvalues.size());
}

double pinching_inequality_check(const DensityMatrix& x,
                                 const std::vector<HermitianOperator>& projections) {
  if (projections.empty()) throw InputError("pinching needs at least one projection");
  const Eigen::Index dim = x.dim();
  Matrix sum = Matrix::Zero(dim, dim);
  for (std::size_t k = 0; k < projections.size(); ++k) {
    const Matrix& p = projections[k].matrix();
    if (p.rows() != dim) throw InputError("projection dimension mismatch");
    if ((p * p - p).cwiseAbs().maxCoeff() > 1e-8) {
      throw InputError("element " + std::to_string(k) + " is not a projection");
    }
    for (std::size_t j = 0; j < k; ++j) {
      if ((p * projections[j].matrix()).cwiseAbs().maxCoeff() > 1e-8) {
        throw InputError("projections " + std::to_string(j) + " and " + std::to_string(k) +
                         " are not orthogonal");
      }
    }
    sum += p;
  }
  if ((sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() > 1e-8) {
    throw InputError("projections do not resolve the identity");
  }

  Matrix pinched = Matrix::Zero(dim, dim);
  for (const auto& p : projections) pinched += p.matrix() * x.matrix() * p.matrix();
  Matrix slack = static_cast<double>(projections.size()) * pinched - x.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(Matrix(0.5 * (slack + slack.adjoint())),
                                            Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

}  // namespace cqchan
