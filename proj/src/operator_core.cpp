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

#include "cqchan/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace cqchan {

namespace {

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Eigen::SelfAdjointEigenSolver<Matrix> eig(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw CheckError("eigendecomposition did not converge");
  }
  return solver;
}

// Cluster boundaries of an ascending eigenvalue list: cluster k spans
// [starts[k], starts[k+1]).
std::vector<int> cluster_starts(const Eigen::VectorXd& vals, double cluster_tol) {
  double scale = 1.0 + (vals.size() ? vals.cwiseAbs().maxCoeff() : 0.0);
  double gap = cluster_tol * scale;
  std::vector<int> starts;
  for (int i = 0; i < vals.size(); ++i) {
    if (i == 0 || vals[i] - vals[i - 1] > gap) starts.push_back(i);
  }
  starts.push_back(static_cast<int>(vals.size()));
  return starts;
}

}  // namespace

HermitianOperator::HermitianOperator(Matrix m) {
  if (m.rows() != m.cols()) {
    throw InputError("Hermitian operator must be square, got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!m.allFinite()) {
    throw InputError("Hermitian operator has non-finite entries");
  }
  Matrix sym = 0.5 * (m + m.adjoint());
  double drift = max_abs(m - sym);
  if (drift > kHermitianTol * (1.0 + max_abs(m))) {
    throw InputError("matrix is not Hermitian: symmetrization moved entries by " +
                     std::to_string(drift));
  }
  mat_ = std::move(sym);
}

HermitianOperator HermitianOperator::identity(int dim) {
  return HermitianOperator(Matrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::zero(int dim) {
  return HermitianOperator(Matrix::Zero(dim, dim));
}

DensityMatrix::DensityMatrix(HermitianOperator op) : op_(std::move(op)) {
  double tr = op_.trace();
  if (std::abs(tr - 1.0) > kPsdTol) {
    throw InputError("density matrix trace is " + std::to_string(tr) + ", expected 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(op_.matrix(), Eigen::EigenvaluesOnly);
  double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -kPsdTol) {
    throw InputError("density matrix has eigenvalue " + std::to_string(min_eig));
  }
}

DensityMatrix DensityMatrix::pure(const Vector& v) {
  double n2 = v.squaredNorm();
  if (n2 <= 0.0) throw InputError("pure state vector is zero");
  Matrix m = (v * v.adjoint()) / n2;
  return DensityMatrix(HermitianOperator(std::move(m)));
}

Povm::Povm(std::vector<HermitianOperator> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw InputError("measurement needs at least one element");
  int d = elements_[0].dim();
  Matrix sum = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].dim() != d) {
      throw InputError("measurement element " + std::to_string(i) + " has dimension " +
                       std::to_string(elements_[i].dim()) + ", expected " + std::to_string(d));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(elements_[i].matrix(), Eigen::EigenvaluesOnly);
    double lo = solver.eigenvalues().minCoeff();
    if (lo < -kPsdTol * (1.0 + solver.eigenvalues().cwiseAbs().maxCoeff())) {
      throw InputError("measurement element " + std::to_string(i) +
                       " has eigenvalue " + std::to_string(lo));
    }
    sum += elements_[i].matrix();
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(Matrix::Identity(d, d) - sum,
                                               Eigen::EigenvaluesOnly);
  double lo = solver.eigenvalues().minCoeff();
  if (lo < -kPsdTol * (1.0 + max_abs(sum))) {
    throw InputError("measurement elements sum beyond the identity by " + std::to_string(-lo));
  }
}

HermitianOperator Povm::remainder() const {
  int d = elements_[0].dim();
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& e : elements_) sum += e.matrix();
  return HermitianOperator(Matrix::Identity(d, d) - sum);
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix tensor_power(const Matrix& a, int l) {
  if (l < 0) throw InputError("tensor power needs l >= 0");
  Matrix out = Matrix::Identity(1, 1);
  for (int i = 0; i < l; ++i) out = tensor(out, a);
  return out;
}

SpectralDecomposition spectral_decompose(const HermitianOperator& h, double cluster_tol) {
  auto solver = eig(h);
  const Eigen::VectorXd& vals = solver.eigenvalues();
  const Matrix& vecs = solver.eigenvectors();
  auto starts = cluster_starts(vals, cluster_tol);

  SpectralDecomposition out;
  for (std::size_t k = 0; k + 1 < starts.size(); ++k) {
    int lo = starts[k], hi = starts[k + 1];
    out.eigenvalues.push_back(vals.segment(lo, hi - lo).mean());
    Matrix block = vecs.middleCols(lo, hi - lo);
    out.projectors.emplace_back(Matrix(block * block.adjoint()));
  }
  return out;
}

HermitianOperator pinch(const HermitianOperator& x, const HermitianOperator& reference,
                        double cluster_tol) {
  if (x.dim() != reference.dim()) {
    throw InputError("pinch: operator and reference dimensions differ");
  }
  auto solver = eig(reference);
  const Matrix& vecs = solver.eigenvectors();
  auto starts = cluster_starts(solver.eigenvalues(), cluster_tol);

  // In the reference eigenbasis, pinching zeroes every block that
  // couples two distinct eigenvalue clusters.
  Matrix y = vecs.adjoint() * x.matrix() * vecs;
  Matrix masked = Matrix::Zero(y.rows(), y.cols());
  for (std::size_t k = 0; k + 1 < starts.size(); ++k) {
    int lo = starts[k], n = starts[k + 1] - starts[k];
    masked.block(lo, lo, n, n) = y.block(lo, lo, n, n);
  }
  return HermitianOperator(vecs * masked * vecs.adjoint());
}

HermitianOperator gen_inverse_sqrt(const HermitianOperator& a, double pinv_tol) {
  auto solver = eig(a);
  Eigen::VectorXd vals = solver.eigenvalues();
  double top = vals.cwiseAbs().maxCoeff();
  if (vals.minCoeff() < -kPsdTol * (1.0 + top)) {
    throw InputError("generalized inverse square root needs a PSD input, found eigenvalue " +
                     std::to_string(vals.minCoeff()));
  }
  double cut = pinv_tol * top;
  Eigen::VectorXd inv = vals.unaryExpr([cut](double v) {
    return v > cut ? 1.0 / std::sqrt(v) : 0.0;
  });
  const Matrix& vecs = solver.eigenvectors();
  return HermitianOperator(vecs * inv.asDiagonal() * vecs.adjoint());
}

HermitianOperator support_projector(const HermitianOperator& a, double tol) {
  auto solver = eig(a);
  const Eigen::VectorXd& vals = solver.eigenvalues();
  double cut = tol * (vals.size() ? vals.cwiseAbs().maxCoeff() : 0.0);
  Matrix p = Matrix::Zero(a.dim(), a.dim());
  for (int i = 0; i < vals.size(); ++i) {
    if (std::abs(vals[i]) > cut) {
      p += solver.eigenvectors().col(i) * solver.eigenvectors().col(i).adjoint();
    }
  }
  return HermitianOperator(std::move(p));
}

namespace {

// For each basis index of the input, the basis index after routing
// factor i to slot perm[i].
std::vector<Eigen::Index> permuted_index_map(const std::vector<int>& perm,
                                             const std::vector<int>& dims) {
  int l = static_cast<int>(dims.size());
  if (perm.size() != dims.size()) {
    throw InputError("factor permutation and dimension list sizes differ");
  }
  std::vector<bool> seen(l, false);
  for (int v : perm) {
    if (v < 0 || v >= l || seen[v]) throw InputError("invalid factor permutation");
    seen[v] = true;
  }
  Eigen::Index total = 1;
  for (int d : dims) {
    if (d < 1) throw InputError("factor dimensions must be positive");
    total *= d;
  }
  // Strides of the output layout, where slot perm[i] has dimension dims[i].
  std::vector<int> out_dims(l);
  for (int i = 0; i < l; ++i) out_dims[perm[i]] = dims[i];
  std::vector<Eigen::Index> out_stride(l, 1);
  for (int s = l - 2; s >= 0; --s) out_stride[s] = out_stride[s + 1] * out_dims[s + 1];

  std::vector<Eigen::Index> map(total);
  std::vector<int> digits(l, 0);
  for (Eigen::Index idx = 0; idx < total; ++idx) {
    Eigen::Index r = idx;
    for (int i = l - 1; i >= 0; --i) {
      digits[i] = static_cast<int>(r % dims[i]);
      r /= dims[i];
    }
    Eigen::Index out = 0;
    for (int i = 0; i < l; ++i) out += digits[i] * out_stride[perm[i]];
    map[idx] = out;
  }
  return map;
}

}  // namespace

Matrix permute_factors(const Matrix& x, const std::vector<int>& perm,
                       const std::vector<int>& dims) {
  Eigen::Index total = 1;
  for (int d : dims) total *= d;
  if (x.rows() != total || x.cols() != total) {
    throw InputError("permute_factors: dimensions multiply to " + std::to_string(total) +
                     " but the operator has dimension " + std::to_string(x.rows()));
  }
  auto map = permuted_index_map(perm, dims);
  Matrix out(total, total);
  for (Eigen::Index i = 0; i < total; ++i) {
    for (Eigen::Index j = 0; j < total; ++j) out(map[i], map[j]) = x(i, j);
  }
  return out;
}

Matrix permute_factors(const Matrix& x, const std::vector<int>& perm, int local_dim) {
  return permute_factors(x, perm, std::vector<int>(perm.size(), local_dim));
}

double trace_norm(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

double re_trace_product(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.cols() || a.cols() != b.rows()) {
    throw InputError("trace of product needs compatible dimensions");
  }
  return a.cwiseProduct(b.transpose()).sum().real();
}

}  // namespace cqchan
