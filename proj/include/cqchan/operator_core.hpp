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

#ifndef CQCHAN_OPERATOR_CORE_HPP_
#define CQCHAN_OPERATOR_CORE_HPP_

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "cqchan/errors.hpp"

namespace cqchan {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Default tolerances.  Validity checks scale them by (1 + max entry) so
// they behave sensibly for operators away from unit norm.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kClusterTol = 1e-8;
inline constexpr double kPinvTol = 1e-12;

/// A square matrix kept exactly Hermitian: the constructor replaces the
/// input by (m + m*)/2 and rejects inputs farther than kHermitianTol
/// (relative) from that symmetrization.
class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix m);

  static HermitianOperator identity(int dim);
  static HermitianOperator zero(int dim);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Matrix& matrix() const { return mat_; }
  double trace() const { return mat_.trace().real(); }

 private:
  Matrix mat_;
};

/// A density matrix: Hermitian, positive semidefinite within kPsdTol,
/// unit trace within kPsdTol.
class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianOperator op);
  explicit DensityMatrix(Matrix m) : DensityMatrix(HermitianOperator(std::move(m))) {}

  /// Rank-one state |v><v| / <v|v>.
  static DensityMatrix pure(const Vector& v);

  int dim() const { return op_.dim(); }
  const Matrix& matrix() const { return op_.matrix(); }
  const HermitianOperator& op() const { return op_; }

 private:
  HermitianOperator op_;
};

/// A measurement: elements are PSD and sum to at most the identity,
/// both within kPsdTol.  The remainder operator I - sum implicitly
/// completes it.
class Povm {
 public:
  explicit Povm(std::vector<HermitianOperator> elements);

  std::size_t size() const { return elements_.size(); }
  const HermitianOperator& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<HermitianOperator>& elements() const { return elements_; }

  /// I - sum of elements.
  HermitianOperator remainder() const;

 private:
  std::vector<HermitianOperator> elements_;
};

/// Distinct (clustered) eigenvalues in ascending order, with the
/// orthogonal projector onto each eigenspace.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<HermitianOperator> projectors;
};

/// Kronecker product, first factor most significant.
Matrix tensor(const Matrix& a, const Matrix& b);

/// l-fold Kronecker power (l >= 0; l = 0 gives the 1x1 identity).
Matrix tensor_power(const Matrix& a, int l);

/// Eigendecomposition with eigenvalues closer than
/// cluster_tol * (1 + max |eigenvalue|) merged into one eigenspace.
SpectralDecomposition spectral_decompose(const HermitianOperator& h,
                                         double cluster_tol = kClusterTol);

/// Sum of E x E over the eigenprojectors E of `reference` (clustered
/// with cluster_tol).  Kills matrix elements between distinct
/// eigenspaces of the reference; trace is preserved.
HermitianOperator pinch(const HermitianOperator& x, const HermitianOperator& reference,
                        double cluster_tol = kClusterTol);

/// Generalized inverse square root: inverts sqrt(a) on the spectral part
/// above pinv_tol * max eigenvalue and acts as zero on the rest.
/// Rejects inputs with eigenvalues below -kPsdTol (relative).
HermitianOperator gen_inverse_sqrt(const HermitianOperator& a, double pinv_tol = kPinvTol);

/// Projector onto the span of eigenvectors with eigenvalue above
/// tol * max |eigenvalue|.
HermitianOperator support_projector(const HermitianOperator& a, double tol = kPinvTol);

/// Conjugates x by the unitary that moves tensor factor i to slot
/// perm[i]; dims[i] is the dimension of factor i.  perm must be a
/// permutation of {0, ..., dims.size()-1} and the product of dims must
/// equal the dimension of x.
Matrix permute_factors(const Matrix& x, const std::vector<int>& perm,
                       const std::vector<int>& dims);

/// Same with all factors of equal dimension local_dim.
Matrix permute_factors(const Matrix& x, const std::vector<int>& perm, int local_dim);

/// Sum of |eigenvalues| for Hermitian input (the trace norm).
double trace_norm(const HermitianOperator& h);

/// Re tr(a b) without forming the product.
double re_trace_product(const Matrix& a, const Matrix& b);

}  // namespace cqchan

#endif  // CQCHAN_OPERATOR_CORE_HPP_
