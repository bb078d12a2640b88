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

#include "cqchan/zero_error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

namespace cqchan {

namespace {

long long ipow(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

std::vector<int> word_of_index(long long idx, int num_letters, int l) {
  std::vector<int> w(static_cast<std::size_t>(l));
  for (int i = l - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<int>(idx % num_letters);
    idx /= num_letters;
  }
  return w;
}

// Branch and bound maximum independent set; candidates are kept sorted
// so pruning on chosen + remaining is tight early.
void mis_recurse(const std::vector<std::vector<bool>>& adj, std::vector<int>& candidates,
                 int chosen, int& best) {
  if (chosen + static_cast<int>(candidates.size()) <= best) return;
  if (candidates.empty()) {
    best = std::max(best, chosen);
    return;
  }
  int v = candidates.front();
  std::vector<int> rest(candidates.begin() + 1, candidates.end());

  // Include v: drop its neighbours.
  std::vector<int> keep;
  keep.reserve(rest.size());
  for (int u : rest) {
    if (!adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) keep.push_back(u);
  }
  mis_recurse(adj, keep, chosen + 1, best);

  // Exclude v.
  mis_recurse(adj, rest, chosen, best);
}

}  // namespace

bool confusable(const CqChannel& w, std::size_t x, std::size_t y, double tol) {
  if (x >= w.alphabet().size() || y >= w.alphabet().size()) {
    throw InputError("letter index out of range");
  }
  return re_trace_product(w.output(x).matrix(), w.output(y).matrix()) > tol;
}

void check_word_graph_budget(std::size_t num_letters, int l) {
  if (l < 1) throw InputError("blocklength must be positive");
  long long total = ipow(static_cast<long long>(num_letters), l);
  if (total > 100'000) {
    throw BudgetError("word graph on " + std::to_string(total) +
                      " vertices exceeds the 100000 limit");
  }
}

ConfusabilityGraph build_confusability_graph(const CqChannel& w, int l, double tol) {
  const int n = static_cast<int>(w.alphabet().size());
  check_word_graph_budget(w.alphabet().size(), l);
  long long total = ipow(n, l);

  std::vector<std::vector<bool>> letter(static_cast<std::size_t>(n),
                                        std::vector<bool>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      letter[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          confusable(w, static_cast<std::size_t>(x), static_cast<std::size_t>(y), tol);
    }
  }

  ConfusabilityGraph g;
  g.num_vertices = static_cast<int>(total);
  g.adjacency.assign(static_cast<std::size_t>(total),
                     std::vector<bool>(static_cast<std::size_t>(total), false));
  for (long long i = 0; i < total; ++i) {
    std::vector<int> wi = word_of_index(i, n, l);
    for (long long j = i + 1; j < total; ++j) {
      std::vector<int> wj = word_of_index(j, n, l);
      bool adjacent = true;
      for (int k = 0; k < l; ++k) {
        if (!letter[static_cast<std::size_t>(wi[static_cast<std::size_t>(k)])]
                   [static_cast<std::size_t>(wj[static_cast<std::size_t>(k)])]) {
          adjacent = false;
          break;
        }
      }
      g.adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = adjacent;
      g.adjacency[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = adjacent;
    }
  }
  return g;
}

int zero_error_size(const CqChannel& w, int l, double tol) {
  ConfusabilityGraph g = build_confusability_graph(w, l, tol);

  // Greedy seed: repeatedly take the vertex of least degree.
  std::vector<bool> alive(static_cast<std::size_t>(g.num_vertices), true);
  int greedy = 0;
  for (;;) {
    int pick = -1;
    int pick_deg = g.num_vertices + 1;
    for (int v = 0; v < g.num_vertices; ++v) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      int deg = 0;
      for (int u = 0; u < g.num_vertices; ++u) {
        if (alive[static_cast<std::size_t>(u)] &&
            g.adjacency[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) {
          ++deg;
        }
      }
      if (deg < pick_deg) {
        pick_deg = deg;
        pick = v;
      }
    }
    if (pick < 0) break;
    ++greedy;
    alive[static_cast<std::size_t>(pick)] = false;
    for (int u = 0; u < g.num_vertices; ++u) {
      if (g.adjacency[static_cast<std::size_t>(pick)][static_cast<std::size_t>(u)]) {
        alive[static_cast<std::size_t>(u)] = false;
      }
    }
  }

  int best = greedy;
  std::vector<int> candidates(static_cast<std::size_t>(g.num_vertices));
  for (int v = 0; v < g.num_vertices; ++v) candidates[static_cast<std::size_t>(v)] = v;
  mis_recurse(g.adjacency, candidates, 0, best);
  return best;
}

bool is_extremal_cq(const CqChannel& w, double tol) {
  for (std::size_t x = 0; x < w.alphabet().size(); ++x) {
    // Pure iff tr(rho^2) == 1.
    if (re_trace_product(w.output(x).matrix(), w.output(x).matrix()) < 1.0 - tol) {
      return false;
    }
  }
  return true;
}

KrausChannel::KrausChannel(std::vector<Matrix> operators) {
  if (operators.empty()) throw InputError("Kraus channel needs at least one operator");
  dim_out_ = static_cast<int>(operators[0].rows());
  dim_in_ = static_cast<int>(operators[0].cols());
  if (dim_in_ < 1 || dim_out_ < 1) throw InputError("Kraus operators must be nonempty");

  Matrix sum = Matrix::Zero(dim_in_, dim_in_);
  for (std::size_t k = 0; k < operators.size(); ++k) {
    if (operators[k].rows() != dim_out_ || operators[k].cols() != dim_in_) {
      throw InputError("Kraus operator " + std::to_string(k) + " has a mismatched shape");
    }
    sum += operators[k].adjoint() * operators[k];
    if (operators[k].cwiseAbs().maxCoeff() > 1e-12) {
      operators_.push_back(operators[k]);
    }
  }
  double drift = (sum - Matrix::Identity(dim_in_, dim_in_)).cwiseAbs().maxCoeff();
  if (drift > 1e-9) {
    throw InputError("Kraus operators are not trace preserving, completeness drift " +
                     std::to_string(drift));
  }
  if (operators_.empty()) throw InputError("all Kraus operators are numerically zero");
}

DensityMatrix KrausChannel::apply(const DensityMatrix& rho) const {
  if (rho.dim() != dim_in_) throw InputError("input state dimension mismatch");
  Matrix out = Matrix::Zero(dim_out_, dim_out_);
  for (const auto& a : operators_) out += a * rho.matrix() * a.adjoint();
  return DensityMatrix(HermitianOperator(out));
}

HermitianOperator choi_matrix(const KrausChannel& ch) {
  const int din = ch.dim_in();
  const int dout = ch.dim_out();
  Matrix j = Matrix::Zero(din * dout, din * dout);
  for (const auto& a : ch.operators()) {
    // vec(A) in the |i>|A e_i> ordering, input index most significant.
    Vector v(din * dout);
    for (int i = 0; i < din; ++i) {
      for (int o = 0; o < dout; ++o) v[i * dout + o] = a(o, i);
    }
    j += v * v.adjoint();
  }
  return HermitianOperator(j);
}

double choi_trace_distance(const KrausChannel& a, const KrausChannel& b) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) {
    throw InputError("channels act on different spaces");
  }
  Matrix diff = (choi_matrix(a).matrix() - choi_matrix(b).matrix()) /
                static_cast<double>(a.dim_in());
  return 0.5 * trace_norm(HermitianOperator(diff));
}

KrausChannel canonical_kraus(const KrausChannel& ch) {
  const int din = ch.dim_in();
  const int dout = ch.dim_out();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(choi_matrix(ch).matrix());
  double top = eig.eigenvalues().cwiseAbs().maxCoeff();
  std::vector<Matrix> ops;
  for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k) {
    double lam = eig.eigenvalues()[k];
    if (lam <= 1e-9 * (1.0 + top)) continue;
    Matrix a(dout, din);
    for (int i = 0; i < din; ++i) {
      for (int o = 0; o < dout; ++o) a(o, i) = std::sqrt(lam) * eig.eigenvectors()(i * dout + o, k);
    }
    ops.push_back(a);
  }
  return KrausChannel(std::move(ops));
}

void check_kraus_product_budget(const KrausChannel& ch, int l) {
  if (l < 1) throw InputError("order must be positive");
  const auto k = static_cast<long long>(canonical_kraus(ch).num_operators());
  long long pairs = ipow(k * k, l);
  if (pairs > 10'000) {
    throw BudgetError("Kraus product family of size " + std::to_string(pairs) +
                      " exceeds the 10000 limit");
  }
  long long cols = ipow(ch.dim_in(), l);
  cols *= cols;
  if (cols > 4096) {
    throw BudgetError("order-" + std::to_string(l) + " products live in dimension " +
                      std::to_string(cols) + ", above the 4096 limit");
  }
}

int kraus_product_span_dim(const KrausChannel& ch, int l) {
  check_kraus_product_budget(ch, l);
  KrausChannel canon = canonical_kraus(ch);
  const int k = static_cast<int>(canon.num_operators());
  long long pairs = ipow(static_cast<long long>(k) * k, l);
  long long cols = ipow(ch.dim_in(), l);
  cols *= cols;

  std::vector<Matrix> letter;
  letter.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      letter.push_back(canon.op(static_cast<std::size_t>(i)).adjoint() *
                       canon.op(static_cast<std::size_t>(j)));
    }
  }

  Eigen::MatrixXcd stacked(pairs, cols);
  std::vector<int> sel(static_cast<std::size_t>(l), 0);
  for (long long row = 0; row < pairs; ++row) {
    Matrix prod = Matrix::Identity(1, 1);
    for (int pos = 0; pos < l; ++pos) {
      prod = tensor(prod, letter[static_cast<std::size_t>(sel[static_cast<std::size_t>(pos)])]);
    }
    for (long long c = 0; c < cols; ++c) {
      stacked(row, c) = prod(c / prod.cols(), c % prod.cols());
    }
    for (int pos = l - 1; pos >= 0; --pos) {
      if (++sel[static_cast<std::size_t>(pos)] < k * k) break;
      sel[static_cast<std::size_t>(pos)] = 0;
    }
  }

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(stacked);
  double top = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()[i] > 1e-9 * (1.0 + top)) ++rank;
  }
  return rank;
}

bool is_extremal_kraus(const KrausChannel& ch) {
  KrausChannel canon = canonical_kraus(ch);
  const int k = static_cast<int>(canon.num_operators());
  return kraus_product_span_dim(ch, 1) == k * k;
}

bool q0_obstruction(const KrausChannel& ch, int l) {
  long long full = ipow(ch.dim_in(), l);
  return kraus_product_span_dim(ch, l) == full * full;
}

}  // namespace cqchan
