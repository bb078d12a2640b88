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

#ifndef CQCHAN_ZERO_ERROR_HPP_
#define CQCHAN_ZERO_ERROR_HPP_

#include <cstdint>
#include <vector>

#include "cqchan/errors.hpp"
#include "cqchan/info_measures.hpp"
#include "cqchan/operator_core.hpp"

namespace cqchan {

// Two letters are confusable when their output states overlap, i.e.
// Re tr(W(x) W(y)) > tol. Distinguishable pairs admit a projective test
// that never errs.
bool confusable(const CqChannel& w, std::size_t x, std::size_t y, double tol = 1e-10);

struct ConfusabilityGraph {
  int num_vertices = 0;
  // adjacency[x][y] == true when x and y are confusable (x != y).
  std::vector<std::vector<bool>> adjacency;
};

// Graph on length-l words; two words are adjacent when every coordinate
// pair is confusable. Words are indexed with the first letter most
// significant.
ConfusabilityGraph build_confusability_graph(const CqChannel& w, int l, double tol = 1e-10);

// Throws BudgetError when the length-l word graph for a channel with
// num_letters inputs would exceed the vertex limit. Costs nothing, so
// callers can vet a whole sweep before computing any of it.
void check_word_graph_budget(std::size_t num_letters, int l);

// Largest number of pairwise distinguishable length-l words, i.e. the
// size of a maximum independent set in the confusability graph.
int zero_error_size(const CqChannel& w, int l, double tol = 1e-10);

// A cq channel is extremal when every output state is pure.
bool is_extremal_cq(const CqChannel& w, double tol = 1e-9);

// Completely positive trace-preserving map in Kraus form.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Matrix> operators);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  std::size_t num_operators() const { return operators_.size(); }
  const Matrix& op(std::size_t k) const { return operators_[k]; }
  const std::vector<Matrix>& operators() const { return operators_; }

  DensityMatrix apply(const DensityMatrix& rho) const;

 private:
  std::vector<Matrix> operators_;
  int dim_in_ = 0;
  int dim_out_ = 0;
};

// Choi operator J = sum_{ij} |i><j| (x) N(|i><j|), unnormalized.
HermitianOperator choi_matrix(const KrausChannel& ch);

// Half the trace norm between the normalized Choi states. Zero exactly
// when the channels agree.
double choi_trace_distance(const KrausChannel& a, const KrausChannel& b);

// Rewrites the channel with a minimal Kraus set (eigenvectors of the
// Choi operator).
KrausChannel canonical_kraus(const KrausChannel& ch);

// Dimension of span{ A_{i_1}^* A_{j_1} (x) ... (x) A_{i_l}^* A_{j_l} }
// for the canonical Kraus set; rank computed by SVD.
int kraus_product_span_dim(const KrausChannel& ch, int l);

// Throws BudgetError when the order-l product family would exceed the
// span limits. Costs one canonicalization, so callers can vet a whole
// sweep before computing any of it.
void check_kraus_product_budget(const KrausChannel& ch, int l);

// Extremal iff the canonical Kraus products { A_i^* A_j } are linearly
// independent.
bool is_extremal_kraus(const KrausChannel& ch);

// True when the order-l Kraus products span the full matrix algebra on
// the input space; such channels admit no error-correcting code of
// length l, so every quantum zero-error strategy is blocked.
bool q0_obstruction(const KrausChannel& ch, int l);

}  // namespace cqchan

#endif  // CQCHAN_ZERO_ERROR_HPP_
