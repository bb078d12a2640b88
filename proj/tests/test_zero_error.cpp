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

#include <cmath>
#include <vector>

#include "cqchan/channel_file.hpp"
#include "cqchan/errors.hpp"
#include "cqchan/zero_error.hpp"
#include "doctest.h"
#include "test_util.hpp"

using cqchan::CqChannel;
using cqchan::DensityMatrix;
using cqchan::KrausChannel;
using cqchan::Matrix;
using cqtest::maxabs;

namespace {

KrausChannel dephasing() {
  return KrausChannel({cqtest::unit(0, 0, 2), cqtest::unit(1, 1, 2)});
}

KrausChannel amplitude_family(double x) {
  Matrix a1 = Matrix::Zero(2, 2);
  a1(0, 1) = std::sqrt(1.0 - x * x);
  Matrix a2 = Matrix::Zero(2, 2);
  a2(0, 0) = 1.0;
  a2(1, 1) = x;
  return KrausChannel({a1, a2});
}

CqChannel pentagon() {
  return cqchan::load_channel_file(cqtest::fixture("pentagon.json")).single();
}

}  // namespace

TEST_CASE("confusability of pure output pairs") {
  CqChannel ortho = cqtest::make_channel({cqtest::unit(0, 0, 2), cqtest::unit(1, 1, 2)});
  CHECK_FALSE(cqchan::confusable(ortho, 0, 1));
  CqChannel overlapping = cqtest::make_channel({cqtest::unit(0, 0, 2), cqtest::plus_state()});
  CHECK(cqchan::confusable(overlapping, 0, 1));
  CHECK(cqchan::confusable(overlapping, 0, 0));
}

TEST_CASE("confusability graph on words") {
  CqChannel ortho = cqtest::make_channel({cqtest::unit(0, 0, 2), cqtest::unit(1, 1, 2)});
  auto g = cqchan::build_confusability_graph(ortho, 2);
  REQUIRE(g.num_vertices == 4);
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) CHECK_FALSE(g.adjacency[u][v]);
  }
  auto ring = cqchan::build_confusability_graph(pentagon(), 1);
  REQUIRE(ring.num_vertices == 5);
  CHECK(ring.adjacency[0][1]);
  CHECK(ring.adjacency[0][4]);
  CHECK_FALSE(ring.adjacency[0][2]);
  CHECK_FALSE(ring.adjacency[0][0]);
}

TEST_CASE("zero-error sizes of the noiseless channel") {
  CqChannel ortho = cqtest::make_channel({cqtest::unit(0, 0, 2), cqtest::unit(1, 1, 2)});
  CHECK(cqchan::zero_error_size(ortho, 1) == 2);
  CHECK(cqchan::zero_error_size(ortho, 2) == 4);
  CHECK(cqchan::zero_error_size(ortho, 3) == 8);
}

TEST_CASE("zero-error size collapses for overlapping outputs") {
  auto file = cqchan::load_channel_file(cqtest::fixture("counterexample-cq.json"));
  const CqChannel& w = file.single();
  for (int l = 1; l <= 4; ++l) CHECK(cqchan::zero_error_size(w, l) == 1);
}

TEST_CASE("pentagon zero-error sizes, frozen") {
  CqChannel w = pentagon();
  CHECK(cqchan::zero_error_size(w, 1) == 2);
  CHECK(cqchan::zero_error_size(w, 2) == 5);
  CHECK_THROWS_AS(cqchan::zero_error_size(w, 8), cqchan::BudgetError);
}

TEST_CASE("budget precheck matches the builders") {
  KrausChannel x05 = amplitude_family(0.5);
  CHECK_NOTHROW(cqchan::check_word_graph_budget(5, 7));
  CHECK_THROWS_AS(cqchan::check_word_graph_budget(5, 8), cqchan::BudgetError);
  CHECK_NOTHROW(cqchan::check_kraus_product_budget(x05, 3));
  CHECK_THROWS_AS(cqchan::check_kraus_product_budget(x05, 7), cqchan::BudgetError);
  CHECK_THROWS_AS(cqchan::check_word_graph_budget(5, 0), cqchan::InputError);
}

TEST_CASE("output purity test") {
  auto file = cqchan::load_channel_file(cqtest::fixture("counterexample-cq.json"));
  CHECK(cqchan::is_extremal_cq(file.single()));
  CqChannel mixed = cqtest::make_channel({cqtest::diag2(0.97, 0.03), cqtest::diag2(0.05, 0.95)});
  CHECK_FALSE(cqchan::is_extremal_cq(mixed));
  CHECK_FALSE(cqchan::is_extremal_cq(pentagon()));
}

TEST_CASE("Kraus channel validation and application") {
  CHECK_THROWS_AS(KrausChannel({cqtest::unit(0, 0, 2)}), cqchan::InputError);
  KrausChannel x05 = amplitude_family(0.5);
  DensityMatrix out = x05.apply(DensityMatrix(cqtest::unit(1, 1, 2)));
  CHECK(maxabs(out.matrix() - cqtest::diag2(0.75, 0.25)) < 1e-12);
  // Zero operators are dropped.
  KrausChannel padded({cqtest::unit(0, 0, 2), cqtest::unit(1, 1, 2),
                       Matrix::Zero(2, 2)});
  CHECK(padded.num_operators() == 2);
}

TEST_CASE("channel matrix of the dephasing channel, frozen") {
  auto j = cqchan::choi_matrix(dephasing());
  Matrix expect = Matrix::Zero(4, 4);
  expect(0, 0) = 1.0;
  expect(3, 3) = 1.0;
  CHECK(maxabs(j.matrix() - expect) < 1e-12);
  CHECK(j.trace() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("channel distance between the amplitude family members, frozen") {
  KrausChannel x05 = amplitude_family(0.5);
  KrausChannel x09 = amplitude_family(0.9);
  CHECK(cqchan::choi_trace_distance(x05, x05) == doctest::Approx(0.0));
  CHECK(cqchan::choi_trace_distance(x05, x09) ==
        doctest::Approx(0.38413111231467406).epsilon(1e-12));
}

TEST_CASE("canonical Kraus form preserves the channel") {
  KrausChannel padded({cqtest::unit(0, 0, 2), cqtest::unit(1, 1, 2),
                       Matrix::Zero(2, 2)});
  KrausChannel canon = cqchan::canonical_kraus(padded);
  CHECK(canon.num_operators() == 2);
  CHECK(cqchan::choi_trace_distance(padded, canon) <= 1e-10);
  KrausChannel x09 = amplitude_family(0.9);
  KrausChannel canon9 = cqchan::canonical_kraus(x09);
  CHECK(canon9.num_operators() == 2);
  CHECK(cqchan::choi_trace_distance(x09, canon9) <= 1e-10);
}

TEST_CASE("product span dimensions, frozen") {
  CHECK(cqchan::kraus_product_span_dim(dephasing(), 1) == 2);
  KrausChannel x05 = amplitude_family(0.5);
  KrausChannel x09 = amplitude_family(0.9);
  CHECK(cqchan::kraus_product_span_dim(x05, 1) == 4);
  CHECK(cqchan::kraus_product_span_dim(x05, 2) == 16);
  CHECK(cqchan::kraus_product_span_dim(x09, 1) == 4);
  CHECK(cqchan::kraus_product_span_dim(x09, 2) == 16);
  CHECK_THROWS_AS(cqchan::kraus_product_span_dim(x05, 7), cqchan::BudgetError);
}

TEST_CASE("extremality and the obstruction flags") {
  CHECK_FALSE(cqchan::is_extremal_kraus(dephasing()));
  CHECK_FALSE(cqchan::q0_obstruction(dephasing(), 1));
  KrausChannel x05 = amplitude_family(0.5);
  CHECK(cqchan::is_extremal_kraus(x05));
  CHECK(cqchan::q0_obstruction(x05, 1));
  CHECK(cqchan::q0_obstruction(x05, 2));
  KrausChannel x09 = amplitude_family(0.9);
  CHECK(cqchan::is_extremal_kraus(x09));
  CHECK(cqchan::q0_obstruction(x09, 1));
  CHECK(cqchan::q0_obstruction(x09, 2));
}
