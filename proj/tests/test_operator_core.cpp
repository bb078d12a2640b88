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

#include "cqchan/errors.hpp"
#include "cqchan/operator_core.hpp"
#include "cqchan/rng.hpp"
#include "doctest.h"
#include "test_util.hpp"

using cqchan::DensityMatrix;
using cqchan::HermitianOperator;
using cqchan::Matrix;
using cqchan::Povm;
using cqchan::Vector;
using cqtest::maxabs;

TEST_CASE("tensor matches the composite index formula") {
  auto rng = cqchan::stream_rng(11, 0);
  Matrix a = cqtest::random_complex_matrix(rng, 2, 3);
  Matrix b = cqtest::random_complex_matrix(rng, 3, 2);
  Matrix t = cqchan::tensor(a, b);
  REQUIRE(t.rows() == 6);
  REQUIRE(t.cols() == 6);
  for (int i1 = 0; i1 < 2; ++i1)
    for (int j1 = 0; j1 < 3; ++j1)
      for (int i2 = 0; i2 < 3; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          CHECK(std::abs(t(i1 * 3 + i2, j1 * 2 + j2) - a(i1, j1) * b(i2, j2)) <
                1e-14);
        }
}

TEST_CASE("tensor_power dimensions and trace multiplicativity") {
  auto rng = cqchan::stream_rng(12, 0);
  Matrix a = cqtest::random_hermitian(rng, 2);
  Matrix a3 = cqchan::tensor_power(a, 3);
  REQUIRE(a3.rows() == 8);
  std::complex<double> t = a.trace();
  CHECK(std::abs(a3.trace() - t * t * t) < 1e-12);
  Matrix a1 = cqchan::tensor_power(a, 1);
  CHECK(maxabs(a1 - a) == 0.0);
}

TEST_CASE("spectral_decompose reconstructs and clusters degeneracies") {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 2) = 2.0;
  auto sd = cqchan::spectral_decompose(HermitianOperator(m));
  REQUIRE(sd.eigenvalues.size() == 2);
  CHECK(sd.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(sd.eigenvalues[1] == doctest::Approx(2.0));
  CHECK(sd.projectors[0].trace() == doctest::Approx(2.0));

  auto rng = cqchan::stream_rng(13, 0);
  Matrix h = cqtest::random_hermitian(rng, 4);
  auto full = cqchan::spectral_decompose(HermitianOperator(h));
  Matrix rebuilt = Matrix::Zero(4, 4);
  Matrix psum = Matrix::Zero(4, 4);
  for (std::size_t k = 0; k < full.eigenvalues.size(); ++k) {
    const Matrix& p = full.projectors[k].matrix();
    rebuilt += full.eigenvalues[k] * p;
    psum += p;
    CHECK(maxabs(p * p - p) < 1e-10);
    for (std::size_t j = 0; j < k; ++j) {
      CHECK(maxabs(p * full.projectors[j].matrix()) < 1e-10);
    }
  }
  CHECK(maxabs(rebuilt - h) < 1e-10);
  CHECK(maxabs(psum - Matrix::Identity(4, 4)) < 1e-10);
}

TEST_CASE("pinch keeps the trace and is idempotent") {
  auto rng = cqchan::stream_rng(14, 0);
  Matrix x = cqtest::random_hermitian(rng, 4);
  Matrix ref = cqtest::random_hermitian(rng, 4);
  HermitianOperator px =
      cqchan::pinch(HermitianOperator(x), HermitianOperator(ref));
  CHECK(px.trace() == doctest::Approx(x.trace().real()).epsilon(1e-12));
  HermitianOperator ppx = cqchan::pinch(px, HermitianOperator(ref));
  CHECK(maxabs(ppx.matrix() - px.matrix()) < 1e-10);
  // The pinched operator commutes with the reference.
  CHECK(maxabs(px.matrix() * ref - ref * px.matrix()) < 1e-10);
}

TEST_CASE("pinch onto a nondegenerate diagonal keeps only the diagonal") {
  Matrix x(2, 2);
  x << 0.7, std::complex<double>(0.1, 0.2), std::complex<double>(0.1, -0.2),
      0.3;
  Matrix ref = cqtest::diag2(1.0, 2.0);
  HermitianOperator px =
      cqchan::pinch(HermitianOperator(x), HermitianOperator(ref));
  CHECK(maxabs(px.matrix() - cqtest::diag2(0.7, 0.3)) < 1e-12);
}

TEST_CASE("gen_inverse_sqrt inverts on the support and kills the kernel") {
  Matrix a = cqtest::diag2(4.0, 0.0);
  HermitianOperator inv = cqchan::gen_inverse_sqrt(HermitianOperator(a));
  CHECK(maxabs(inv.matrix() - cqtest::diag2(0.5, 0.0)) < 1e-12);
  Matrix supp = inv.matrix() * a * inv.matrix();
  CHECK(maxabs(supp - cqtest::diag2(1.0, 0.0)) < 1e-12);

  auto rng = cqchan::stream_rng(15, 0);
  Matrix p = cqtest::random_psd(rng, 3);
  HermitianOperator r = cqchan::gen_inverse_sqrt(HermitianOperator(p));
  Matrix proj = r.matrix() * p * r.matrix();
  CHECK(maxabs(proj * proj - proj) < 1e-8);
  CHECK(maxabs(proj - cqchan::support_projector(HermitianOperator(p)).matrix()) <
        1e-8);
}

TEST_CASE("support_projector rank equals the number of nonzero eigenvalues") {
  Matrix a = cqtest::diag2(0.3, 0.0);
  HermitianOperator s = cqchan::support_projector(HermitianOperator(a));
  CHECK(s.trace() == doctest::Approx(1.0));
  CHECK(maxabs(s.matrix() * s.matrix() - s.matrix()) < 1e-12);
}

TEST_CASE("permute_factors swaps tensor factors") {
  auto rng = cqchan::stream_rng(16, 0);
  Matrix a = cqtest::random_hermitian(rng, 2);
  Matrix b = cqtest::random_hermitian(rng, 2);
  Matrix ab = cqchan::tensor(a, b);
  // Input factor i lands in output slot perm[i].
  Matrix swapped = cqchan::permute_factors(ab, {1, 0}, 2);
  CHECK(maxabs(swapped - cqchan::tensor(b, a)) < 1e-12);

  Matrix c = cqtest::random_hermitian(rng, 2);
  Matrix abc = cqchan::tensor(cqchan::tensor(a, b), c);
  Matrix cycled = cqchan::permute_factors(abc, {2, 0, 1}, 2);
  Matrix expect = cqchan::tensor(cqchan::tensor(b, c), a);
  CHECK(maxabs(cycled - expect) < 1e-12);
}

TEST_CASE("permute_factors with mixed local dimensions") {
  auto rng = cqchan::stream_rng(17, 0);
  Matrix a = cqtest::random_hermitian(rng, 2);
  Matrix b = cqtest::random_hermitian(rng, 3);
  Matrix ab = cqchan::tensor(a, b);
  Matrix ba = cqchan::permute_factors(ab, {1, 0}, std::vector<int>{2, 3});
  CHECK(maxabs(ba - cqchan::tensor(b, a)) < 1e-12);
}

TEST_CASE("permute_factors composition matches composed permutations") {
  auto rng = cqchan::stream_rng(18, 0);
  Matrix a = cqtest::random_hermitian(rng, 2);
  Matrix b = cqtest::random_hermitian(rng, 2);
  Matrix c = cqtest::random_hermitian(rng, 2);
  Matrix abc = cqchan::tensor(cqchan::tensor(a, b), c);
  std::vector<int> p1 = {1, 2, 0};
  std::vector<int> p2 = {2, 0, 1};
  Matrix two_step =
      cqchan::permute_factors(cqchan::permute_factors(abc, p1, 2), p2, 2);
  std::vector<int> comp(3);
  for (int i = 0; i < 3; ++i) comp[i] = p2[p1[i]];
  Matrix one_step = cqchan::permute_factors(abc, comp, 2);
  CHECK(maxabs(two_step - one_step) < 1e-12);
}

TEST_CASE("trace_norm of a diagonal is the absolute entry sum") {
  Matrix m = cqtest::diag2(0.3, -0.7);
  CHECK(cqchan::trace_norm(HermitianOperator(m)) == doctest::Approx(1.0));
}

TEST_CASE("re_trace_product agrees with the dense trace") {
  auto rng = cqchan::stream_rng(19, 0);
  Matrix a = cqtest::random_hermitian(rng, 3);
  Matrix b = cqtest::random_hermitian(rng, 3);
  double direct = (a * b).trace().real();
  CHECK(cqchan::re_trace_product(a, b) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("HermitianOperator rejects non-Hermitian input") {
  Matrix m(2, 2);
  m << 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(HermitianOperator{m}, cqchan::InputError);
}

TEST_CASE("DensityMatrix validates trace and positivity") {
  CHECK_THROWS_AS(DensityMatrix{cqtest::diag2(0.6, 0.6)}, cqchan::InputError);
  CHECK_THROWS_AS(DensityMatrix{cqtest::diag2(1.5, -0.5)}, cqchan::InputError);
  Vector v(2);
  v << 1.0, 1.0;
  DensityMatrix p = DensityMatrix::pure(v);
  CHECK(maxabs(p.matrix() - cqtest::plus_state()) < 1e-12);
}

TEST_CASE("Povm validates dominance and builds the remainder") {
  std::vector<HermitianOperator> good;
  good.emplace_back(cqtest::diag2(0.5, 0.0));
  good.emplace_back(cqtest::diag2(0.25, 1.0));
  Povm povm(good);
  HermitianOperator rem = povm.remainder();
  CHECK(maxabs(rem.matrix() - cqtest::diag2(0.25, 0.0)) < 1e-12);

  std::vector<HermitianOperator> over;
  over.emplace_back(cqtest::diag2(0.8, 0.0));
  over.emplace_back(cqtest::diag2(0.8, 0.5));
  CHECK_THROWS_AS(Povm{over}, cqchan::InputError);

  std::vector<HermitianOperator> negative;
  negative.emplace_back(cqtest::diag2(-0.1, 0.5));
  CHECK_THROWS_AS(Povm{negative}, cqchan::InputError);
}
