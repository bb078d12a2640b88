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

#include "cqchan/avcq.hpp"
#include "cqchan/channel_file.hpp"
#include "cqchan/errors.hpp"
#include "cqchan/rng.hpp"
#include "doctest.h"
#include "test_util.hpp"

using cqchan::Avcq;
using cqchan::Code;
using cqchan::CqChannel;
using cqchan::DiscreteRandomCode;
using cqchan::EvalMode;
using cqchan::HermitianOperator;
using cqchan::Matrix;
using cqchan::Povm;
using cqtest::maxabs;

namespace {

Avcq swap_avcq() {
  CqChannel id = cqtest::make_channel({cqtest::unit(0, 0, 2), cqtest::unit(1, 1, 2)});
  CqChannel sw = cqtest::make_channel({cqtest::unit(1, 1, 2), cqtest::unit(0, 0, 2)});
  return Avcq({"id", "swap"}, {id, sw});
}

Avcq mild_avcq() {
  return cqchan::load_channel_file(cqtest::fixture("avcq-mild.json")).to_avcq();
}

Code basis_code() {
  std::vector<HermitianOperator> dec;
  dec.emplace_back(cqtest::unit(0, 0, 2));
  dec.emplace_back(cqtest::unit(1, 1, 2));
  return Code(2, {{0}, {1}}, Povm(std::move(dec)));
}

// Repetition words with matched product decoders.
Code repetition_code() {
  std::vector<HermitianOperator> dec;
  dec.emplace_back(cqtest::unit(0, 0, 4));
  dec.emplace_back(cqtest::unit(3, 3, 4));
  return Code(2, {{0, 0}, {1, 1}}, Povm(std::move(dec)));
}

// Codewords 01 and 10, decoded by the matching basis projectors.
Code crossed_code() {
  std::vector<HermitianOperator> dec;
  dec.emplace_back(cqtest::unit(1, 1, 4));
  dec.emplace_back(cqtest::unit(2, 2, 4));
  return Code(2, {{0, 1}, {1, 0}}, Povm(std::move(dec)));
}

}  // namespace

TEST_CASE("adversarial family construction is validated") {
  CqChannel id = cqtest::make_channel({cqtest::unit(0, 0, 2), cqtest::unit(1, 1, 2)});
  CHECK_THROWS_AS(Avcq({}, {}), cqchan::InputError);
  CHECK_THROWS_AS(Avcq({"a", "b"}, {id}), cqchan::InputError);
  CqChannel three = cqtest::make_channel(
      {cqtest::unit(0, 0, 2), cqtest::unit(1, 1, 2), cqtest::plus_state()});
  CHECK_THROWS_AS(Avcq({"a", "b"}, {id, three}), cqchan::InputError);
}

TEST_CASE("realize tensors the per-position outputs") {
  Avcq a = swap_avcq();
  auto out = cqchan::realize(a, {0, 1}, {0, 1});
  // Position 0 sends letter 0 through the identity, position 1 sends
  // letter 1 through the swap, so both come out in the ground state.
  Matrix expect = cqchan::tensor(cqtest::unit(0, 0, 2), cqtest::unit(0, 0, 2));
  CHECK(maxabs(out.matrix() - expect) < 1e-12);
  CHECK_THROWS_AS(cqchan::realize(a, {0}, {0, 1}), cqchan::InputError);
  CHECK_THROWS_AS(cqchan::realize(a, {0, 2}, {0, 1}), cqchan::InputError);
}

TEST_CASE("worst case evaluation on the mild family, frozen") {
  auto res = cqchan::worst_case_eval(basis_code(), mild_avcq());
  CHECK(res.success == doctest::Approx(0.96).epsilon(1e-12));
  CHECK(res.argmin_sequence == std::vector<int>{1});
  CHECK(res.exhaustive);
  CHECK(res.sequences_checked == 2);
}

TEST_CASE("worst case evaluation finds the swap attack") {
  auto res = cqchan::worst_case_eval(basis_code(), swap_avcq());
  CHECK(res.success == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(res.argmin_sequence == std::vector<int>{1});
}

TEST_CASE("sampled evaluation is seeded and bounded") {
  EvalMode mode;
  mode.exhaustive = false;
  mode.sample_count = 50;
  mode.seed = 3;
  auto r1 = cqchan::worst_case_eval(repetition_code(), mild_avcq(), mode);
  auto r2 = cqchan::worst_case_eval(repetition_code(), mild_avcq(), mode);
  CHECK_FALSE(r1.exhaustive);
  CHECK(r1.sequences_checked == 50);
  CHECK(r1.success == r2.success);
  CHECK(r1.success >= 0.0);
  CHECK(r1.success <= 1.0);
}

TEST_CASE("exhaustive evaluation enforces the sequence budget") {
  CqChannel id = cqtest::make_channel({cqtest::unit(0, 0, 2), cqtest::unit(1, 1, 2)});
  std::vector<std::string> names;
  std::vector<CqChannel> copies;
  for (int s = 0; s < 11; ++s) {
    names.push_back("s" + std::to_string(s));
    copies.push_back(id);
  }
  Avcq wide(names, copies);
  std::vector<HermitianOperator> dec;
  dec.emplace_back(HermitianOperator::identity(64));
  Code one(2, {{0, 0, 0, 0, 0, 0}}, Povm(std::move(dec)));
  CHECK_THROWS_AS(cqchan::worst_case_eval(one, wide), cqchan::BudgetError);
}

TEST_CASE("minimum success over type mixtures, frozen") {
  double val = cqchan::min_type_success(repetition_code(), mild_avcq());
  double expect = 0.5 * (0.97 * 0.97 + 0.95 * 0.95);
  CHECK(val == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("permutation randomization collapses invariant codes") {
  Avcq a = mild_avcq();
  double gamma = 1.0 - cqchan::min_type_success(repetition_code(), a) + 1e-9;
  DiscreteRandomCode rc = cqchan::robustify(repetition_code(), a, gamma);
  CHECK(rc.size() == 1);
  CHECK(rc.weights()[0] == doctest::Approx(1.0).epsilon(1e-12));
  auto worst = cqchan::worst_case_eval(rc, a);
  CHECK(worst.success >= 1.0 - 9.0 * gamma - 1e-9);
}

TEST_CASE("permutation randomization spreads over distinct variants") {
  Avcq a = mild_avcq();
  Code code = crossed_code();
  double gamma = 1.0 - cqchan::min_type_success(code, a) + 1e-9;
  DiscreteRandomCode rc = cqchan::robustify(code, a, gamma);
  CHECK(rc.size() == 2);
  CHECK(rc.weights()[0] == doctest::Approx(0.5).epsilon(1e-12));
  auto worst = cqchan::worst_case_eval(rc, a);
  CHECK(worst.success >= 1.0 - 9.0 * gamma - 1e-9);
  // The randomized family outperforms both deterministic variants on
  // their own worst sequences.
  auto det = cqchan::worst_case_eval(code, a);
  CHECK(worst.success >= det.success - 1e-12);
}

TEST_CASE("permutation randomization rejects codes that miss the premise") {
  CHECK_THROWS_AS(cqchan::robustify(basis_code(), swap_avcq(), 0.1),
                  cqchan::InputError);
}

TEST_CASE("random code reduction meets a feasible target") {
  Avcq a = mild_avcq();
  Code code = crossed_code();
  double gamma = 1.0 - cqchan::min_type_success(code, a) + 1e-9;
  DiscreteRandomCode rc = cqchan::robustify(code, a, gamma);
  auto red = cqchan::reduce_random_code(rc, a, 4, 0.9, 5);
  CHECK(red.target_met);
  CHECK(red.codes.size() == 4);
  CHECK(red.worst.success >= 0.9);
  CHECK(red.retries_used >= 1);
}

TEST_CASE("random code reduction reports an infeasible target") {
  Avcq a = mild_avcq();
  Code code = crossed_code();
  double gamma = 1.0 - cqchan::min_type_success(code, a) + 1e-9;
  DiscreteRandomCode rc = cqchan::robustify(code, a, gamma);
  auto red = cqchan::reduce_random_code(rc, a, 2, 0.999, 5, 3);
  CHECK_FALSE(red.target_met);
  CHECK(red.retries_used >= 1);
  CHECK(red.retries_used <= 3);
  CHECK(red.worst.success < 0.999);
}

TEST_CASE("composition concatenates words and tensors decoders, frozen") {
  Code prefix = basis_code();
  std::vector<Code> banks = {basis_code(), basis_code()};
  Code comp = cqchan::compose_cr_code(prefix, banks);
  REQUIRE(comp.size() == 4);
  CHECK(comp.blocklength() == 2);
  CHECK(comp.word(0) == std::vector<int>{0, 0});
  CHECK(comp.word(1) == std::vector<int>{0, 1});
  CHECK(comp.word(2) == std::vector<int>{1, 0});
  CHECK(comp.word(3) == std::vector<int>{1, 1});
  Matrix d1 = cqchan::tensor(cqtest::unit(0, 0, 2), cqtest::unit(1, 1, 2));
  CHECK(maxabs(comp.decoder()[1].matrix() - d1) < 1e-12);

  auto worst = cqchan::worst_case_eval(comp, mild_avcq());
  double expect = (0.97 * 0.97 + 2.0 * 0.97 * 0.95 + 0.95 * 0.95) / 4.0;
  CHECK(worst.success == doctest::Approx(expect).epsilon(1e-12));

  std::vector<Code> short_banks = {basis_code()};
  CHECK_THROWS_AS(cqchan::compose_cr_code(prefix, short_banks),
                  cqchan::InputError);
  std::vector<Code> uneven = {basis_code(), repetition_code()};
  CHECK_THROWS_AS(cqchan::compose_cr_code(prefix, uneven), cqchan::InputError);
}

TEST_CASE("random family evaluation averages over atoms, frozen") {
  std::vector<HermitianOperator> anti;
  anti.emplace_back(cqtest::unit(1, 1, 2));
  anti.emplace_back(cqtest::unit(0, 0, 2));
  Code flipped(2, {{0}, {1}}, Povm(std::move(anti)));
  Eigen::VectorXd w(2);
  w << 0.5, 0.5;
  DiscreteRandomCode family({basis_code(), flipped}, w);
  auto res = cqchan::worst_case_eval(family, swap_avcq());
  CHECK(res.success == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("random code container validation") {
  Eigen::VectorXd w(2);
  w << 0.7, 0.7;
  CHECK_THROWS_AS(DiscreteRandomCode({basis_code(), basis_code()}, w),
                  cqchan::InputError);
  Eigen::VectorXd neg(2);
  neg << 1.5, -0.5;
  CHECK_THROWS_AS(DiscreteRandomCode({basis_code(), basis_code()}, neg),
                  cqchan::InputError);
  Eigen::VectorXd one(1);
  one << 1.0;
  CHECK_THROWS_AS(DiscreteRandomCode({}, one), cqchan::InputError);
  Eigen::VectorXd w2(2);
  w2 << 0.5, 0.5;
  CHECK_THROWS_AS(DiscreteRandomCode({basis_code(), repetition_code()}, w2),
                  cqchan::InputError);
}

TEST_CASE("swap family is symmetrizable and the attack pins the rate") {
  Avcq a = swap_avcq();
  auto cert = cqchan::is_m_symmetrizable(a);
  REQUIRE(cert.symmetrizable);
  REQUIRE(cert.witnesses.size() == 1);
  CHECK(cert.witnesses[0].distance <= 1e-9);
  auto attack = cqchan::symmetrizable_attack(a, cert, basis_code());
  CHECK(attack.success_bound <= 0.5 + attack.slack + 1e-9);
  CHECK(attack.slack <= 1e-8);
}

TEST_CASE("separated outputs defeat symmetrization, frozen distance") {
  Avcq a = cqchan::load_channel_file(cqtest::fixture("counterexample-cq.json"))
               .to_avcq();
  auto cert = cqchan::is_m_symmetrizable(a);
  CHECK_FALSE(cert.symmetrizable);
  REQUIRE(cert.witnesses.size() == 1);
  CHECK(cert.separating_pair == 0);
  CHECK(cert.witnesses[0].distance == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("the mild family is not symmetrizable") {
  auto cert = cqchan::is_m_symmetrizable(mild_avcq());
  CHECK_FALSE(cert.symmetrizable);
  CHECK(cert.witnesses[cert.separating_pair].distance > 0.1);
}

TEST_CASE("attack preconditions") {
  Avcq a = swap_avcq();
  auto bad_cert = cqchan::is_m_symmetrizable(mild_avcq());
  CHECK_THROWS_AS(cqchan::symmetrizable_attack(mild_avcq(), bad_cert, basis_code()),
                  cqchan::InputError);
  auto cert = cqchan::is_m_symmetrizable(a);
  std::vector<HermitianOperator> dec;
  dec.emplace_back(HermitianOperator::identity(2));
  Code single(2, {{0}}, Povm(std::move(dec)));
  CHECK_THROWS_AS(cqchan::symmetrizable_attack(a, cert, single),
                  cqchan::InputError);
}
