// Copyright 2026 The dftmul Authors.
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

#include "dftmul/dft.hpp"

#include <gtest/gtest.h>

#include <random>

#include "dftmul/number_theory.hpp"

namespace dftmul {
namespace {

// Smallest prime q with m | q - 1 and none of `avoid` dividing q - 1.
std::uint64_t prime_with_roots(std::uint64_t m, std::vector<std::uint64_t> avoid = {}) {
  for (std::uint64_t q = m + 1;; q += m) {
    if (!nt::is_prime(q)) continue;
    bool ok = true;
    for (auto a : avoid) ok = ok && (q - 1) % a != 0;
    if (ok) return q;
  }
}

template <class F>
std::vector<typename F::value_type> evaluate(const F& f, const std::vector<typename F::value_type>& a,
                                             const typename F::value_type& w) {
  const std::size_t n = a.size();
  std::vector<typename F::value_type> out(n, f.zero());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      out[j] = f.plus(out[j], f.times(a[i], f.pow(w, i * j)));
    }
  }
  return out;
}

template <class F>
void check_transform(const F& f, std::size_t n, const DftPlan& plan, std::uint64_t seed) {
  auto root = ring_root(f, n);
  ASSERT_TRUE(root.has_value()) << f.spec() << " n=" << n;
  std::mt19937_64 rng(seed);
  std::vector<typename F::value_type> a(n);
  for (auto& v : a) v = f.random(rng);
  CostLedger ledger;
  const auto got = dft(a, *root, plan, ledger);
  EXPECT_EQ(got, evaluate(f, a, root->value(1))) << f.spec() << " n=" << n;
  EXPECT_EQ(ledger.total(), plan.predicted_ops) << f.spec() << " n=" << n;
  CostLedger back;
  EXPECT_EQ(dft_inverse(got, *root, plan, back), a);
}

TEST(NaiveDftTest, CountsFollowClosedForm) {
  EXPECT_EQ(naive_dft_ops(1), 0u);
  EXPECT_EQ(naive_dft_ops(2), 2u);
  EXPECT_EQ(naive_dft_ops(3), 10u);
  EXPECT_EQ(naive_dft_ops(4), 16u);
  EXPECT_EQ(naive_dft_ops(5), 36u);
  EXPECT_EQ(naive_dft_ops(6), 46u);
}

TEST(NaiveDftTest, MatchesEvaluationAndCount) {
  for (std::size_t n = 1; n <= 12; ++n) {
    PrimeField f(prime_with_roots(n));
    check_transform(f, n, make_naive_plan(n), n);
  }
}

TEST(NaiveDftTest, OverRationalsAndExtensionFields) {
  check_transform(RationalField{}, 2, make_naive_plan(2), 1);
  ExtensionField f(2, 4);
  check_transform(f, 15, make_naive_plan(15), 2);
  check_transform(f, 5, make_naive_plan(5), 3);
}

TEST(PlannerTest, FrozenCounts) {
  auto all = [](std::size_t) { return true; };
  EXPECT_EQ(plan_dft(1, all).predicted_ops, 0u);
  EXPECT_EQ(plan_dft(4, all).predicted_ops, 9u);
  EXPECT_EQ(plan_dft(6, all).predicted_ops, 28u);
  EXPECT_EQ(plan_dft(8, all).predicted_ops, 29u);
  EXPECT_EQ(plan_dft(24, all).predicted_ops, 181u);
  EXPECT_EQ(plan_dft(32, all).predicted_ops, 209u);
}

TEST(PlannerTest, CostIsIndependentOfSplitOrder) {
  auto all = [](std::size_t) { return true; };
  for (std::size_t n : {12u, 30u, 36u, 60u, 90u}) {
    for (std::size_t n1 = 2; n1 < n; ++n1) {
      if (n % n1 != 0) continue;
      EXPECT_EQ(make_cooley_tukey_plan(n1, n / n1, all).predicted_ops,
                plan_dft(n, all).predicted_ops)
          << n << " = " << n1 << " x " << n / n1;
    }
  }
}

TEST(CooleyTukeyTest, MatchesEvaluationAndCount) {
  for (std::size_t n : {4u, 6u, 8u, 9u, 12u, 16u, 18u, 24u, 30u, 32u, 64u}) {
    PrimeField f(prime_with_roots(n));
    check_transform(f, n, plan_for(*ring_root(f, n)), n);
  }
  ExtensionField f(2, 4);
  check_transform(f, 15, plan_for(*ring_root(f, 15)), 4);
}

TEST(RaderTest, DirectLengthMatchesEvaluation) {
  const std::uint64_t q = prime_with_roots(17 * 16);
  PrimeField f(q);
  auto avail = [&f](std::size_t k) { return f.has_root(k); };
  const DftPlan plan = make_rader_plan(17, 16, avail);
  EXPECT_EQ(plan.generator, 3u);
  EXPECT_EQ(plan.predicted_ops, 2 * 81 + 16 + 2 * 16u);
  check_transform(f, 17, plan, 5);
  // The planner picks it because it beats the direct transform.
  const DftPlan chosen = plan_dft(17, avail);
  EXPECT_EQ(chosen.kind, DftKind::Rader);
  EXPECT_LT(chosen.predicted_ops, naive_dft_ops(17));
}

TEST(RaderTest, PaddedLengthMatchesEvaluation) {
  // q - 1 divisible by 11 and 32 but not by 5, so only the padded
  // convolution exists.
  const std::uint64_t q = prime_with_roots(11 * 32, {5});
  PrimeField f(q);
  auto avail = [&f](std::size_t k) { return f.has_root(k); };
  EXPECT_THROW(make_rader_plan(11, 10, avail), PlanError);
  const DftPlan plan = make_rader_plan(11, 32, avail);
  check_transform(f, 11, plan, 6);
  EXPECT_THROW(make_rader_plan(11, 16, avail), PlanError);
}

TEST(RaderTest, ComposesInsideCooleyTukey) {
  const std::uint64_t q = prime_with_roots(4 * 17 * 16);
  PrimeField f(q);
  auto root = ring_root(f, 68);
  const DftPlan plan = plan_for(*root);
  EXPECT_EQ(plan.kind, DftKind::CooleyTukey);
  check_transform(f, 68, plan, 7);
}

TEST(PlannerTest, FallsBackWithWarningWhenNoConvolutionRoot) {
  auto none = [](std::size_t k) { return k == 11; };
  const DftPlan plan = plan_dft(11, none);
  EXPECT_EQ(plan.kind, DftKind::Naive);
  EXPECT_TRUE(plan.fallback_warning);
  EXPECT_TRUE(plan_dft(22, none).any_fallback());
  EXPECT_NE(render_plan(plan).find("fallback"), std::string::npos);
}

TEST(PlannerTest, RejectsBadRequests) {
  auto all = [](std::size_t) { return true; };
  EXPECT_THROW(plan_dft(0, all), PlanError);
  EXPECT_THROW(make_cooley_tukey_plan(1, 8, all), PlanError);
  EXPECT_THROW(make_rader_plan(9, 8, all), PlanError);
}

TEST(DftInverseTest, CharacteristicDividingOrderThrows) {
  ExtensionField f(2, 2);
  PrimeField g(17);
  auto root = ring_root(g, 4);
  CostLedger ledger;
  EXPECT_NO_THROW(dft_inverse(std::vector<std::uint64_t>(4, 1), *root, ledger));
  EXPECT_FALSE(ring_root(f, 2).has_value());
}

TEST(DftTest, MismatchedLengthThrows) {
  PrimeField f(17);
  auto root = ring_root(f, 8);
  CostLedger ledger;
  EXPECT_THROW(dft(std::vector<std::uint64_t>(4, 0), *root, ledger), PlanError);
}

}  // namespace
}  // namespace dftmul
