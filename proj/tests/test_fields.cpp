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

#include "dftmul/fields.hpp"

#include <gtest/gtest.h>

#include <random>

namespace dftmul {
namespace {

// Exact multiplicative order by repeated multiplication.
template <class F>
std::uint64_t brute_order(const F& f, typename F::value_type a) {
  std::uint64_t k = 1;
  auto w = a;
  while (!(w == f.one())) {
    w = f.times(w, a);
    ++k;
  }
  return k;
}

template <class F>
void expect_field_axioms(const F& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = f.random(rng);
    const auto b = f.random(rng);
    const auto c = f.random(rng);
    EXPECT_EQ(f.plus(a, b), f.plus(b, a));
    EXPECT_EQ(f.times(a, b), f.times(b, a));
    EXPECT_EQ(f.times(f.times(a, b), c), f.times(a, f.times(b, c)));
    EXPECT_EQ(f.plus(f.plus(a, b), c), f.plus(a, f.plus(b, c)));
    EXPECT_EQ(f.times(a, f.plus(b, c)), f.plus(f.times(a, b), f.times(a, c)));
    EXPECT_EQ(f.plus(a, f.negate(a)), f.zero());
    EXPECT_EQ(f.minus(a, b), f.plus(a, f.negate(b)));
    if (!f.is_zero(a)) EXPECT_EQ(f.times(a, f.inv(a)), f.one());
  }
}

TEST(PrimeFieldTest, Axioms) {
  expect_field_axioms(PrimeField(17), 1);
  expect_field_axioms(PrimeField(2), 2);
  expect_field_axioms(PrimeField(998244353), 3);
}

TEST(PrimeFieldTest, RejectsComposite) {
  EXPECT_THROW(PrimeField(15), DomainError);
  EXPECT_THROW(PrimeField(1), DomainError);
}

TEST(PrimeFieldTest, FromIntReducesNegatives) {
  PrimeField f(7);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_EQ(f.from_int(15), 1u);
}

TEST(PrimeFieldTest, InverseOfZeroThrows) { EXPECT_THROW(PrimeField(5).inv(0), DomainError); }

TEST(PrimeFieldTest, PrincipalRootIsSmallestOfExactOrder) {
  PrimeField f(17);
  EXPECT_EQ(find_principal_root(f, 8), std::optional<std::uint64_t>(2));
  EXPECT_EQ(find_principal_root(f, 16), std::optional<std::uint64_t>(3));
  EXPECT_EQ(find_principal_root(f, 1), std::optional<std::uint64_t>(1));
  EXPECT_FALSE(find_principal_root(f, 3).has_value());
  EXPECT_FALSE(find_principal_root(f, 17).has_value());
}

TEST(PrimeFieldTest, PrincipalRootMatchesExhaustiveSearch) {
  for (std::uint64_t p : {13u, 31u, 41u, 97u}) {
    PrimeField f(p);
    for (std::uint64_t n = 1; n < p; ++n) {
      std::optional<std::uint64_t> expected;
      for (std::uint64_t a = 1; a < p && !expected; ++a) {
        if (brute_order(f, a) == n) expected = a;
      }
      EXPECT_EQ(find_principal_root(f, n), expected) << "p=" << p << " n=" << n;
      EXPECT_EQ(f.has_root(n), expected.has_value());
    }
  }
}

TEST(ExtensionFieldTest, ModulusIsLeastIrreducible) {
  using C = std::vector<std::uint64_t>;
  EXPECT_EQ(ExtensionField(2, 2).modulus(), (C{1, 1, 1}));
  EXPECT_EQ(ExtensionField(2, 3).modulus(), (C{1, 1, 0, 1}));
  EXPECT_EQ(ExtensionField(2, 4).modulus(), (C{1, 1, 0, 0, 1}));
  EXPECT_EQ(ExtensionField(3, 2).modulus(), (C{1, 0, 1}));
}

TEST(ExtensionFieldTest, Axioms) {
  expect_field_axioms(ExtensionField(2, 4), 4);
  expect_field_axioms(ExtensionField(3, 2), 5);
  expect_field_axioms(ExtensionField(5, 3), 6);
  expect_field_axioms(ExtensionField(2, 20), 7);  // beyond the log tables
  expect_field_axioms(ExtensionField(7, 1), 8);
}

TEST(ExtensionFieldTest, EveryNonzeroElementHasOrderDividingQMinusOne) {
  ExtensionField f(3, 3);
  for (std::uint64_t a = 1; a < f.size(); ++a) EXPECT_EQ(26 % brute_order(f, a), 0u);
}

TEST(ExtensionFieldTest, PrincipalRootMatchesExhaustiveSearch) {
  ExtensionField f(2, 4);
  for (std::uint64_t n = 1; n <= 15; ++n) {
    std::optional<std::uint64_t> expected;
    for (std::uint64_t a = 1; a < 16 && !expected; ++a) {
      if (brute_order(f, a) == n) expected = a;
    }
    EXPECT_EQ(find_principal_root(f, n), expected) << n;
  }
}

TEST(ExtensionFieldTest, ToString) {
  ExtensionField f(3, 2);
  EXPECT_EQ(f.to_string(f.from_coeffs({1, 2})), "2*y+1");
  EXPECT_EQ(f.to_string(0), "0");
}

TEST(RationalFieldTest, AxiomsAndRoots) {
  RationalField q;
  expect_field_axioms(q, 9);
  EXPECT_EQ(find_principal_root(q, 1), std::optional<mpq_class>(1));
  EXPECT_EQ(find_principal_root(q, 2), std::optional<mpq_class>(-1));
  EXPECT_FALSE(find_principal_root(q, 4).has_value());
  EXPECT_THROW(q.inv(0), DomainError);
}

TEST(RationalFieldTest, RandomStaysInRange) {
  RationalField q;
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const mpq_class v = q.random(rng);
    EXPECT_LE(abs(v.get_num()), 99);
    EXPECT_LE(v.get_den(), 99);
  }
}

TEST(ChargedOpsTest, EachWrapperChargesOneUnit) {
  PrimeField f(17);
  CostLedger ledger;
  f.add(3, 4, ledger);
  f.sub(3, 4, ledger);
  f.neg(3, ledger);
  EXPECT_EQ(ledger.additive_and_scalar(), 3u);
  f.mul(3, 4, ledger);
  EXPECT_EQ(ledger.nonscalar(), 1u);
  f.mul_scalar(3, 4, ledger);
  EXPECT_EQ(ledger.scalar(), 1u);
  EXPECT_EQ(ledger.total(), 5u);
}

TEST(FieldElementTest, MixedFieldsThrow) {
  PrimeField f(17);
  PrimeField g(19);
  CostLedger ledger;
  EXPECT_THROW(add(element(f, 1), element(g, 1), ledger), DomainError);
  const auto s = mul(element(f, 3), element(f, 6), ledger, false);
  EXPECT_EQ(s.value, 1u);
  EXPECT_EQ(inv(element(f, 3)).value, 6u);
}

TEST(FieldSpecTest, ParsesAndRejects) {
  EXPECT_EQ(field_spec(parse_field_spec("fp:17")), "fp:17");
  EXPECT_EQ(field_spec(parse_field_spec("fq:2^8")), "fq:2^8");
  EXPECT_EQ(field_spec(parse_field_spec("q")), "q");
  EXPECT_THROW(parse_field_spec("fp:"), UsageError);
  EXPECT_THROW(parse_field_spec("fq:2"), UsageError);
  EXPECT_THROW(parse_field_spec("gf:7"), UsageError);
  EXPECT_THROW(parse_field_spec("fp:21"), DomainError);
}

}  // namespace
}  // namespace dftmul
