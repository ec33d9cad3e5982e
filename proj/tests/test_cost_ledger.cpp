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

#include "dftmul/cost_ledger.hpp"

#include <gtest/gtest.h>

#include "dftmul/errors.hpp"

namespace dftmul {
namespace {

TEST(CostLedgerTest, ScalarProductsCountAsAdditiveAndScalar) {
  CostLedger ledger;
  ledger.charge_nonscalar(3);
  ledger.charge_additive(5);
  ledger.charge_scalar(2);
  EXPECT_EQ(ledger.nonscalar(), 3u);
  EXPECT_EQ(ledger.additive_and_scalar(), 7u);
  EXPECT_EQ(ledger.scalar(), 2u);
  EXPECT_EQ(ledger.total(), 10u);
}

TEST(CostLedgerTest, ChargesLandOnTheInnermostLevel) {
  CostLedger ledger;
  ledger.charge_additive();
  {
    LevelScope outer(ledger, 1);
    ledger.charge_nonscalar();
    {
      LevelScope inner(ledger, 2);
      ledger.charge_scalar(4);
    }
    ledger.charge_additive(2);
  }
  ASSERT_TRUE(ledger.balanced());
  EXPECT_EQ(ledger.depth(), 2u);
  const auto& levels = ledger.per_level();
  ASSERT_EQ(levels.size(), 3u);
  EXPECT_EQ(levels[0].total(), 1u);
  EXPECT_EQ(levels[1].total(), 3u);
  EXPECT_EQ(levels[2].scalar, 4u);
}

TEST(CostLedgerTest, ExitWithoutEnterThrows) {
  CostLedger ledger;
  EXPECT_THROW(ledger.exit_level(), UsageError);
}

TEST(CostLedgerTest, ReportRejectsOpenLevelsAndBadSize) {
  CostLedger ledger;
  EXPECT_THROW(ledger.report(0), UsageError);
  ledger.enter_level(1);
  EXPECT_THROW(ledger.report(4), UsageError);
  ledger.exit_level();
  EXPECT_NO_THROW(ledger.report(4));
}

TEST(CostLedgerTest, ReportRatios) {
  CostLedger ledger;
  ledger.charge_additive(64);
  const CostReport r = ledger.report(16);
  EXPECT_EQ(r.total, 64u);
  EXPECT_DOUBLE_EQ(r.per_nlogn, 1.0);
  EXPECT_DOUBLE_EQ(r.per_nlognloglogn, 0.5);
  // log log n is zero at n = 2 and negative below; the ratio reads as 0.
  EXPECT_DOUBLE_EQ(ledger.report(2).per_nlognloglogn, 0.0);
  EXPECT_DOUBLE_EQ(ledger.report(1).per_nlogn, 0.0);
}

TEST(CostLedgerTest, MergeAddsCountersAndSplits) {
  CostLedger a;
  CostLedger b;
  a.charge_additive();
  {
    LevelScope s(b, 3);
    b.charge_nonscalar(2);
    b.record_split({3, 16, 8, 4, 4});
  }
  a.merge(b);
  EXPECT_EQ(a.total(), 3u);
  EXPECT_EQ(a.depth(), 3u);
  ASSERT_EQ(a.splits().size(), 1u);
  EXPECT_EQ(a.splits()[0].products, 4u);
  EXPECT_EQ(a.per_level()[3].nonscalar, 2u);
}

TEST(CostLedgerTest, CsvRowHasOneFieldPerHeaderColumn) {
  CostLedger ledger;
  ledger.charge_nonscalar(1);
  const std::string row = csv_row("ok", "naive", "fp:17", 4, 8, ledger.report(4));
  auto commas = [](const std::string& s) { return std::count(s.begin(), s.end(), ','); };
  EXPECT_EQ(commas(row), commas(csv_header()));
  EXPECT_EQ(row.rfind("ok,naive,fp:17,4,8,1,0,1,", 0), 0u);
}

}  // namespace
}  // namespace dftmul
