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

#ifndef DFTMUL_COST_LEDGER_HPP_
#define DFTMUL_COST_LEDGER_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dftmul {

/// Costs charged while a given recursion level was active.
struct LevelCost {
  std::size_t level = 0;
  std::uint64_t nonscalar = 0;
  std::uint64_t additive_and_scalar = 0;
  std::uint64_t scalar = 0;  // subset of additive_and_scalar

  std::uint64_t total() const { return nonscalar + additive_and_scalar; }
};

/// One reduction step of a recursive engine: a product in an algebra of
/// dimension `outer_dim` was turned into `products` products in an algebra
/// of dimension `inner_dim` via transforms of order `transform_order`.
struct SplitRecord {
  std::size_t level = 0;
  std::size_t outer_dim = 0;
  std::size_t inner_dim = 0;
  std::size_t transform_order = 0;
  std::size_t products = 0;
};

struct CostReport {
  std::size_t n = 0;
  std::uint64_t nonscalar = 0;            // L^m
  std::uint64_t additive_and_scalar = 0;  // L^a
  std::uint64_t scalar = 0;
  std::uint64_t total = 0;                // L
  std::size_t depth = 0;
  std::vector<LevelCost> per_level;
  double per_nlogn = 0.0;
  double per_nlognloglogn = 0.0;
};

/// Operation counter for the division-free cost model: nonscalar
/// multiplications go to L^m; additions, subtractions, negations and scalar
/// multiplications go to L^a.
///
/// Single owner. Charges attach to the innermost entered level (level 0 when
/// nothing was entered). Counters only ever grow.
class CostLedger {
 public:
  CostLedger();

  void charge_nonscalar(std::uint64_t count = 1) {
    current().nonscalar += count;
    nonscalar_ += count;
  }
  void charge_additive(std::uint64_t count = 1) {
    current().additive_and_scalar += count;
    additive_ += count;
  }
  void charge_scalar(std::uint64_t count = 1) {
    LevelCost& c = current();
    c.additive_and_scalar += count;
    c.scalar += count;
    additive_ += count;
    scalar_ += count;
  }

  void enter_level(std::size_t level);
  /// Throws UsageError when no level is open.
  void exit_level();
  std::size_t current_level() const { return stack_.empty() ? 0 : stack_.back(); }

  void record_split(const SplitRecord& record) { splits_.push_back(record); }
  const std::vector<SplitRecord>& splits() const { return splits_; }

  /// Adds every counter and split record of `other` (levels matched by
  /// index). Used to fold private sub-ledgers back deterministically.
  void merge(const CostLedger& other);

  std::uint64_t nonscalar() const { return nonscalar_; }
  std::uint64_t additive_and_scalar() const { return additive_; }
  std::uint64_t scalar() const { return scalar_; }
  std::uint64_t total() const { return nonscalar_ + additive_; }
  /// Deepest level ever entered.
  std::size_t depth() const { return depth_; }
  /// Levels 0..depth(), including empty ones.
  const std::vector<LevelCost>& per_level() const { return levels_; }
  bool balanced() const { return stack_.empty(); }

  /// Throws UsageError for n < 1 or an unbalanced ledger.
  CostReport report(std::size_t n) const;

 private:
  LevelCost& current() { return levels_[current_level()]; }

  std::vector<LevelCost> levels_;
  std::vector<std::size_t> stack_;
  std::vector<SplitRecord> splits_;
  std::uint64_t nonscalar_ = 0;
  std::uint64_t additive_ = 0;
  std::uint64_t scalar_ = 0;
  std::size_t depth_ = 0;
};

/// RAII guard for enter_level / exit_level.
class LevelScope {
 public:
  LevelScope(CostLedger& ledger, std::size_t level) : ledger_(ledger) {
    ledger_.enter_level(level);
  }
  ~LevelScope() { ledger_.exit_level(); }
  LevelScope(const LevelScope&) = delete;
  LevelScope& operator=(const LevelScope&) = delete;

 private:
  CostLedger& ledger_;
};

/// Column list of the CSV row written by csv_row().
std::string csv_header();

/// `status,algo,field,n,N,lm,la,l,depth,l_per_nlogn,l_per_nlognloglogn`
std::string csv_row(const std::string& status, const std::string& algo,
                    const std::string& field, std::size_t n, std::size_t ring_size,
                    const CostReport& report);

}  // namespace dftmul

#endif  // DFTMUL_COST_LEDGER_HPP_
