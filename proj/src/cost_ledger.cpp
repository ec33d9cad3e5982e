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

#include <cmath>
#include <cstdio>

#include "dftmul/errors.hpp"

namespace dftmul {

CostLedger::CostLedger() : levels_(1) {}

void CostLedger::enter_level(std::size_t level) {
  stack_.push_back(level);
  if (level >= levels_.size()) {
    std::size_t old = levels_.size();
    levels_.resize(level + 1);
    for (std::size_t i = old; i < levels_.size(); ++i) levels_[i].level = i;
  }
  if (level > depth_) depth_ = level;
}

void CostLedger::exit_level() {
  if (stack_.empty()) throw UsageError("exit_level without matching enter_level");
  stack_.pop_back();
}

void CostLedger::merge(const CostLedger& other) {
  if (other.levels_.size() > levels_.size()) {
    std::size_t old = levels_.size();
    levels_.resize(other.levels_.size());
    for (std::size_t i = old; i < levels_.size(); ++i) levels_[i].level = i;
  }
  for (std::size_t i = 0; i < other.levels_.size(); ++i) {
    levels_[i].nonscalar += other.levels_[i].nonscalar;
    levels_[i].additive_and_scalar += other.levels_[i].additive_and_scalar;
    levels_[i].scalar += other.levels_[i].scalar;
  }
  nonscalar_ += other.nonscalar_;
  additive_ += other.additive_;
  scalar_ += other.scalar_;
  if (other.depth_ > depth_) depth_ = other.depth_;
  splits_.insert(splits_.end(), other.splits_.begin(), other.splits_.end());
}

CostReport CostLedger::report(std::size_t n) const {
  if (n < 1) throw UsageError("report: degree bound must be at least 1");
  if (!balanced()) throw UsageError("report: ledger has open levels");
  CostReport r;
  r.n = n;
  r.nonscalar = nonscalar_;
  r.additive_and_scalar = additive_;
  r.scalar = scalar_;
  r.total = total();
  r.depth = depth_;
  r.per_level = levels_;
  const double nn = static_cast<double>(n);
  const double lg = std::log2(nn);
  if (lg > 0.0) r.per_nlogn = static_cast<double>(r.total) / (nn * lg);
  const double lglg = lg > 0.0 ? std::log2(lg) : 0.0;
  if (lglg > 0.0) r.per_nlognloglogn = static_cast<double>(r.total) / (nn * lg * lglg);
  return r;
}

std::string csv_header() {
  return "status,algo,field,n,N,lm,la,l,depth,l_per_nlogn,l_per_nlognloglogn";
}

std::string csv_row(const std::string& status, const std::string& algo,
                    const std::string& field, std::size_t n, std::size_t ring_size,
                    const CostReport& report) {
  char ratios[96];
  std::snprintf(ratios, sizeof(ratios), "%.6f,%.6f", report.per_nlogn,
                report.per_nlognloglogn);
  return status + "," + algo + "," + field + "," + std::to_string(n) + "," +
         std::to_string(ring_size) + "," + std::to_string(report.nonscalar) + "," +
         std::to_string(report.additive_and_scalar) + "," + std::to_string(report.total) +
         "," + std::to_string(report.depth) + "," + ratios;
}

}  // namespace dftmul
