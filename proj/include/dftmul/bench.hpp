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

#ifndef DFTMUL_BENCH_HPP_
#define DFTMUL_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "dftmul/algo_params.hpp"

namespace dftmul {

/// Engines in CLI order: naive, dft, ss, schonhage2, ck, auto.
const std::vector<AlgoTag>& all_engines();

struct BenchConfig {
  std::vector<AlgoTag> engines;  // empty: all engines
  std::vector<std::string> fields{"fp:17"};
  std::vector<std::size_t> degrees{1, 2, 4, 8, 16};
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  bool explain_plan = false;
  double suitability_c = 3.0;  // meta only
  bool csv = false;            // meta only
};

/// "4", "1,2,8", "1..64" or a comma list mixing both. Throws UsageError.
std::vector<std::size_t> parse_degrees(const std::string& text);

struct VerifyCell {
  AlgoTag engine = AlgoTag::Naive;
  std::string field;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t passed = 0;
  bool skipped = false;
  std::string reason;
};

struct VerifyResult {
  std::vector<VerifyCell> cells;
  std::size_t mismatches = 0;
  std::vector<AlgoTag> engines_run;
  std::vector<AlgoTag> engines_skipped;  // skipped in every cell
};

/// Every selected engine against the schoolbook product on seeded random
/// inputs. Precondition failures are skips, not mismatches.
VerifyResult run_verify(const BenchConfig& config);

/// Header plus one row per (engine, field, n), sorted by engine name,
/// field and n. Deterministic for a given config.
std::vector<std::string> run_bench(const BenchConfig& config);

/// Plan explanation for every selected engine, field and degree.
std::string explain_plans(const BenchConfig& config);

/// Exit status 0 when there are no mismatches, else 1.
int cmd_verify(const BenchConfig& config, std::ostream& out);
int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& log);
int cmd_meta(const BenchConfig& config, std::ostream& out);

}  // namespace dftmul

#endif  // DFTMUL_BENCH_HPP_
