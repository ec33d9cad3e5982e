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

#ifndef DFTMUL_DFT_PLAN_HPP_
#define DFTMUL_DFT_PLAN_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dftmul {

enum class DftKind { Identity, Naive, CooleyTukey, Rader };

/// Recursive execution plan for a DFT of order n. `predicted_ops` counts
/// coefficient-ring operations, with one root application counted as one
/// scalar product; over a field it equals the ledger total exactly.
struct DftPlan {
  DftKind kind = DftKind::Identity;
  std::size_t n = 1;
  // Cooley-Tukey: n = n1 * n2, children = {plan(n1), plan(n2)}.
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  // Rader: generator of (Z/n)^*, convolution length, children = {plan(L)}.
  std::size_t generator = 0;
  std::size_t conv_length = 0;
  std::vector<DftPlan> children;
  /// Set when a prime order had to fall back to the naive transform because
  /// no convolution length was available.
  bool fallback_warning = false;
  std::uint64_t predicted_ops = 0;

  /// True if this node or any descendant fell back.
  bool any_fallback() const;
};

/// Whether the coefficient ring has a principal root of the given order.
using RootAvailable = std::function<bool(std::size_t)>;

/// Operation count of the direct transform: 2n^2 - 3n + 1 for odd n and
/// 2n^2 - 5n + 4 for even n.
std::uint64_t naive_dft_ops(std::size_t n);

/// Cheapest plan the planner knows for order n (n >= 1). Only orders
/// reported by `available` are used for Rader convolutions.
DftPlan plan_dft(std::size_t n, const RootAvailable& available);

DftPlan make_naive_plan(std::size_t n);
/// Throws PlanError unless n1, n2 >= 2.
DftPlan make_cooley_tukey_plan(std::size_t n1, std::size_t n2, const RootAvailable& available);
/// Rader for prime p with cyclic convolution length L, where L = p - 1 or
/// L >= 2p - 3. Throws PlanError otherwise or when L is not available.
DftPlan make_rader_plan(std::size_t p, std::size_t conv_length, const RootAvailable& available);

/// Indented tree, one node per line.
std::string render_plan(const DftPlan& plan);

}  // namespace dftmul

#endif  // DFTMUL_DFT_PLAN_HPP_
