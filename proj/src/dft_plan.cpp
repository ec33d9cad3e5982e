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

#include "dftmul/dft_plan.hpp"

#include "dftmul/errors.hpp"
#include "dftmul/number_theory.hpp"

namespace dftmul {

bool DftPlan::any_fallback() const {
  if (fallback_warning) return true;
  for (const auto& c : children) {
    if (c.any_fallback()) return true;
  }
  return false;
}

std::uint64_t naive_dft_ops(std::size_t n) {
  const std::uint64_t m = n;
  if (m == 0) return 0;
  return m % 2 == 1 ? 2 * m * m - 3 * m + 1 : 2 * m * m - 5 * m + 4;
}

DftPlan make_naive_plan(std::size_t n) {
  DftPlan plan;
  plan.kind = n == 1 ? DftKind::Identity : DftKind::Naive;
  plan.n = n;
  plan.predicted_ops = naive_dft_ops(n);
  return plan;
}

DftPlan make_cooley_tukey_plan(std::size_t n1, std::size_t n2, const RootAvailable& available) {
  if (n1 < 2 || n2 < 2) throw PlanError("Cooley-Tukey needs both factors >= 2");
  DftPlan plan;
  plan.kind = DftKind::CooleyTukey;
  plan.n = n1 * n2;
  plan.n1 = n1;
  plan.n2 = n2;
  plan.children.push_back(plan_dft(n1, available));
  plan.children.push_back(plan_dft(n2, available));
  plan.predicted_ops = n1 * plan.children[1].predicted_ops + n2 * plan.children[0].predicted_ops +
                       static_cast<std::uint64_t>(n1 - 1) * (n2 - 1);
  return plan;
}

DftPlan make_rader_plan(std::size_t p, std::size_t conv_length, const RootAvailable& available) {
  if (p < 3 || !nt::is_prime(p)) throw PlanError("Rader needs an odd prime order");
  if (conv_length != p - 1 && conv_length < 2 * p - 3) {
    throw PlanError("Rader convolution length must be p - 1 or at least 2p - 3");
  }
  if (!available(conv_length)) {
    throw PlanError("no root of order " + std::to_string(conv_length) + " for Rader");
  }
  DftPlan plan;
  plan.kind = DftKind::Rader;
  plan.n = p;
  plan.generator = nt::smallest_primitive_root(p);
  plan.conv_length = conv_length;
  plan.children.push_back(plan_dft(conv_length, available));
  plan.predicted_ops = 2 * plan.children[0].predicted_ops + conv_length + 2 * (p - 1);
  return plan;
}

namespace {

constexpr std::size_t kLargestNaivePrime = 7;

DftPlan plan_prime(std::size_t p, const RootAvailable& available) {
  DftPlan naive = make_naive_plan(p);
  if (p <= kLargestNaivePrime) return naive;

  std::size_t length = 0;
  if (available(p - 1)) {
    length = p - 1;
  } else {
    for (std::size_t l = 1; l != 0 && l < (std::size_t{1} << 40); l <<= 1) {
      if (l >= 2 * p - 3 && available(l)) {
        length = l;
        break;
      }
    }
  }
  if (length == 0) {
    naive.fallback_warning = true;
    return naive;
  }
  DftPlan rader = make_rader_plan(p, length, available);
  return rader.predicted_ops < naive.predicted_ops ? rader : naive;
}

void render_into(const DftPlan& plan, int indent, std::string& out) {
  out.append(static_cast<std::size_t>(indent) * 2, ' ');
  out += "DFT(" + std::to_string(plan.n) + "): ";
  switch (plan.kind) {
    case DftKind::Identity:
      out += "identity";
      break;
    case DftKind::Naive:
      out += "naive";
      break;
    case DftKind::CooleyTukey:
      out += "cooley-tukey " + std::to_string(plan.n1) + " x " + std::to_string(plan.n2);
      break;
    case DftKind::Rader:
      out += "rader g=" + std::to_string(plan.generator) +
             " conv=" + std::to_string(plan.conv_length);
      break;
  }
  out += ", " + std::to_string(plan.predicted_ops) + " ops";
  if (plan.fallback_warning) out += " [fallback: no convolution root]";
  out += "\n";
  for (const auto& c : plan.children) render_into(c, indent + 1, out);
}

}  // namespace

DftPlan plan_dft(std::size_t n, const RootAvailable& available) {
  if (n == 0) throw PlanError("DFT order must be positive");
  if (n == 1) return make_naive_plan(1);
  const auto factors = nt::factorize(n);
  if (factors.size() == 1 && factors[0].second == 1) return plan_prime(n, available);
  // Split off the smallest prime; the total is the same for every
  // factorisation order because (D(n) + n - 1) / n is additive.
  const std::size_t n1 = factors[0].first;
  return make_cooley_tukey_plan(n1, n / n1, available);
}

std::string render_plan(const DftPlan& plan) {
  std::string out;
  render_into(plan, 0, out);
  return out;
}

}  // namespace dftmul
