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

#include "dftmul/generalized.hpp"

#include <algorithm>

#include "dftmul/errors.hpp"
#include "dftmul/number_theory.hpp"

namespace dftmul {

std::size_t RingShape::dim() const {
  switch (kind) {
    case RingKind::Ground:
      return 1;
    case RingKind::Fermat:
      return param;
    case RingKind::Trinomial:
      return 2 * param;
    case RingKind::Cyclotomic:
      return static_cast<std::size_t>(nt::totient(*nt::checked_pow(param, exponent)));
  }
  return 0;
}

std::string RingShape::describe() const {
  switch (kind) {
    case RingKind::Ground:
      return "k";
    case RingKind::Fermat:
      return "A_" + std::to_string(param);
    case RingKind::Trinomial:
      return "B_" + std::to_string(param);
    case RingKind::Cyclotomic:
      return "C_" + std::to_string(*nt::checked_pow(param, exponent));
  }
  return "?";
}

GeneralizedStrategy::GeneralizedStrategy(AlgoTag tag, std::uint64_t characteristic,
                                         std::function<bool(std::size_t)> has_root,
                                         std::size_t s)
    : tag_(tag), characteristic_(characteristic), has_root_(std::move(has_root)), s_(s) {}

AlgoTag GeneralizedStrategy::resolve(std::size_t n) const {
  if (tag_ != AlgoTag::Generalized) return tag_;
  return dispatch_params(characteristic_, has_root_, n).algo;
}

std::optional<LevelPlan> GeneralizedStrategy::top(std::size_t n) const {
  LevelPlan plan;
  switch (resolve(n)) {
    case AlgoTag::Naive:
    case AlgoTag::Generalized:
      return std::nullopt;

    case AlgoTag::DirectDFT: {
      std::size_t s = s_;
      if (s == 0) s = has_root_(params_direct(n, 2).N) ? 2 : 3;
      const AlgoParams p = params_direct(n, s);
      if (!has_root_(p.N)) {
        throw CapabilityError("no root of unity of order " + std::to_string(p.N));
      }
      plan.outer_dim = p.N;
      plan.chunk_len = 1;
      plan.chunk_count = p.N;
      plan.inner = {RingKind::Ground, 1, 0};
      plan.transform_order = p.N;
      plan.psi_step = 1;
      plan.products = p.N;
      return plan;
    }

    case AlgoTag::SchonhageStrassen: {
      if (characteristic_ == 2) throw CapabilityError("Schonhage-Strassen needs characteristic != 2");
      if (n < kCutoff) return std::nullopt;
      const AlgoParams p = params_schonhage(n);
      plan.outer_dim = p.N;
      plan.chunk_len = p.N1 / 2;
      plan.chunk_count = p.N2;
      plan.inner = {RingKind::Fermat, p.N1, 0};
      plan.transform_order = p.N2;
      plan.psi_step = 2 * p.N1 / p.N2;
      plan.products = p.N2;
      return plan;
    }

    case AlgoTag::SchonhageChar2: {
      if (characteristic_ != 2) throw CapabilityError("the ternary variant needs characteristic 2");
      if (n < kCutoff) return std::nullopt;
      const AlgoParams p = params_char2(n);
      plan.outer_dim = 2 * p.N;
      plan.chunk_len = p.N1;
      plan.chunk_count = 2 * p.N2;
      plan.inner = {RingKind::Trinomial, p.N1, 0};
      plan.transform_order = 3 * p.N2;
      plan.psi_step = p.N1 / p.N2;
      plan.back = BackTransform::ThirdsResidue;
      plan.products = 2 * p.N2;
      return plan;
    }

    case AlgoTag::CantorKaltofen: {
      const std::size_t s = s_ != 0 ? s_ : (characteristic_ == 2 ? 3 : 2);
      if (characteristic_ != 0 && s % characteristic_ == 0) {
        throw DomainError("Cantor-Kaltofen needs s prime to the characteristic");
      }
      if (n < std::max<std::size_t>(kCutoff, s * s * s)) return std::nullopt;
      const AlgoParams p = params_cantor_kaltofen(n, s);
      const auto split = cyclotomic_split(s, p.nu);
      plan.outer_dim = p.N;
      plan.layout = Layout::Strided;
      plan.chunk_count = p.N2;
      plan.inner = {RingKind::Cyclotomic, s, split.inner_exponent};
      plan.transform_order = p.N2;
      plan.psi_step = p.N3 / p.N2;
      plan.twist_step = p.N3 / (s * p.N2);
      plan.twist_order = s * p.N2;
      plan.back = BackTransform::TwoStreamTwist;
      plan.unembed = Unembed::Interleave;
      plan.products = 2 * p.N2;
      return plan;
    }
  }
  return std::nullopt;
}

namespace {

bool is_power(std::size_t base, std::size_t x) {
  if (x < 1) return false;
  while (x % base == 0) x /= base;
  return x == 1;
}

}  // namespace

std::optional<LevelPlan> GeneralizedStrategy::inner(const RingShape& ring) const {
  LevelPlan plan;
  plan.outer_dim = ring.dim();
  if (plan.outer_dim <= kRingCutoff) return std::nullopt;
  switch (ring.kind) {
    case RingKind::Ground:
      return std::nullopt;

    case RingKind::Fermat: {
      if (!is_power(2, ring.param)) return std::nullopt;
      const auto [m, t] = fermat_split(ring.param);
      plan.chunk_len = m;
      plan.chunk_count = t;
      plan.inner = {RingKind::Fermat, 2 * m, 0};
      plan.transform_order = t;
      plan.twist_step = 2 * m / t;
      plan.twist_order = 2 * t;
      plan.psi_step = 2 * plan.twist_step;
      plan.unembed = Unembed::ReduceOuter;
      plan.unembed_len = ring.param + m;
      plan.products = t;
      return plan;
    }

    case RingKind::Trinomial: {
      if (!is_power(3, ring.param)) return std::nullopt;
      const auto [N1, N2] = trinomial_split(ring.param);
      plan.chunk_len = N1;
      plan.chunk_count = 2 * N2;
      plan.inner = {RingKind::Trinomial, N1, 0};
      plan.transform_order = 3 * N2;
      plan.psi_step = N1 / N2;
      plan.back = BackTransform::ThirdsResidue;
      plan.unembed = Unembed::ReduceOuter;
      plan.unembed_len = 2 * ring.param + N1;
      plan.products = 2 * N2;
      return plan;
    }

    case RingKind::Cyclotomic: {
      const std::size_t s = ring.param;
      const auto split = cyclotomic_split(s, ring.exponent);
      if (split.N2 < 2) return std::nullopt;
      plan.layout = Layout::Strided;
      plan.chunk_count = split.N2;
      plan.inner = {RingKind::Cyclotomic, s, split.inner_exponent};
      plan.transform_order = split.N2;
      plan.psi_step = split.N3 / split.N2;
      plan.twist_step = split.N3 / (s * split.N2);
      plan.twist_order = s * split.N2;
      plan.back = BackTransform::TwoStreamTwist;
      plan.unembed = Unembed::Interleave;
      plan.products = 2 * split.N2;
      return plan;
    }
  }
  return std::nullopt;
}

std::string GeneralizedStrategy::describe(std::size_t n) const {
  std::string out = "engine " + algo_name(resolve(n)) + " for n=" + std::to_string(n) + "\n";
  auto plan = top(n);
  std::size_t level = 1;
  if (!plan) return out + "  level 1: schoolbook\n";
  while (plan) {
    out += "  level " + std::to_string(level) + ": dim " + std::to_string(plan->outer_dim) +
           " -> " + std::to_string(plan->products) + " products in " + plan->inner.describe() +
           ", transform order " + std::to_string(plan->transform_order) + "\n";
    if (plan->inner.kind == RingKind::Ground) break;
    plan = inner(plan->inner);
    ++level;
    if (!plan) out += "  level " + std::to_string(level) + ": schoolbook\n";
  }
  return out;
}

}  // namespace dftmul
