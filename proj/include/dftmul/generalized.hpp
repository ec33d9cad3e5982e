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

#ifndef DFTMUL_GENERALIZED_HPP_
#define DFTMUL_GENERALIZED_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dftmul/algo_params.hpp"
#include "dftmul/polymul.hpp"

// One driver for every DFT-based engine: each recursion level is described
// by a LevelPlan (how to cut the operand into chunks, which ring the chunks
// live in, which transform maps the product to pointwise products and how
// to undo it). A strategy supplies the top-level plan for a degree bound
// and the plan for a product inside a given ring.

namespace dftmul {

enum class RingKind { Ground, Fermat, Trinomial, Cyclotomic };

struct RingShape {
  RingKind kind = RingKind::Ground;
  std::size_t param = 0;  // N for Fermat/trinomial, s for cyclotomic
  unsigned exponent = 0;  // nu for cyclotomic
  std::size_t dim() const;
  std::string describe() const;
};

enum class Layout { Block, Strided };

enum class BackTransform {
  Inverse,         // scaled inverse DFT, then unweighting when twisted
  ThirdsResidue,   // 2/3 of a DFT of order 3N'' and the residue modulo the trinomial
  TwoStreamTwist,  // plain and twisted cyclic products, recombined modulo z^N'' - y
};

enum class Unembed {
  Drop,         // wrap-free top level: keep the first 2n - 1 coefficients
  ReduceOuter,  // overlap-add, then reduce by the outer ring's modulus
  Interleave,   // pure reindexing, no arithmetic
};

struct LevelPlan {
  std::size_t outer_dim = 0;
  Layout layout = Layout::Block;
  std::size_t chunk_len = 0;    // Block: coefficients per chunk
  std::size_t chunk_count = 0;  // Strided: the stride
  RingShape inner;
  std::size_t transform_order = 0;
  std::size_t psi_step = 0;  // transform root is y^psi_step
  std::size_t twist_step = 0;  // 0: no twist; else weight y^twist_step
  std::size_t twist_order = 0;
  BackTransform back = BackTransform::Inverse;
  Unembed unembed = Unembed::Drop;
  std::size_t unembed_len = 0;  // ReduceOuter: overlap-add length
  std::size_t products = 0;     // recursive products issued
};

class GeneralizedStrategy {
 public:
  /// `tag` is the engine to reproduce; AlgoTag::Generalized resolves the
  /// engine per degree bound as dispatch does. `s` = 0 uses defaults.
  GeneralizedStrategy(AlgoTag tag, std::uint64_t characteristic,
                      std::function<bool(std::size_t)> has_root, std::size_t s = 0);

  AlgoTag tag() const { return tag_; }
  AlgoTag resolve(std::size_t n) const;
  /// nullopt: multiply by the schoolbook method. Throws CapabilityError
  /// when the engine cannot run over this field.
  std::optional<LevelPlan> top(std::size_t n) const;
  /// Plan for a product in the given ring at the given level, nullopt for
  /// the schoolbook product.
  std::optional<LevelPlan> inner(const RingShape& ring) const;
  /// One line per level along the first recursion branch.
  std::string describe(std::size_t n) const;

 private:
  AlgoTag tag_;
  std::uint64_t characteristic_;
  std::function<bool(std::size_t)> has_root_;
  std::size_t s_;
};

template <GroundField F>
GeneralizedStrategy make_strategy(const F& field, AlgoTag tag, std::size_t s = 0) {
  return GeneralizedStrategy(
      tag, field.characteristic(), [&field](std::size_t k) { return field.has_root(k); }, s);
}

/// Engine dispatch for (field, n).
template <GroundField F>
AlgoParams dispatch(const F& field, std::size_t n) {
  return dispatch_params(
      field.characteristic(), [&field](std::size_t k) { return field.has_root(k); }, n);
}

namespace detail {

template <GroundField F>
QuotientRing<F> make_ring(const F& field, const RingShape& shape) {
  switch (shape.kind) {
    case RingKind::Fermat:
      return QuotientRing<F>::fermat(field, shape.param);
    case RingKind::Trinomial:
      return QuotientRing<F>::trinomial(field, shape.param);
    case RingKind::Cyclotomic:
      return QuotientRing<F>::cyclotomic(field, shape.param, shape.exponent);
    case RingKind::Ground:
      break;
  }
  throw PlanError("the ground field is not a quotient ring");
}

template <GroundField F>
RingShape shape_of(const QuotientRing<F>& R) {
  switch (R.family()) {
    case RingFamily::Fermat:
      return {RingKind::Fermat, R.parameter(), 0};
    case RingFamily::Trinomial:
      return {RingKind::Trinomial, R.parameter(), 0};
    case RingFamily::Cyclotomic:
      return {RingKind::Cyclotomic, R.parameter(), R.exponent()};
  }
  return {};
}

template <GroundField F, class Src>
std::vector<typename QuotientRing<F>::value_type> gen_embed(const QuotientRing<F>& S,
                                                            const Src& src,
                                                            const LevelPlan& plan) {
  using V = typename QuotientRing<F>::value_type;
  std::vector<V> chunks(plan.chunk_count, S.zero());
  for (std::size_t k = 0; k < plan.chunk_count; ++k) {
    for (std::size_t j = 0; j < S.dim(); ++j) {
      const std::size_t pos =
          plan.layout == Layout::Block ? k * plan.chunk_len + j : k + plan.chunk_count * j;
      if (plan.layout == Layout::Block && j >= plan.chunk_len) break;
      if (pos < src.size()) chunks[k][j] = src[pos];
    }
  }
  return chunks;
}

template <GroundField F>
typename QuotientRing<F>::value_type gen_ring_mul(const QuotientRing<F>& R,
                                                  const typename QuotientRing<F>::value_type& u,
                                                  const typename QuotientRing<F>::value_type& v,
                                                  const GeneralizedStrategy& strategy,
                                                  CostLedger& ledger, std::size_t level);

// Transform, pointwise recursive products and back-transform for one level.
// Returns the chunks of the product in S.
template <GroundField F>
std::vector<typename QuotientRing<F>::value_type> gen_level(
    const QuotientRing<F>& S, std::vector<typename QuotientRing<F>::value_type> a,
    std::vector<typename QuotientRing<F>::value_type> b, const LevelPlan& plan,
    const GeneralizedStrategy& strategy, CostLedger& ledger, std::size_t level) {
  using V = typename QuotientRing<F>::value_type;
  const std::size_t T = plan.transform_order;
  const RingRoot<F> psi(S, plan.psi_step, T);
  const DftPlan dplan = plan_for(psi);
  auto product = [&](const V& x, const V& y) {
    return gen_ring_mul(S, x, y, strategy, ledger, level + 1);
  };
  std::size_t issued = 0;
  std::vector<V> out;

  switch (plan.back) {
    case BackTransform::Inverse: {
      a.resize(T, S.zero());
      b.resize(T, S.zero());
      std::optional<RingRoot<F>> theta;
      if (plan.twist_step != 0) {
        theta.emplace(S, plan.twist_step, plan.twist_order);
        for (std::size_t i = 1; i < T; ++i) {
          a[i] = theta->apply(a[i], i, ledger);
          b[i] = theta->apply(b[i], i, ledger);
        }
      }
      const auto A = dft(a, psi, dplan, ledger);
      const auto B = dft(b, psi, dplan, ledger);
      std::vector<V> C(T);
      for (std::size_t i = 0; i < T; ++i, ++issued) C[i] = product(A[i], B[i]);
      out = dft_inverse(C, psi, dplan, ledger);
      if (theta) {
        for (std::size_t i = 1; i < T; ++i) out[i] = theta->apply(out[i], plan.twist_order - i, ledger);
      }
      break;
    }
    case BackTransform::ThirdsResidue: {
      const std::size_t N2 = T / 3;
      a.resize(T, S.zero());
      b.resize(T, S.zero());
      const auto A = dft(a, psi, dplan, ledger);
      const auto B = dft(b, psi, dplan, ledger);
      std::vector<V> s1(N2);
      std::vector<V> s2(N2);
      for (std::size_t k = 0; k < T; ++k) {
        if (k % 3 == 0) continue;
        (k % 3 == 1 ? s1 : s2)[k / 3] = product(A[k], B[k]);
        ++issued;
      }
      const RingRoot<F> psi3 = psi.power(3);
      const DftPlan plan3 = plan_for(psi3);
      const auto D1 = dft_inverse(s1, psi3, plan3, ledger);
      const auto D2 = dft_inverse(s2, psi3, plan3, ledger);
      const auto& K = S.ground();
      const auto third = K.inv(field_int(K, 3));
      out.assign(2 * N2, S.zero());
      for (std::size_t i = 0; i < N2; ++i) {
        // psi^{shift - mult i}
        auto at = [&](const V& x, std::size_t shift, std::size_t mult) {
          return psi.apply(x, (shift + T - (mult * i) % T) % T, ledger);
        };
        const V d1_neg = at(D1[i], 0, 1);
        const V d1_mid = at(D1[i], N2, 1);
        const V d2_neg = at(D2[i], 0, 2);
        const V d2_top = at(D2[i], 2 * N2, 2);
        const V d1_top = at(D1[i], 2 * N2, 1);
        const V d2_mid = at(D2[i], N2, 2);
        out[i] = S.add(S.sub(d1_neg, d1_mid, ledger), S.sub(d2_neg, d2_top, ledger), ledger);
        out[i + N2] = S.add(S.sub(d1_top, d1_mid, ledger), S.sub(d2_mid, d2_top, ledger), ledger);
      }
      if (!(third == K.one())) {
        for (auto& x : out) x = S.scale(x, third, ledger);
      }
      break;
    }
    case BackTransform::TwoStreamTwist: {
      const RingRoot<F> xi(S, plan.twist_step, plan.twist_order);
      std::vector<V> at(T);
      std::vector<V> bt(T);
      for (std::size_t i = 0; i < T; ++i) {
        at[i] = xi.apply(a[i], i, ledger);
        bt[i] = xi.apply(b[i], i, ledger);
      }
      const auto A1 = dft(a, psi, dplan, ledger);
      const auto B1 = dft(b, psi, dplan, ledger);
      const auto A2 = dft(at, psi, dplan, ledger);
      const auto B2 = dft(bt, psi, dplan, ledger);
      std::vector<V> plain(T);
      std::vector<V> twisted(T);
      for (std::size_t i = 0; i < T; ++i, ++issued) plain[i] = product(A1[i], B1[i]);
      for (std::size_t i = 0; i < T; ++i, ++issued) twisted[i] = product(A2[i], B2[i]);
      const RingRoot<F> psi_inv = psi.inverse();
      plain = dft(plain, psi_inv, dplan, ledger);
      twisted = dft(twisted, psi_inv, dplan, ledger);
      const std::size_t N3 = S.root_order();
      const std::size_t s = plan.twist_order / T;
      const std::size_t zeta = N3 / s;
      const auto primes = nt::prime_divisors(s);
      const std::uint64_t tau = primes.size() == 1 ? primes[0] : 1;
      const auto& K = S.ground();
      const auto kappa = K.inv(field_int(K, tau * T));
      out.resize(T);
      for (std::size_t i = 0; i < T; ++i) {
        const V tw = xi.apply(twisted[i], (plan.twist_order - i) % plan.twist_order, ledger);
        V e = S.add(S.sub(tw, S.mul_by_root_power(plain[i], zeta, ledger), ledger),
                    S.mul_by_root_power(S.sub(plain[i], tw, ledger), 1, ledger), ledger);
        for (std::size_t j = 2; j < s; ++j) {
          if (nt::gcd(j, s) == 1) e = S.sub(e, S.mul_by_root_power(e, j * zeta % N3, ledger), ledger);
        }
        if (!(kappa == K.one())) e = S.scale(e, kappa, ledger);
        out[i] = std::move(e);
      }
      break;
    }
  }
  ledger.record_split({level, plan.outer_dim, S.dim(), T, issued});
  return out;
}

template <GroundField F>
typename QuotientRing<F>::value_type gen_ring_mul(const QuotientRing<F>& R,
                                                  const typename QuotientRing<F>::value_type& u,
                                                  const typename QuotientRing<F>::value_type& v,
                                                  const GeneralizedStrategy& strategy,
                                                  CostLedger& ledger, std::size_t level) {
  LevelScope scope(ledger, level);
  const auto plan = strategy.inner(shape_of(R));
  if (!plan) return R.mul_naive(u, v, ledger);
  const auto S = make_ring(R.ground(), plan->inner);
  auto c = gen_level(S, gen_embed(S, u, *plan), gen_embed(S, v, *plan), *plan, strategy, ledger,
                     level);
  if (plan->unembed == Unembed::Interleave) {
    typename QuotientRing<F>::value_type w(R.dim(), R.ground().zero());
    for (std::size_t i = 0; i < plan->chunk_count; ++i) {
      for (std::size_t j = 0; j < S.dim(); ++j) w[i + plan->chunk_count * j] = c[i][j];
    }
    return w;
  }
  auto w = overlap_add(R.ground(), c, plan->chunk_len, plan->unembed_len, ledger);
  return R.reduce(std::move(w), ledger);
}

}  // namespace detail

/// Product of a and b by the strategy's level plans.
template <GroundField F>
Coeffs<F> mul_generalized(const F& field, Coeffs<F> a, Coeffs<F> b,
                          const GeneralizedStrategy& strategy, CostLedger& ledger) {
  const std::size_t n = detail::pad_inputs(field, a, b);
  const auto plan = strategy.top(n);
  LevelScope scope(ledger, 1);
  if (!plan) return detail::schoolbook(field, a, b, ledger);
  const std::size_t out_len = 2 * n - 1;

  if (plan->inner.kind == RingKind::Ground) {
    const std::size_t T = plan->transform_order;
    auto root = ring_root(field, T);
    if (!root) throw CapabilityError(field.spec() + " has no root of order " + std::to_string(T));
    const DftPlan dplan = plan_for(*root);
    a.resize(T, field.zero());
    b.resize(T, field.zero());
    const auto A = dft(a, *root, dplan, ledger);
    const auto B = dft(b, *root, dplan, ledger);
    Coeffs<F> C(T);
    for (std::size_t i = 0; i < T; ++i) C[i] = field.mul(A[i], B[i], ledger);
    ledger.record_split({1, plan->outer_dim, 1, T, T});
    auto c = dft_inverse(C, *root, dplan, ledger);
    c.resize(out_len);
    return c;
  }

  const auto S = detail::make_ring(field, plan->inner);
  const auto c = detail::gen_level(S, detail::gen_embed(S, a, *plan), detail::gen_embed(S, b, *plan),
                                   *plan, strategy, ledger, 1);
  if (plan->unembed == Unembed::Interleave) {
    Coeffs<F> out(out_len, field.zero());
    for (std::size_t i = 0; i < plan->chunk_count; ++i) {
      for (std::size_t j = 0; j < S.dim(); ++j) {
        const std::size_t pos = i + plan->chunk_count * j;
        if (pos < out_len) out[pos] = c[i][j];
      }
    }
    return out;
  }
  return detail::overlap_add(field, c, plan->chunk_len, out_len, ledger);
}

}  // namespace dftmul

#endif  // DFTMUL_GENERALIZED_HPP_
