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

#ifndef DFTMUL_POLYMUL_HPP_
#define DFTMUL_POLYMUL_HPP_

#include <cstddef>
#include <vector>

#include "dftmul/algo_params.hpp"
#include "dftmul/cost_ledger.hpp"
#include "dftmul/dft.hpp"
#include "dftmul/errors.hpp"
#include "dftmul/fields.hpp"
#include "dftmul/number_theory.hpp"
#include "dftmul/quotient_ring.hpp"

// Polynomial multiplication engines. Inputs are dense coefficient vectors
// (index i holds the coefficient of x^i) of a common degree bound n; the
// shorter one is zero-padded. Every engine returns the 2n - 1 product
// coefficients and charges the ledger from level 1 downwards, one level per
// recursion step.

namespace dftmul {

template <GroundField F>
using Coeffs = std::vector<typename F::value_type>;

namespace detail {

template <GroundField F>
std::size_t pad_inputs(const F& field, Coeffs<F>& a, Coeffs<F>& b) {
  const std::size_t n = std::max(a.size(), b.size());
  if (n == 0) throw DomainError("cannot multiply empty coefficient vectors");
  a.resize(n, field.zero());
  b.resize(n, field.zero());
  return n;
}

// c_l = sum_{i+j=l} a_i b_j: n_a n_b products, first summand of each
// coefficient copied.
template <GroundField F>
Coeffs<F> schoolbook(const F& field, const Coeffs<F>& a, const Coeffs<F>& b,
                     CostLedger& ledger) {
  Coeffs<F> c(a.size() + b.size() - 1, field.zero());
  std::vector<char> filled(c.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto p = field.mul(a[i], b[j], ledger);
      if (filled[i + j]) {
        c[i + j] = field.add(c[i + j], p, ledger);
      } else {
        c[i + j] = std::move(p);
        filled[i + j] = 1;
      }
    }
  }
  return c;
}

// Sum of chunk_k(x) * x^{k stride} restricted to positions < out_len. The
// first contribution to a position is a copy, every further one an add.
template <GroundField F>
Coeffs<F> overlap_add(const F& field,
                      const std::vector<typename QuotientRing<F>::value_type>& chunks,
                      std::size_t stride, std::size_t out_len, CostLedger& ledger) {
  Coeffs<F> out(out_len, field.zero());
  std::vector<char> filled(out_len, 0);
  for (std::size_t k = 0; k < chunks.size(); ++k) {
    for (std::size_t j = 0; j < chunks[k].size(); ++j) {
      const std::size_t pos = k * stride + j;
      if (pos >= out_len) break;
      if (filled[pos]) {
        out[pos] = field.add(out[pos], chunks[k][j], ledger);
      } else {
        out[pos] = chunks[k][j];
        filled[pos] = 1;
      }
    }
  }
  return out;
}

// count blocks of `len` consecutive coefficients, each placed in a ring
// element of dimension `dim` (zero above len).
template <GroundField F, class Src>
std::vector<typename QuotientRing<F>::value_type> block_chunks(const QuotientRing<F>& ring,
                                                               const Src& src, std::size_t len,
                                                               std::size_t count) {
  std::vector<typename QuotientRing<F>::value_type> chunks(count, ring.zero());
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t j = 0; j < len && k * len + j < src.size(); ++j) {
      chunks[k][j] = src[k * len + j];
    }
  }
  return chunks;
}

// Element i holds src[i + stride j] as its coefficient j.
template <GroundField F, class Src>
std::vector<typename QuotientRing<F>::value_type> strided_chunks(const QuotientRing<F>& ring,
                                                                 const Src& src,
                                                                 std::size_t stride) {
  std::vector<typename QuotientRing<F>::value_type> chunks(stride, ring.zero());
  for (std::size_t i = 0; i < stride; ++i) {
    for (std::size_t j = 0; j < ring.dim() && i + stride * j < src.size(); ++j) {
      chunks[i][j] = src[i + stride * j];
    }
  }
  return chunks;
}

template <GroundField F>
bool is_power_of(std::size_t base, std::size_t x) {
  if (x < 1) return false;
  while (x % base == 0) x /= base;
  return x == 1;
}

// ---- Schonhage-Strassen, negacyclic recursion in A_M ----

template <GroundField F>
typename QuotientRing<F>::value_type ss_ring_mul(const QuotientRing<F>& R,
                                                 const typename QuotientRing<F>::value_type& u,
                                                 const typename QuotientRing<F>::value_type& v,
                                                 CostLedger& ledger, std::size_t level) {
  LevelScope scope(ledger, level);
  const std::size_t M = R.dim();
  if (M <= kRingCutoff || !is_power_of<F>(2, M)) return R.mul_naive(u, v, ledger);
  const auto [m, t] = fermat_split(M);
  const auto S = QuotientRing<F>::fermat(R.ground(), 2 * m);
  const RingRoot<F> theta(S, 2 * m / t, 2 * t);
  const RingRoot<F> psi = theta.power(2);
  const DftPlan plan = plan_for(psi);

  auto ua = block_chunks(S, u, m, t);
  auto vb = block_chunks(S, v, m, t);
  for (std::size_t i = 1; i < t; ++i) {
    ua[i] = theta.apply(ua[i], i, ledger);
    vb[i] = theta.apply(vb[i], i, ledger);
  }
  auto A = dft(ua, psi, plan, ledger);
  auto B = dft(vb, psi, plan, ledger);
  std::vector<typename QuotientRing<F>::value_type> C(t);
  for (std::size_t i = 0; i < t; ++i) C[i] = ss_ring_mul(S, A[i], B[i], ledger, level + 1);
  ledger.record_split({level, M, 2 * m, t, t});
  auto c = dft_inverse(C, psi, plan, ledger);
  for (std::size_t i = 1; i < t; ++i) c[i] = theta.apply(c[i], 2 * t - i, ledger);
  auto w = overlap_add(R.ground(), c, m, M + m, ledger);
  return R.reduce(std::move(w), ledger);
}

// ---- characteristic 2: products only off the multiples of 3 ----

template <GroundField F>
typename QuotientRing<F>::value_type char2_ring_mul(
    const QuotientRing<F>& R, const typename QuotientRing<F>::value_type& u,
    const typename QuotientRing<F>::value_type& v, CostLedger& ledger, std::size_t level);

// Given 2 N2 chunks over S = B_{N1}, returns the 2 N2 coefficients of their
// product modulo X^{2N2} + X^{N2} + 1.
template <GroundField F>
std::vector<typename QuotientRing<F>::value_type> char2_core(
    const QuotientRing<F>& S, std::vector<typename QuotientRing<F>::value_type> a,
    std::vector<typename QuotientRing<F>::value_type> b, std::size_t N1, std::size_t N2,
    std::size_t outer_dim, CostLedger& ledger, std::size_t level) {
  using V = typename QuotientRing<F>::value_type;
  const std::size_t order = 3 * N2;
  const RingRoot<F> psi(S, N1 / N2, order);
  const DftPlan plan = plan_for(psi);
  a.resize(order, S.zero());
  b.resize(order, S.zero());
  auto A = dft(a, psi, plan, ledger);
  auto B = dft(b, psi, plan, ledger);
  std::vector<V> P(order);
  std::size_t products = 0;
  for (std::size_t k = 0; k < order; ++k) {
    if (k % 3 == 0) continue;
    P[k] = char2_ring_mul(S, A[k], B[k], ledger, level + 1);
    ++products;
  }
  ledger.record_split({level, outer_dim, S.dim(), order, products});

  const RingRoot<F> psi3 = psi.power(3);
  const DftPlan plan3 = plan_for(psi3);
  std::vector<V> s1(N2);
  std::vector<V> s2(N2);
  for (std::size_t nu = 0; nu < N2; ++nu) {
    s1[nu] = std::move(P[3 * nu + 1]);
    s2[nu] = std::move(P[3 * nu + 2]);
  }
  const auto D1 = dft_inverse(s1, psi3, plan3, ledger);
  const auto D2 = dft_inverse(s2, psi3, plan3, ledger);

  const auto& K = S.ground();
  const auto third = K.inv(field_int(K, 3));
  const bool scale = !(third == K.one());
  std::vector<V> out(2 * N2);
  for (std::size_t i = 0; i < N2; ++i) {
    auto e = [&](std::size_t shift, std::size_t mult) {
      return (shift + order - (mult * i) % order) % order;  // shift - mult*i
    };
    const V t1 = psi.apply(D1[i], e(0, 1), ledger);
    const V t2 = psi.apply(D1[i], e(N2, 1), ledger);
    const V t3 = psi.apply(D2[i], e(0, 2), ledger);
    const V t4 = psi.apply(D2[i], e(2 * N2, 2), ledger);
    const V t5 = psi.apply(D1[i], e(2 * N2, 1), ledger);
    const V t6 = psi.apply(D2[i], e(N2, 2), ledger);
    V lo = S.add(S.sub(t1, t2, ledger), S.sub(t3, t4, ledger), ledger);
    V hi = S.add(S.sub(t5, t2, ledger), S.sub(t6, t4, ledger), ledger);
    if (scale) {
      lo = S.scale(lo, third, ledger);
      hi = S.scale(hi, third, ledger);
    }
    out[i] = std::move(lo);
    out[i + N2] = std::move(hi);
  }
  return out;
}

template <GroundField F>
typename QuotientRing<F>::value_type char2_ring_mul(
    const QuotientRing<F>& R, const typename QuotientRing<F>::value_type& u,
    const typename QuotientRing<F>::value_type& v, CostLedger& ledger, std::size_t level) {
  LevelScope scope(ledger, level);
  const std::size_t M = R.parameter();
  if (R.dim() <= kRingCutoff || !is_power_of<F>(3, M)) return R.mul_naive(u, v, ledger);
  const auto [N1, N2] = trinomial_split(M);
  const auto S = QuotientRing<F>::trinomial(R.ground(), N1);
  auto c = char2_core(S, block_chunks(S, u, N1, 2 * N2), block_chunks(S, v, N1, 2 * N2), N1, N2,
                      R.dim(), ledger, level);
  auto w = overlap_add(R.ground(), c, N1, 2 * M + N1, ledger);
  return R.reduce(std::move(w), ledger);
}

// ---- Cantor-Kaltofen over C_{s^mu} ----

template <GroundField F>
typename QuotientRing<F>::value_type ck_ring_mul(const QuotientRing<F>& R,
                                                 const typename QuotientRing<F>::value_type& u,
                                                 const typename QuotientRing<F>::value_type& v,
                                                 CostLedger& ledger, std::size_t level);

// Product in S[z]/(z^N2 - y) for S = C_{N3}, from the residues modulo
// z^N2 - 1 and z^N2 - zeta, zeta = y^{N3/s}.
template <GroundField F>
std::vector<typename QuotientRing<F>::value_type> ck_core(
    const QuotientRing<F>& S, const std::vector<typename QuotientRing<F>::value_type>& a,
    const std::vector<typename QuotientRing<F>::value_type>& b, std::size_t s, std::size_t N2,
    std::size_t outer_dim, CostLedger& ledger, std::size_t level) {
  using V = typename QuotientRing<F>::value_type;
  const std::size_t N3 = S.root_order();
  const RingRoot<F> psi(S, N3 / N2, N2);
  const RingRoot<F> psi_inv = psi.inverse();
  const RingRoot<F> xi(S, N3 / (s * N2), s * N2);
  const DftPlan plan = plan_for(psi);

  std::vector<V> at(N2);
  std::vector<V> bt(N2);
  for (std::size_t i = 0; i < N2; ++i) {
    at[i] = xi.apply(a[i], i, ledger);
    bt[i] = xi.apply(b[i], i, ledger);
  }
  const auto A1 = dft(a, psi, plan, ledger);
  const auto B1 = dft(b, psi, plan, ledger);
  const auto A2 = dft(at, psi, plan, ledger);
  const auto B2 = dft(bt, psi, plan, ledger);
  std::vector<V> P(N2);
  std::vector<V> T(N2);
  for (std::size_t i = 0; i < N2; ++i) P[i] = ck_ring_mul(S, A1[i], B1[i], ledger, level + 1);
  for (std::size_t i = 0; i < N2; ++i) T[i] = ck_ring_mul(S, A2[i], B2[i], ledger, level + 1);
  ledger.record_split({level, outer_dim, S.dim(), N2, 2 * N2});
  P = dft(P, psi_inv, plan, ledger);
  T = dft(T, psi_inv, plan, ledger);

  const auto& K = S.ground();
  const std::uint64_t tau = nt::prime_divisors(s).size() == 1 ? nt::prime_divisors(s)[0] : 1;
  const auto kappa = K.inv(field_int(K, tau * N2));
  const bool scale = !(kappa == K.one());
  const std::size_t zeta = N3 / s;
  std::vector<V> out(N2);
  for (std::size_t i = 0; i < N2; ++i) {
    const V t = xi.apply(T[i], (s * N2 - i) % (s * N2), ledger);
    const V low = S.sub(t, S.mul_by_root_power(P[i], zeta, ledger), ledger);
    const V high = S.mul_by_root_power(S.sub(P[i], t, ledger), 1, ledger);
    V e = S.add(low, high, ledger);
    for (std::size_t j = 2; j < s; ++j) {
      if (nt::gcd(j, s) != 1) continue;
      e = S.sub(e, S.mul_by_root_power(e, (j * zeta) % N3, ledger), ledger);
    }
    if (scale) e = S.scale(e, kappa, ledger);
    out[i] = std::move(e);
  }
  return out;
}

template <GroundField F>
typename QuotientRing<F>::value_type ck_ring_mul(const QuotientRing<F>& R,
                                                 const typename QuotientRing<F>::value_type& u,
                                                 const typename QuotientRing<F>::value_type& v,
                                                 CostLedger& ledger, std::size_t level) {
  LevelScope scope(ledger, level);
  const std::size_t s = R.parameter();
  const auto split = cyclotomic_split(s, R.exponent());
  if (R.family() != RingFamily::Cyclotomic || split.N2 < 2 || R.dim() <= kRingCutoff) {
    return R.mul_naive(u, v, ledger);
  }
  const auto S = QuotientRing<F>::cyclotomic(R.ground(), s, split.inner_exponent);
  const auto c = ck_core(S, strided_chunks(S, u, split.N2), strided_chunks(S, v, split.N2), s,
                         split.N2, R.dim(), ledger, level);
  typename QuotientRing<F>::value_type w(R.dim());
  for (std::size_t i = 0; i < split.N2; ++i) {
    for (std::size_t j = 0; j < S.dim(); ++j) w[i + split.N2 * j] = c[i][j];
  }
  return w;
}

}  // namespace detail

/// Schoolbook product: n^2 nonscalar products and (n - 1)^2 additions.
template <GroundField F>
Coeffs<F> mul_naive(const F& field, Coeffs<F> a, Coeffs<F> b, CostLedger& ledger) {
  detail::pad_inputs(field, a, b);
  LevelScope scope(ledger, 1);
  return detail::schoolbook(field, a, b, ledger);
}

/// Evaluation at the s^nu-th roots of unity of the field itself, s^nu the
/// least power >= 2n - 1. s = 0 tries 2, then 3. Exactly s^nu nonscalar
/// products. Throws CapabilityError when the root does not exist.
template <GroundField F>
Coeffs<F> mul_direct_dft(const F& field, Coeffs<F> a, Coeffs<F> b, CostLedger& ledger,
                         std::size_t s = 0) {
  const std::size_t n = detail::pad_inputs(field, a, b);
  if (s == 0) {
    s = field.has_root(params_direct(n, 2).N) ? 2 : 3;
  }
  const AlgoParams p = params_direct(n, s);
  auto root = ring_root(field, p.N);
  if (!root) {
    throw CapabilityError(field.spec() + " has no root of unity of order " + std::to_string(p.N));
  }
  LevelScope scope(ledger, 1);
  const DftPlan plan = plan_for(*root);
  a.resize(p.N, field.zero());
  b.resize(p.N, field.zero());
  const auto A = dft(a, *root, plan, ledger);
  const auto B = dft(b, *root, plan, ledger);
  Coeffs<F> C(p.N);
  for (std::size_t i = 0; i < p.N; ++i) C[i] = field.mul(A[i], B[i], ledger);
  ledger.record_split({1, p.N, 1, p.N, p.N});
  auto c = dft_inverse(C, *root, plan, ledger);
  c.resize(2 * n - 1);
  return c;
}

/// Schonhage-Strassen over A_N = k[x]/(x^N + 1). Characteristic != 2;
/// n < 8 falls back to the schoolbook product.
template <GroundField F>
Coeffs<F> mul_schonhage_strassen(const F& field, Coeffs<F> a, Coeffs<F> b, CostLedger& ledger) {
  if (field.characteristic() == 2) {
    throw CapabilityError("Schonhage-Strassen needs characteristic != 2");
  }
  const std::size_t n = detail::pad_inputs(field, a, b);
  LevelScope scope(ledger, 1);
  if (n < kCutoff) return detail::schoolbook(field, a, b, ledger);
  const AlgoParams p = params_schonhage(n);
  const auto R = QuotientRing<F>::fermat(field, p.N1);
  const RingRoot<F> psi(R, 2 * p.N1 / p.N2, p.N2);
  const DftPlan plan = plan_for(psi);
  const std::size_t chunk = p.N1 / 2;
  const auto A = dft(detail::block_chunks(R, a, chunk, p.N2), psi, plan, ledger);
  const auto B = dft(detail::block_chunks(R, b, chunk, p.N2), psi, plan, ledger);
  std::vector<typename QuotientRing<F>::value_type> C(p.N2);
  for (std::size_t i = 0; i < p.N2; ++i) C[i] = detail::ss_ring_mul(R, A[i], B[i], ledger, 2);
  ledger.record_split({1, p.N, p.N1, p.N2, p.N2});
  const auto c = dft_inverse(C, psi, plan, ledger);
  return detail::overlap_add(field, c, chunk, 2 * n - 1, ledger);
}

/// Schonhage's variant over B_N = k[x]/(x^{2N} + x^N + 1), characteristic
/// 2. Each level issues 2 N2 of the 3 N2 possible products.
template <GroundField F>
Coeffs<F> mul_schonhage_char2(const F& field, Coeffs<F> a, Coeffs<F> b, CostLedger& ledger) {
  if (field.characteristic() != 2) {
    throw CapabilityError("the ternary variant needs characteristic 2");
  }
  const std::size_t n = detail::pad_inputs(field, a, b);
  LevelScope scope(ledger, 1);
  if (n < kCutoff) return detail::schoolbook(field, a, b, ledger);
  const AlgoParams p = params_char2(n);
  const auto S = QuotientRing<F>::trinomial(field, p.N1);
  const auto c = detail::char2_core(S, detail::block_chunks(S, a, p.N1, 2 * p.N2),
                                    detail::block_chunks(S, b, p.N1, 2 * p.N2), p.N1, p.N2,
                                    2 * p.N, ledger, 1);
  return detail::overlap_add(field, c, p.N1, 2 * n - 1, ledger);
}

/// Default base of the Cantor-Kaltofen engine: 3 in characteristic 2, else 2.
template <GroundField F>
std::size_t default_ck_base(const F& field) {
  return field.characteristic() == 2 ? 3 : 2;
}

/// Cantor-Kaltofen over C_N = k[x]/Phi_{s^nu}. s = 0 picks the default
/// base. Throws DomainError when the characteristic divides s; n < max(8,
/// s^3) falls back to the schoolbook product.
template <GroundField F>
Coeffs<F> mul_cantor_kaltofen(const F& field, Coeffs<F> a, Coeffs<F> b, CostLedger& ledger,
                              std::size_t s = 0) {
  if (s == 0) s = default_ck_base(field);
  const std::uint64_t p_char = field.characteristic();
  if (s < 2 || (p_char != 0 && s % p_char == 0)) {
    throw DomainError("Cantor-Kaltofen needs s >= 2 prime to the characteristic");
  }
  const std::size_t n = detail::pad_inputs(field, a, b);
  LevelScope scope(ledger, 1);
  if (n < std::max<std::size_t>(kCutoff, s * s * s)) return detail::schoolbook(field, a, b, ledger);
  const AlgoParams p = params_cantor_kaltofen(n, s);
  const auto split = cyclotomic_split(s, p.nu);
  const auto S = QuotientRing<F>::cyclotomic(field, s, split.inner_exponent);
  const auto c = detail::ck_core(S, detail::strided_chunks(S, a, p.N2),
                                 detail::strided_chunks(S, b, p.N2), s, p.N2, p.N, ledger, 1);
  Coeffs<F> out(2 * n - 1, field.zero());
  for (std::size_t i = 0; i < p.N2; ++i) {
    for (std::size_t j = 0; j < S.dim(); ++j) {
      const std::size_t pos = i + p.N2 * j;
      if (pos < out.size()) out[pos] = c[i][j];
    }
  }
  return out;
}

/// General product of two ring elements by the engine matching the ring
/// family (or schoolbook for AlgoTag::Naive), charged from `level` down.
template <GroundField F>
typename QuotientRing<F>::value_type ring_mul_full(const QuotientRing<F>& R,
                                                   const typename QuotientRing<F>::value_type& u,
                                                   const typename QuotientRing<F>::value_type& v,
                                                   AlgoTag engine, CostLedger& ledger,
                                                   std::size_t level = 1) {
  if (engine != AlgoTag::Naive) {
    switch (R.family()) {
      case RingFamily::Fermat:
        return detail::ss_ring_mul(R, u, v, ledger, level);
      case RingFamily::Trinomial:
        return detail::char2_ring_mul(R, u, v, ledger, level);
      case RingFamily::Cyclotomic:
        return detail::ck_ring_mul(R, u, v, ledger, level);
    }
  }
  LevelScope scope(ledger, level);
  return R.mul_naive(u, v, ledger);
}

}  // namespace dftmul

#endif  // DFTMUL_POLYMUL_HPP_
