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

#ifndef DFTMUL_DFT_HPP_
#define DFTMUL_DFT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "dftmul/cost_ledger.hpp"
#include "dftmul/dft_plan.hpp"
#include "dftmul/errors.hpp"
#include "dftmul/fields.hpp"
#include "dftmul/number_theory.hpp"

// Discrete Fourier transforms over a coefficient ring R, which is either a
// ground field or a quotient ring. A root type provides order(), ring(),
// apply(v, e, ledger) = v * w^e, value(e) as a ring element, power(k) and
// inverse(). The ring provides zero(), add/sub/neg, mul_constant, scale
// and ground().

namespace dftmul {

namespace detail {

template <class Root>
using ring_value_t = typename std::decay_t<decltype(std::declval<Root>().ring())>::value_type;

template <class Root>
std::vector<ring_value_t<Root>> dft_naive(const std::vector<ring_value_t<Root>>& a,
                                          const Root& root, CostLedger& ledger) {
  const auto& R = root.ring();
  const std::size_t n = a.size();
  std::vector<ring_value_t<Root>> out(n);
  if (n == 0) return out;
  const bool even = n % 2 == 0;
  const std::size_t half = n / 2;
  out[0] = a[0];
  for (std::size_t i = 1; i < n; ++i) out[0] = R.add(out[0], a[i], ledger);
  for (std::size_t j = 1; j < n; ++j) {
    auto acc = a[0];
    if (even && j == half) {
      for (std::size_t i = 1; i < n; ++i) {
        acc = i % 2 == 1 ? R.sub(acc, a[i], ledger) : R.add(acc, a[i], ledger);
      }
    } else {
      for (std::size_t i = 1; i < n; ++i) {
        if (even && i == half) {
          acc = j % 2 == 1 ? R.sub(acc, a[i], ledger) : R.add(acc, a[i], ledger);
        } else {
          acc = R.add(acc, root.apply(a[i], i * j % n, ledger), ledger);
        }
      }
    }
    out[j] = std::move(acc);
  }
  return out;
}

}  // namespace detail

template <class Root>
std::vector<detail::ring_value_t<Root>> dft(const std::vector<detail::ring_value_t<Root>>& a,
                                            const Root& root, const DftPlan& plan,
                                            CostLedger& ledger);

namespace detail {

template <class Root>
std::vector<ring_value_t<Root>> dft_cooley_tukey(const std::vector<ring_value_t<Root>>& a,
                                                 const Root& root, const DftPlan& plan,
                                                 CostLedger& ledger) {
  using V = ring_value_t<Root>;
  const std::size_t n1 = plan.n1;
  const std::size_t n2 = plan.n2;
  const Root w1 = root.power(n2);
  const Root w2 = root.power(n1);
  // inner[l][mu]: inner transform of order n1, twiddled by w^{mu l}.
  std::vector<std::vector<V>> inner(n1, std::vector<V>(n2));
  std::vector<V> column(n1);
  for (std::size_t mu = 0; mu < n2; ++mu) {
    for (std::size_t nu = 0; nu < n1; ++nu) column[nu] = a[n2 * nu + mu];
    auto t = dft(column, w1, plan.children[0], ledger);
    for (std::size_t l = 0; l < n1; ++l) {
      inner[l][mu] = (mu > 0 && l > 0) ? root.apply(t[l], mu * l, ledger) : std::move(t[l]);
    }
  }
  std::vector<V> out(n1 * n2);
  for (std::size_t l = 0; l < n1; ++l) {
    auto t = dft(inner[l], w2, plan.children[1], ledger);
    for (std::size_t j = 0; j < n2; ++j) out[n1 * j + l] = std::move(t[j]);
  }
  return out;
}

template <class Root>
std::vector<ring_value_t<Root>> dft_rader(const std::vector<ring_value_t<Root>>& a,
                                          const Root& root, const DftPlan& plan,
                                          CostLedger& ledger) {
  using V = ring_value_t<Root>;
  const auto& R = root.ring();
  const std::size_t p = plan.n;
  const std::size_t m0 = p - 1;
  const std::size_t L = plan.conv_length;
  const std::size_t g = plan.generator;
  const std::size_t g_inv = static_cast<std::size_t>(nt::pow_mod(g, p - 2, p));

  auto rho = ring_root(R, L);
  if (!rho) throw PlanError("coefficient ring lacks a root of order " + std::to_string(L));
  const auto rho_inv = rho->inverse();

  // Kernel constants: DFT_L of the padded W, divided by L. Built on a
  // scratch ledger because they depend only on the transform order.
  std::vector<V> kernel(L, R.zero());
  {
    CostLedger scratch;
    std::size_t gk = 1;
    for (std::size_t k = 0; k < m0; ++k) {
      kernel[k] = root.value(gk);
      if (k >= 1) kernel[L - m0 + k] = root.value(gk);  // W_{m0-d} at L-d
      gk = gk * g % p;
    }
    kernel = dft(kernel, *rho, plan.children[0], scratch);
    const auto& K = R.ground();
    const auto inv_l = K.inv(field_int(K, L));
    for (auto& c : kernel) c = R.scale(c, inv_l, scratch);
  }

  std::vector<V> padded(L, R.zero());
  std::size_t idx = 1;  // g^{-v}
  for (std::size_t v = 0; v < m0; ++v) {
    padded[v] = a[idx];
    idx = idx * g_inv % p;
  }
  auto x = dft(padded, *rho, plan.children[0], ledger);
  for (std::size_t k = 0; k < L; ++k) x[k] = R.mul_constant(x[k], kernel[k], ledger);
  auto conv = dft(x, rho_inv, plan.children[0], ledger);

  std::vector<V> out(p);
  out[0] = a[0];
  for (std::size_t i = 1; i < p; ++i) out[0] = R.add(out[0], a[i], ledger);
  std::size_t gu = 1;
  for (std::size_t u = 0; u < m0; ++u) {
    out[gu] = R.add(a[0], conv[u], ledger);
    gu = gu * g % p;
  }
  return out;
}

}  // namespace detail

/// Forward transform: out[j] = sum_i a[i] w^{ij}. The plan must have been
/// built for root.order().
template <class Root>
std::vector<detail::ring_value_t<Root>> dft(const std::vector<detail::ring_value_t<Root>>& a,
                                            const Root& root, const DftPlan& plan,
                                            CostLedger& ledger) {
  if (a.size() != plan.n || root.order() != plan.n) {
    throw PlanError("DFT input length, root order and plan order must agree");
  }
  switch (plan.kind) {
    case DftKind::Identity:
      return a;
    case DftKind::Naive:
      return detail::dft_naive(a, root, ledger);
    case DftKind::CooleyTukey:
      return detail::dft_cooley_tukey(a, root, plan, ledger);
    case DftKind::Rader:
      return detail::dft_rader(a, root, plan, ledger);
  }
  throw PlanError("unknown DFT plan kind");
}

/// Plan for the order of `root` using the roots its ring provides.
template <class Root>
DftPlan plan_for(const Root& root) {
  const auto& R = root.ring();
  return plan_dft(root.order(), [&R](std::size_t k) { return ring_has_root(R, k); });
}

template <class Root>
std::vector<detail::ring_value_t<Root>> dft(const std::vector<detail::ring_value_t<Root>>& a,
                                            const Root& root, CostLedger& ledger) {
  return dft(a, root, plan_for(root), ledger);
}

/// Inverse transform including the 1/n scaling (skipped when 1/n = 1).
/// Throws DomainError when the characteristic divides n.
template <class Root>
std::vector<detail::ring_value_t<Root>> dft_inverse(
    const std::vector<detail::ring_value_t<Root>>& a, const Root& root, const DftPlan& plan,
    CostLedger& ledger) {
  const auto& R = root.ring();
  const auto& K = R.ground();
  const std::size_t n = plan.n;
  if (K.characteristic() != 0 && n % K.characteristic() == 0) {
    throw DomainError("characteristic divides the transform order");
  }
  auto out = dft(a, root.inverse(), plan, ledger);
  const auto inv_n = K.inv(field_int(K, n));
  if (!(inv_n == K.one())) {
    for (auto& v : out) v = R.scale(v, inv_n, ledger);
  }
  return out;
}

template <class Root>
std::vector<detail::ring_value_t<Root>> dft_inverse(
    const std::vector<detail::ring_value_t<Root>>& a, const Root& root, CostLedger& ledger) {
  return dft_inverse(a, root, plan_for(root), ledger);
}

}  // namespace dftmul

#endif  // DFTMUL_DFT_HPP_
