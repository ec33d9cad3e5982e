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

#include "dftmul/field_meta.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dftmul/errors.hpp"
#include "dftmul/number_theory.hpp"

namespace dftmul {

namespace {

using u64 = std::uint64_t;

double ratio_nlogn(u64 ops, u64 n) {
  if (n < 2) return 0.0;
  return static_cast<double>(ops) / (static_cast<double>(n) * std::log2(static_cast<double>(n)));
}

}  // namespace

FieldInfo field_info(const AnyField& f) {
  return std::visit([](const auto& g) { return field_info(g); }, f);
}

u64 totient(u64 n) { return nt::totient(n); }

std::vector<std::int64_t> cyclotomic(u64 s, unsigned nu) { return nt::cyclotomic_power(s, nu); }

u64 degree_function(const FieldInfo& field, u64 n) {
  if (n < 1) throw DomainError("degree function needs n >= 1");
  if (field.characteristic != 0 && n % field.characteristic == 0) {
    throw DomainError("characteristic divides " + std::to_string(n) + ": no primitive root");
  }
  if (field.size == 0) return nt::totient(n);
  if (n == 1) return 1;
  return nt::multiplicative_order(field.size % n, n);
}

bool extension_has_root(const FieldInfo& field, u64 n, u64 m) {
  if (m < 1) return false;
  if (field.size == 0) return std::lcm<u64>(2, n) % m == 0;
  if (field.characteristic != 0 && m % field.characteristic == 0) return false;
  if (m == 1) return true;
  const u64 d = degree_function(field, n);
  return nt::pow_mod(field.size % m, d, m) == 1 % m;
}

SuitabilityCertificate certify_suitable(const RootAvailable& available, u64 n, double c) {
  if (n < 1 || !available(n)) {
    throw DomainError("no root of unity of order " + std::to_string(n) + " for a DFT");
  }
  SuitabilityCertificate cert;
  cert.n = n;
  cert.c = c;
  cert.plan = plan_dft(n, available);
  cert.constant = ratio_nlogn(cert.plan.predicted_ops, n);
  cert.suitable = n == 1 || static_cast<double>(cert.plan.predicted_ops) <=
                                c * static_cast<double>(n) * std::log2(static_cast<double>(n));
  return cert;
}

SuitabilityCertificate certify_suitable(const FieldInfo& field, u64 n, double c) {
  return certify_suitable([&](std::size_t m) { return extension_has_root(field, n, m); }, n, c);
}

u64 f_vee(const IntFunction& f, u64 n) {
  for (u64 i = 1; i <= std::max<u64>(n, 1); ++i) {
    const u64 v = f(i);
    if (i * v >= n) return v;
  }
  throw DomainError("f_vee: no i <= n with i f(i) >= n");
}

u64 f_star(const IntFunction& f, u64 n) {
  u64 x = n;
  for (u64 i = 0; i <= n + 1; ++i) {
    const u64 next = f(x);
    if (next == x) return i;
    x = next;
  }
  throw DomainError("f_star: no fixpoint within n + 1 iterations");
}

namespace {

void finish(OrderSequenceCandidate& cand) {
  cand.increasing = true;
  cand.divisibility = true;
  cand.sparseness = 0.0;
  for (std::size_t i = 1; i < cand.entries.size(); ++i) {
    const u64 prev = cand.entries[i - 1].n;
    const u64 cur = cand.entries[i].n;
    cand.increasing = cand.increasing && cur > prev;
    cand.divisibility = cand.divisibility && cur % prev == 0;
    cand.sparseness = std::max(cand.sparseness, static_cast<double>(cur) / static_cast<double>(prev));
  }
  cand.f_bound_holds = true;
  if (cand.f_bound_ratio > 0.0) {
    for (const auto& e : cand.entries) {
      if (e.n_second < 2) continue;
      cand.f_bound_holds = cand.f_bound_holds &&
                           static_cast<double>(e.f_value) <=
                               cand.f_bound_ratio * static_cast<double>(e.n_second) + 1e-9;
    }
  }
}

OrderEntry make_entry(const FieldInfo& field, u64 n_prime, u64 n_second,
                      const RootAvailable& roots) {
  OrderEntry e;
  e.n = n_prime * n_second;
  e.n_prime = n_prime;
  e.n_second = n_second;
  if (field.characteristic == 0 || n_second % field.characteristic != 0) {
    e.f_value = degree_function(field, n_second);
  }
  e.constant = ratio_nlogn(plan_dft(n_second, roots).predicted_ops, n_second);
  return e;
}

}  // namespace

std::vector<OrderSequenceCandidate> propose_order_sequences(const FieldInfo& field, u64 n_max) {
  std::vector<OrderSequenceCandidate> out;
  constexpr u64 kLimit = u64{1} << 40;

  if (field.size != 0) {
    OrderSequenceCandidate cand;
    cand.family = "2^i (q^(2^i) - 1)";
    for (unsigned i = 0; i < 6; ++i) {
      const u64 ext = u64{1} << i;
      const auto qe = nt::checked_pow(field.size, static_cast<unsigned>(ext));
      if (!qe || *qe > kLimit) break;
      const u64 order = *qe - 1;
      // Every divisor of q^ext - 1 is a root order of F_{q^ext}.
      auto e = make_entry(field, ext, order, [order](std::size_t m) { return order % m == 0; });
      cand.entries.push_back(e);
      if (e.n > n_max) break;
    }
    finish(cand);
    out.push_back(std::move(cand));
  }

  if (field.characteristic != 2) {
    OrderSequenceCandidate cand;
    cand.family = "2^i";
    cand.f_bound_ratio = 0.5;
    for (unsigned i = 1; i < 40; ++i) {
      const u64 n_prime = u64{1} << ((i - 1 + 1) / 2);
      const u64 n_second = u64{1} << ((i - 1) / 2 + 1);
      cand.entries.push_back(make_entry(field, n_prime, n_second,
                                        [n_second](std::size_t m) { return n_second % m == 0; }));
      if (cand.entries.back().n > n_max) break;
    }
    finish(cand);
    out.push_back(std::move(cand));
  }

  if (field.characteristic != 3) {
    OrderSequenceCandidate cand;
    cand.family = "2 3^i";
    cand.f_bound_ratio = 2.0 / 3.0;
    for (unsigned i = 1; i < 25; ++i) {
      const u64 n_prime = 2 * *nt::checked_pow(3, (i + 1) / 2);
      const u64 n_second = *nt::checked_pow(3, i / 2);
      cand.entries.push_back(make_entry(field, n_prime, n_second,
                                        [n_second](std::size_t m) { return n_second % m == 0; }));
      if (cand.entries.back().n > n_max) break;
    }
    finish(cand);
    out.push_back(std::move(cand));
  }
  return out;
}

}  // namespace dftmul
