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

#include "dftmul/number_theory.hpp"

#include "dftmul/errors.hpp"

namespace dftmul::nt {

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

u64 totient(u64 n) {
  if (n == 0) return 0;
  u64 result = n;
  for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm(u64 a, u64 b) { return a / gcd(a, b) * b; }

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 multiplicative_order(u64 a, u64 n) {
  if (n == 0 || gcd(a % n, n) != 1) {
    if (n == 1) return 1;
    throw DomainError("multiplicative_order: argument not a unit");
  }
  if (n == 1) return 1;
  u64 order = totient(n);
  for (u64 p : prime_divisors(order)) {
    while (order % p == 0 && pow_mod(a, order / p, n) == 1) order /= p;
  }
  return order;
}

u64 smallest_primitive_root(u64 p) {
  if (!is_prime(p)) throw DomainError("smallest_primitive_root: modulus not prime");
  if (p == 2) return 1;
  for (u64 g = 2; g < p; ++g) {
    if (multiplicative_order(g, p) == p - 1) return g;
  }
  throw DomainError("smallest_primitive_root: none found");
}

std::optional<u64> checked_pow(u64 base, unsigned exp) {
  u64 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

unsigned ceil_log(u64 base, u64 x) {
  if (base < 2 || x < 1) throw DomainError("ceil_log: bad arguments");
  unsigned e = 0;
  unsigned __int128 v = 1;
  while (v < x) {
    v *= base;
    ++e;
  }
  return e;
}

std::vector<std::int64_t> cyclotomic(u64 n) {
  if (n < 1) throw DomainError("cyclotomic: n must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d; all divisions exact.
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (u64 d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto den = cyclotomic(d);  // monic
    const std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const std::int64_t c = num[i];
      quot[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

std::vector<std::int64_t> cyclotomic_power(u64 s, unsigned nu) {
  if (s < 2 || nu < 1) throw DomainError("cyclotomic_power: need s >= 2 and nu >= 1");
  const auto base = cyclotomic(s);
  const auto stretch = checked_pow(s, nu - 1);
  if (!stretch) throw DomainError("cyclotomic_power: index too large");
  std::vector<std::int64_t> out((base.size() - 1) * *stretch + 1, 0);
  for (std::size_t i = 0; i < base.size(); ++i) out[i * *stretch] = base[i];
  return out;
}

}  // namespace dftmul::nt
