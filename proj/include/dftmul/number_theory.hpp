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

#ifndef DFTMUL_NUMBER_THEORY_HPP_
#define DFTMUL_NUMBER_THEORY_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Integer helpers for desk-scale arguments. Everything here uses trial
// division; inputs are expected to stay far below 2^40.
namespace dftmul::nt {

using u64 = std::uint64_t;

bool is_prime(u64 n);

/// Prime factorization as (prime, exponent) pairs in increasing order.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

/// Distinct prime divisors in increasing order.
std::vector<u64> prime_divisors(u64 n);

/// Euler's totient.
u64 totient(u64 n);

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

/// Least d >= 1 with a^d = 1 (mod n); requires gcd(a, n) = 1 and n >= 1.
u64 multiplicative_order(u64 a, u64 n);

/// Smallest generator of (Z/p)^* for prime p.
u64 smallest_primitive_root(u64 p);

/// Exact base^exp; nullopt on 64-bit overflow.
std::optional<u64> checked_pow(u64 base, unsigned exp);

/// Least e with base^e >= x (x >= 1, base >= 2).
unsigned ceil_log(u64 base, u64 x);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree
/// first (n >= 1).
std::vector<std::int64_t> cyclotomic(u64 n);

/// Phi_{s^nu}(x) = Phi_s(x^{s^{nu-1}}) for s >= 2, nu >= 1.
std::vector<std::int64_t> cyclotomic_power(u64 s, unsigned nu);

/// Least e with 2^e >= x.
inline unsigned ceil_log2(u64 x) { return ceil_log(2, x); }

}  // namespace dftmul::nt

#endif  // DFTMUL_NUMBER_THEORY_HPP_
