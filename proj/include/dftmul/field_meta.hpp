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

#ifndef DFTMUL_FIELD_META_HPP_
#define DFTMUL_FIELD_META_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dftmul/dft_plan.hpp"
#include "dftmul/fields.hpp"

namespace dftmul {

/// What the metadata functions need to know about a ground field.
/// `size` is 0 for the rationals.
struct FieldInfo {
  std::uint64_t characteristic = 0;
  std::uint64_t size = 0;
  std::string spec = "q";
};

inline FieldInfo field_info(const PrimeField& f) { return {f.characteristic(), f.size(), f.spec()}; }
inline FieldInfo field_info(const ExtensionField& f) {
  return {f.characteristic(), f.size(), f.spec()};
}
inline FieldInfo field_info(const RationalField&) { return {}; }
FieldInfo field_info(const AnyField& f);

std::uint64_t totient(std::uint64_t n);

/// Phi_{s^nu} with integer coefficients, lowest degree first.
std::vector<std::int64_t> cyclotomic(std::uint64_t s, unsigned nu);

/// [k(w_n) : k]: phi(n) over the rationals, the order of q modulo n over
/// F_q. Throws DomainError when the characteristic divides n.
std::uint64_t degree_function(const FieldInfo& field, std::uint64_t n);

/// Whether k(w_n) contains a primitive m-th root of unity.
bool extension_has_root(const FieldInfo& field, std::uint64_t n, std::uint64_t m);

struct SuitabilityCertificate {
  bool suitable = false;
  std::uint64_t n = 0;
  double c = 0.0;
  /// predicted_ops / (n log2 n), 0 for n = 1.
  double constant = 0.0;
  DftPlan plan;
};

/// Certifies D(n) <= c n log2 n for the cheapest plan over a ring with the
/// given roots. Throws DomainError when the ring has no root of order n.
SuitabilityCertificate certify_suitable(const RootAvailable& available, std::uint64_t n, double c);

/// Same, over k(w_n).
SuitabilityCertificate certify_suitable(const FieldInfo& field, std::uint64_t n, double c);

using IntFunction = std::function<std::uint64_t(std::uint64_t)>;

/// f(i) for the least i >= 1 with i f(i) >= n (f nondecreasing).
std::uint64_t f_vee(const IntFunction& f, std::uint64_t n);

/// Least i with f^(i)(n) = f^(i+1)(n). Throws DomainError if no fixpoint
/// is reached within n + 1 steps.
std::uint64_t f_star(const IntFunction& f, std::uint64_t n);

struct OrderEntry {
  std::uint64_t n = 0;
  std::uint64_t n_prime = 0;   // extension degree / ring dimension
  std::uint64_t n_second = 0;  // DFT order
  std::uint64_t f_value = 0;   // f_k(n_second), 0 when undefined
  double constant = 0.0;       // predicted D(n_second) / (n_second log2 n_second)
};

struct OrderSequenceCandidate {
  std::string family;
  std::vector<OrderEntry> entries;
  bool increasing = false;
  bool divisibility = false;
  double sparseness = 0.0;  // max n_{i+1} / n_i
  /// Upper bound the family promises for f_k(n_second) / n_second, or 0.
  double f_bound_ratio = 0.0;
  bool f_bound_holds = false;
};

/// Candidate order sequences up to n_max: the 2^i (q^{2^i} - 1) family of
/// finite fields, {2^i} away from characteristic 2 and {2 3^i} away from
/// characteristic 3. Each family includes its first entry beyond n_max.
std::vector<OrderSequenceCandidate> propose_order_sequences(const FieldInfo& field,
                                                            std::uint64_t n_max);

}  // namespace dftmul

#endif  // DFTMUL_FIELD_META_HPP_
