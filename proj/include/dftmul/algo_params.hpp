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

#ifndef DFTMUL_ALGO_PARAMS_HPP_
#define DFTMUL_ALGO_PARAMS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace dftmul {

enum class AlgoTag {
  Naive,
  DirectDFT,
  SchonhageStrassen,
  SchonhageChar2,
  CantorKaltofen,
  Generalized,
};

std::string algo_name(AlgoTag tag);
/// Inverse of algo_name, also accepting the CLI spelling. Throws UsageError.
AlgoTag parse_algo(const std::string& name);

/// Products of degree-bound n below this are always schoolbook.
inline constexpr std::size_t kCutoff = 8;
/// Ring products of dimension at most this are always schoolbook.
inline constexpr std::size_t kRingCutoff = 8;

/// Sizes of the top-level embedding for one engine. `N` is the dimension of
/// the algebra the product is computed in; unused fields are zero.
struct AlgoParams {
  AlgoTag algo = AlgoTag::Naive;
  std::size_t n = 0;
  std::size_t s = 0;
  unsigned nu = 0;
  std::size_t N = 0;
  std::size_t N1 = 0;
  std::size_t N2 = 0;
  std::size_t N3 = 0;
  std::size_t cutoff = kCutoff;
};

/// Least s^nu >= 2n - 1.
AlgoParams params_direct(std::size_t n, std::size_t s);
/// nu = ceil(log2(2n - 1)), N = 2^nu, N1 = 2^ceil(nu/2), N2 = 2^(floor(nu/2)+1).
AlgoParams params_schonhage(std::size_t n);
/// nu = ceil(log3 n), N = 3^nu, N1 = 3^ceil(nu/2), N2 = 3^floor(nu/2).
AlgoParams params_char2(std::size_t n);
/// nu = ceil(log_s((4n - 2) log2 s)), N = phi(s^nu), N1 = phi(N3),
/// N2 = s^(ceil(nu/2)-1), N3 = s^(floor(nu/2)+1).
AlgoParams params_cantor_kaltofen(std::size_t n, std::size_t s);

/// Negacyclic split of A_M, M = 2^mu: t chunks of m coefficients, products
/// in A_{2m}.
struct FermatSplit {
  std::size_t m = 0;
  std::size_t t = 0;
};
FermatSplit fermat_split(std::size_t M);

/// Split of B_M, M = 3^mu, into 2 N2 chunks of N1 coefficients in B_{N1}.
struct TrinomialSplit {
  std::size_t N1 = 0;
  std::size_t N2 = 0;
};
TrinomialSplit trinomial_split(std::size_t M);

/// Split of C_{s^mu} over C_{N3}[z]/(z^N2 - y). Returns N2 = 1 when no
/// useful split exists.
struct CyclotomicSplit {
  std::size_t N1 = 0;
  std::size_t N2 = 0;
  std::size_t N3 = 0;
  unsigned inner_exponent = 0;  // N3 = s^inner_exponent
};
CyclotomicSplit cyclotomic_split(std::size_t s, unsigned mu);

/// Engine choice for degree bound n over a ground field with the given
/// characteristic; `has_root(k)` tells whether the field itself has a
/// primitive k-th root of unity. Below the cutoff: Naive. Otherwise the
/// direct transform when the field hosts a power-of-2 (else power-of-3)
/// order >= 2n - 1, the ternary variant in characteristic 2 and
/// Schonhage-Strassen elsewhere.
AlgoParams dispatch_params(std::uint64_t characteristic,
                           const std::function<bool(std::size_t)>& has_root, std::size_t n);

}  // namespace dftmul

#endif  // DFTMUL_ALGO_PARAMS_HPP_
