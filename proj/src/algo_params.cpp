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

#include "dftmul/algo_params.hpp"

#include <cmath>

#include "dftmul/errors.hpp"
#include "dftmul/number_theory.hpp"

namespace dftmul {

namespace {

std::size_t ipow(std::size_t base, unsigned e) {
  auto v = nt::checked_pow(base, e);
  if (!v) throw DomainError("size overflow");
  return static_cast<std::size_t>(*v);
}

void require_n(std::size_t n) {
  if (n < 1) throw DomainError("degree bound n must be positive");
}

}  // namespace

std::string algo_name(AlgoTag tag) {
  switch (tag) {
    case AlgoTag::Naive:
      return "naive";
    case AlgoTag::DirectDFT:
      return "dft";
    case AlgoTag::SchonhageStrassen:
      return "ss";
    case AlgoTag::SchonhageChar2:
      return "schonhage2";
    case AlgoTag::CantorKaltofen:
      return "ck";
    case AlgoTag::Generalized:
      return "auto";
  }
  return "?";
}

AlgoTag parse_algo(const std::string& name) {
  for (AlgoTag t : {AlgoTag::Naive, AlgoTag::DirectDFT, AlgoTag::SchonhageStrassen,
                    AlgoTag::SchonhageChar2, AlgoTag::CantorKaltofen, AlgoTag::Generalized}) {
    if (algo_name(t) == name) return t;
  }
  throw UsageError("unknown engine '" + name + "'");
}

AlgoParams params_direct(std::size_t n, std::size_t s) {
  require_n(n);
  if (s < 2) throw DomainError("DFT base must be at least 2");
  AlgoParams p;
  p.algo = AlgoTag::DirectDFT;
  p.n = n;
  p.s = s;
  p.nu = nt::ceil_log(s, 2 * n - 1);
  p.N = ipow(s, p.nu);
  return p;
}

AlgoParams params_schonhage(std::size_t n) {
  require_n(n);
  AlgoParams p;
  p.algo = AlgoTag::SchonhageStrassen;
  p.n = n;
  p.s = 2;
  p.nu = nt::ceil_log2(2 * n - 1);
  p.N = ipow(2, p.nu);
  p.N1 = ipow(2, (p.nu + 1) / 2);
  p.N2 = ipow(2, p.nu / 2 + 1);
  return p;
}

AlgoParams params_char2(std::size_t n) {
  require_n(n);
  AlgoParams p;
  p.algo = AlgoTag::SchonhageChar2;
  p.n = n;
  p.s = 3;
  p.nu = nt::ceil_log(3, n);
  p.N = ipow(3, p.nu);
  p.N1 = ipow(3, (p.nu + 1) / 2);
  p.N2 = ipow(3, p.nu / 2);
  return p;
}

AlgoParams params_cantor_kaltofen(std::size_t n, std::size_t s) {
  require_n(n);
  if (s < 2) throw DomainError("Cantor-Kaltofen base must be at least 2");
  AlgoParams p;
  p.algo = AlgoTag::CantorKaltofen;
  p.n = n;
  p.s = s;
  const double target = (4.0 * static_cast<double>(n) - 2.0) * std::log2(static_cast<double>(s));
  unsigned nu = 1;
  while (static_cast<double>(ipow(s, nu)) < target) ++nu;
  p.nu = nu;
  p.N3 = ipow(s, nu / 2 + 1);
  p.N2 = ipow(s, (nu + 1) / 2 - 1);
  p.N1 = static_cast<std::size_t>(nt::totient(p.N3));
  p.N = p.N1 * p.N2;
  return p;
}

FermatSplit fermat_split(std::size_t M) {
  const unsigned mu = nt::ceil_log2(M);
  if (ipow(2, mu) != M || mu < 1) throw DomainError("Fermat split needs a power of two >= 2");
  return {ipow(2, mu / 2), ipow(2, (mu + 1) / 2)};
}

TrinomialSplit trinomial_split(std::size_t M) {
  const unsigned mu = nt::ceil_log(3, M);
  if (ipow(3, mu) != M) throw DomainError("trinomial split needs a power of three");
  return {ipow(3, (mu + 1) / 2), ipow(3, mu / 2)};
}

CyclotomicSplit cyclotomic_split(std::size_t s, unsigned mu) {
  CyclotomicSplit c;
  c.inner_exponent = mu / 2 + 1;
  c.N3 = ipow(s, c.inner_exponent);
  c.N2 = mu >= 1 ? ipow(s, (mu + 1) / 2 - 1) : 1;
  c.N1 = static_cast<std::size_t>(nt::totient(c.N3));
  return c;
}

AlgoParams dispatch_params(std::uint64_t characteristic,
                           const std::function<bool(std::size_t)>& has_root, std::size_t n) {
  require_n(n);
  if (n < kCutoff) {
    AlgoParams p;
    p.n = n;
    return p;
  }
  for (std::size_t s : {2u, 3u}) {
    AlgoParams p = params_direct(n, s);
    if (has_root(p.N)) return p;
  }
  return characteristic == 2 ? params_char2(n) : params_schonhage(n);
}

}  // namespace dftmul
