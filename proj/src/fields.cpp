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

#include "dftmul/fields.hpp"

#include <algorithm>
#include <limits>

#include "dftmul/number_theory.hpp"

namespace dftmul {

namespace {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // over F_p, lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f for monic f.
Poly poly_mod(Poly a, const Poly& f, u64 p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    const u64 c = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i < df; ++i) {
      a[shift + i] = (a[shift + i] + (p - nt::mul_mod(c, f[i], p))) % p;
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = (c[i + j] + nt::mul_mod(a[i], b[j], p)) % p;
    }
  }
  return c;
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mod(poly_mul(result, base, p), f, p);
    base = poly_mod(poly_mul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // Make b monic so poly_mod applies.
    const u64 lead_inv = nt::pow_mod(b.back(), p - 2, p);
    for (auto& c : b) c = nt::mul_mod(c, lead_inv, p);
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree m is irreducible iff gcd(f, x^{p^i} - x) = 1 for
// every i <= m/2.
bool is_irreducible(const Poly& f, u64 p) {
  const std::size_t m = f.size() - 1;
  Poly h{0, 1};
  for (std::size_t i = 1; i <= m / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly g = h;
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    if (poly_gcd(f, g, p).size() > 1) return false;
  }
  return true;
}

// Smallest primitive n-th root among the powers of a generator.
template <class F>
std::optional<u64> smallest_root_of_order(const F& field, u64 q, u64 n) {
  if (n == 0 || (q - 1) % n != 0) return std::nullopt;
  const auto divisors = nt::prime_divisors(q - 1);
  u64 gen = 0;
  for (u64 i = 1; i < q; ++i) {
    const u64 g = field.element(i);
    bool primitive = true;
    for (u64 r : divisors) {
      if (field.pow(g, (q - 1) / r) == field.one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = g;
      break;
    }
  }
  const u64 zeta = field.pow(gen, (q - 1) / n);
  u64 best = std::numeric_limits<u64>::max();
  u64 w = field.one();
  for (u64 k = 0; k < n; ++k) {
    if (nt::gcd(k, n) == 1) best = std::min(best, w);
    w = field.times(w, zeta);
  }
  return best;
}

u64 parse_u64(const std::string& text, const std::string& spec) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit)) {
    throw UsageError("malformed field spec '" + spec + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw UsageError("malformed field spec '" + spec + "'");
  }
}

}  // namespace

// ---- PrimeField ----

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!nt::is_prime(p) || p >= (u64{1} << 63)) {
    throw DomainError("F_p needs a prime p, got " + std::to_string(p));
  }
}

PrimeField::value_type PrimeField::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw DomainError("inverse of zero");
  return nt::pow_mod(a, p_ - 2, p_);
}

PrimeField::value_type PrimeField::random(std::mt19937_64& rng) const {
  return std::uniform_int_distribution<u64>(0, p_ - 1)(rng);
}

bool PrimeField::has_root(std::uint64_t n) const { return n >= 1 && (p_ - 1) % n == 0; }

std::optional<std::uint64_t> find_principal_root(const PrimeField& field, std::uint64_t n) {
  return smallest_root_of_order(field, field.size(), n);
}

// ---- ExtensionField ----

ExtensionField::ExtensionField(std::uint64_t p, unsigned m) : p_(p), m_(m) {
  if (!nt::is_prime(p)) throw DomainError("F_q needs a prime characteristic");
  if (m == 0) throw DomainError("extension degree must be positive");
  auto q = nt::checked_pow(p, m);
  if (!q || *q >= (u64{1} << 40)) throw DomainError("field too large");
  q_ = *q;

  const u64 candidates = q_;  // lower coefficients range over F_p^m
  for (u64 k = 0; k < candidates; ++k) {
    Poly f(m + 1, 0);
    u64 rest = k;
    for (unsigned j = 0; j < m; ++j) {
      f[j] = rest % p;
      rest /= p;
    }
    f[m] = 1;
    if (m > 1 && f[0] == 0) continue;
    if (is_irreducible(f, p)) {
      modulus_ = std::move(f);
      break;
    }
  }

  if (q_ <= (u64{1} << 16) && q_ > 2) {
    const auto divisors = nt::prime_divisors(q_ - 1);
    u64 gen = 0;
    for (u64 g = 1; g < q_ && gen == 0; ++g) {
      bool primitive = true;
      for (u64 r : divisors) {
        value_type t = one();
        value_type b = g;
        for (u64 e = (q_ - 1) / r; e > 0; e >>= 1) {
          if (e & 1) t = times_slow(t, b);
          b = times_slow(b, b);
        }
        if (t == one()) {
          primitive = false;
          break;
        }
      }
      if (primitive) gen = g;
    }
    auto log = std::make_shared<std::vector<std::uint32_t>>(q_, 0);
    auto exp = std::make_shared<std::vector<std::uint32_t>>(2 * (q_ - 1), 0);
    value_type w = one();
    for (u64 i = 0; i < q_ - 1; ++i) {
      (*exp)[i] = static_cast<std::uint32_t>(w);
      (*exp)[i + q_ - 1] = static_cast<std::uint32_t>(w);
      (*log)[w] = static_cast<std::uint32_t>(i);
      w = times_slow(w, gen);
    }
    log_ = std::move(log);
    exp_ = std::move(exp);
  }
}

std::vector<std::uint64_t> ExtensionField::coeffs(value_type a) const {
  std::vector<u64> c(m_, 0);
  for (unsigned j = 0; j < m_; ++j) {
    c[j] = a % p_;
    a /= p_;
  }
  return c;
}

ExtensionField::value_type ExtensionField::from_coeffs(
    const std::vector<std::uint64_t>& coeffs) const {
  if (coeffs.size() > m_) throw DomainError("too many coefficients for F_q element");
  value_type v = 0;
  for (std::size_t j = coeffs.size(); j-- > 0;) v = v * p_ + coeffs[j] % p_;
  return v;
}

ExtensionField::value_type ExtensionField::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<value_type>(r);
}

ExtensionField::value_type ExtensionField::plus(value_type a, value_type b) const {
  if (p_ == 2) return a ^ b;
  value_type v = 0;
  value_type place = 1;
  for (unsigned j = 0; j < m_; ++j) {
    v += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return v;
}

ExtensionField::value_type ExtensionField::negate(value_type a) const {
  if (p_ == 2) return a;
  value_type v = 0;
  value_type place = 1;
  for (unsigned j = 0; j < m_; ++j) {
    v += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return v;
}

ExtensionField::value_type ExtensionField::minus(value_type a, value_type b) const {
  return plus(a, negate(b));
}

ExtensionField::value_type ExtensionField::times_slow(value_type a, value_type b) const {
  Poly prod = poly_mul(coeffs(a), coeffs(b), p_);
  Poly r = poly_mod(std::move(prod), modulus_, p_);
  return from_coeffs(r);
}

ExtensionField::value_type ExtensionField::times(value_type a, value_type b) const {
  if (a == 0 || b == 0) return 0;
  if (exp_) return (*exp_)[(*log_)[a] + (*log_)[b]];
  return times_slow(a, b);
}

ExtensionField::value_type ExtensionField::inv(value_type a) const {
  if (a == 0) throw DomainError("inverse of zero");
  if (exp_) return (*exp_)[(q_ - 1 - (*log_)[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

ExtensionField::value_type ExtensionField::random(std::mt19937_64& rng) const {
  return std::uniform_int_distribution<u64>(0, q_ - 1)(rng);
}

std::string ExtensionField::to_string(value_type a) const {
  if (a == 0) return "0";
  std::string out;
  const auto c = coeffs(a);
  for (std::size_t j = m_; j-- > 0;) {
    if (c[j] == 0) continue;
    if (!out.empty()) out += "+";
    if (j == 0) {
      out += std::to_string(c[j]);
    } else {
      if (c[j] != 1) out += std::to_string(c[j]) + "*";
      out += j == 1 ? "y" : "y^" + std::to_string(j);
    }
  }
  return out;
}

bool ExtensionField::has_root(std::uint64_t n) const { return n >= 1 && (q_ - 1) % n == 0; }

std::optional<std::uint64_t> find_principal_root(const ExtensionField& field, std::uint64_t n) {
  return smallest_root_of_order(field, field.size(), n);
}

// ---- RationalField ----

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (sgn(a) == 0) throw DomainError("inverse of zero");
  return 1 / a;
}

RationalField::value_type RationalField::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<long> dist(-99, 99);
  const long num = dist(rng);
  long den = 0;
  while (den == 0) den = dist(rng);
  mpq_class v(num, den);
  v.canonicalize();
  return v;
}

std::optional<mpq_class> find_principal_root(const RationalField&, std::uint64_t n) {
  if (n == 1) return mpq_class(1);
  if (n == 2) return mpq_class(-1);
  return std::nullopt;
}

// ---- specs ----

AnyField parse_field_spec(const std::string& spec) {
  if (spec == "q") return RationalField{};
  if (spec.rfind("fp:", 0) == 0) return PrimeField(parse_u64(spec.substr(3), spec));
  if (spec.rfind("fq:", 0) == 0) {
    const std::string body = spec.substr(3);
    const auto caret = body.find('^');
    if (caret == std::string::npos) throw UsageError("malformed field spec '" + spec + "'");
    const u64 p = parse_u64(body.substr(0, caret), spec);
    const u64 m = parse_u64(body.substr(caret + 1), spec);
    if (m > 64) throw DomainError("extension degree too large");
    return ExtensionField(p, static_cast<unsigned>(m));
  }
  throw UsageError("unknown field spec '" + spec + "' (expected fp:<p>, fq:<p>^<m> or q)");
}

std::string field_spec(const AnyField& field) {
  return std::visit([](const auto& f) { return f.spec(); }, field);
}

}  // namespace dftmul
