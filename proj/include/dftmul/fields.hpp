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

#ifndef DFTMUL_FIELDS_HPP_
#define DFTMUL_FIELDS_HPP_

#include <gmpxx.h>

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "dftmul/cost_ledger.hpp"
#include "dftmul/errors.hpp"

namespace dftmul {

/// Charged arithmetic shared by all ground fields. Derived supplies the
/// uncharged primitives `plus`, `minus`, `negate` and `times`; the charged
/// versions here are the only ones the algorithms use on input-dependent
/// data. Whether a product is scalar is decided by the caller.
template <class Derived, class V>
class CountedArithmetic {
 public:
  V add(const V& a, const V& b, CostLedger& ledger) const {
    ledger.charge_additive();
    return self().plus(a, b);
  }
  V sub(const V& a, const V& b, CostLedger& ledger) const {
    ledger.charge_additive();
    return self().minus(a, b);
  }
  V neg(const V& a, CostLedger& ledger) const {
    ledger.charge_additive();
    return self().negate(a);
  }
  /// Nonscalar product (both operands input-dependent).
  V mul(const V& a, const V& b, CostLedger& ledger) const {
    ledger.charge_nonscalar();
    return self().times(a, b);
  }
  /// Product with a precomputed algorithm constant `c`.
  V mul_scalar(const V& a, const V& c, CostLedger& ledger) const {
    ledger.charge_scalar();
    return self().times(a, c);
  }
  V mul(const V& a, const V& b, CostLedger& ledger, bool scalar_flag) const {
    return scalar_flag ? mul_scalar(a, b, ledger) : mul(a, b, ledger);
  }

  // Coefficient-ring view used by the transform code: a field is a ring of
  // dimension one over itself.
  V mul_constant(const V& a, const V& c, CostLedger& ledger) const {
    return mul_scalar(a, c, ledger);
  }
  V scale(const V& a, const V& c, CostLedger& ledger) const { return mul_scalar(a, c, ledger); }
  const Derived& ground() const { return self(); }
  std::size_t dim() const { return 1; }

  V pow(V base, std::uint64_t e) const {
    V result = self().one();
    while (e > 0) {
      if (e & 1) result = self().times(result, base);
      base = self().times(base, base);
      e >>= 1;
    }
    return result;
  }

 private:
  const Derived& self() const { return static_cast<const Derived&>(*this); }
};

/// F_p for a prime p < 2^63, elements stored as least nonnegative residues.
class PrimeField : public CountedArithmetic<PrimeField, std::uint64_t> {
 public:
  using value_type = std::uint64_t;

  /// Throws DomainError unless p is prime.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  std::uint64_t size() const { return p_; }
  bool is_finite() const { return true; }
  std::string spec() const { return "fp:" + std::to_string(p_); }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p_; }
  value_type from_int(std::int64_t v) const;

  value_type plus(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type minus(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type negate(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type times(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % p_);
  }
  /// Throws DomainError on zero. Never charged.
  value_type inv(value_type a) const;

  bool is_zero(value_type a) const { return a == 0; }
  /// Element with enumeration index i in [0, size()).
  value_type element(std::uint64_t i) const { return i; }
  value_type random(std::mt19937_64& rng) const;
  std::string to_string(value_type a) const { return std::to_string(a); }

  /// True iff the field contains a primitive n-th root of unity.
  bool has_root(std::uint64_t n) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
};

/// F_{p^m} = F_p[y]/(f) with f the lexicographically least monic
/// irreducible of degree m. Elements are coefficient vectors packed as
/// base-p digits (digit j is the coefficient of y^j).
class ExtensionField : public CountedArithmetic<ExtensionField, std::uint64_t> {
 public:
  using value_type = std::uint64_t;

  /// Throws DomainError unless p is prime, m >= 1 and p^m < 2^40.
  ExtensionField(std::uint64_t p, unsigned m);

  std::uint64_t characteristic() const { return p_; }
  std::uint64_t size() const { return q_; }
  unsigned degree() const { return m_; }
  bool is_finite() const { return true; }
  std::string spec() const { return "fq:" + std::to_string(p_) + "^" + std::to_string(m_); }
  /// Coefficients of the defining polynomial, lowest degree first.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const;
  /// Packs a coefficient vector of length <= m.
  value_type from_coeffs(const std::vector<std::uint64_t>& coeffs) const;
  std::vector<std::uint64_t> coeffs(value_type a) const;

  value_type plus(value_type a, value_type b) const;
  value_type minus(value_type a, value_type b) const;
  value_type negate(value_type a) const;
  value_type times(value_type a, value_type b) const;
  value_type inv(value_type a) const;

  bool is_zero(value_type a) const { return a == 0; }
  value_type element(std::uint64_t i) const { return i; }
  value_type random(std::mt19937_64& rng) const;
  std::string to_string(value_type a) const;
  bool has_root(std::uint64_t n) const;

  bool operator==(const ExtensionField& o) const { return p_ == o.p_ && m_ == o.m_; }

 private:
  value_type times_slow(value_type a, value_type b) const;

  std::uint64_t p_;
  unsigned m_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  // Discrete log tables, present for q <= 2^16.
  std::shared_ptr<const std::vector<std::uint32_t>> log_;
  std::shared_ptr<const std::vector<std::uint32_t>> exp_;
};

/// The rationals, as GMP fractions kept in lowest terms with positive
/// denominator. Every operation is one unit of cost regardless of size.
class RationalField : public CountedArithmetic<RationalField, mpq_class> {
 public:
  using value_type = mpq_class;

  std::uint64_t characteristic() const { return 0; }
  bool is_finite() const { return false; }
  std::string spec() const { return "q"; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }

  value_type plus(const value_type& a, const value_type& b) const { return a + b; }
  value_type minus(const value_type& a, const value_type& b) const { return a - b; }
  value_type negate(const value_type& a) const { return -a; }
  value_type times(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const;

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  /// Numerator and denominator uniform in [-99, 99], denominator nonzero.
  value_type random(std::mt19937_64& rng) const;
  std::string to_string(const value_type& a) const { return a.get_str(); }
  bool has_root(std::uint64_t n) const { return n == 1 || n == 2; }

  bool operator==(const RationalField&) const { return true; }
};

template <class F>
concept GroundField = requires(const F& f, const typename F::value_type& a, CostLedger& l) {
  { f.plus(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.times(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.add(a, a, l) } -> std::convertible_to<typename F::value_type>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.has_root(std::uint64_t{1}) } -> std::convertible_to<bool>;
  { f.spec() } -> std::convertible_to<std::string>;
};

/// Canonical multiple n·1 in the field.
template <GroundField F>
typename F::value_type field_int(const F& f, std::uint64_t n) {
  std::uint64_t p = f.characteristic();
  return f.from_int(static_cast<std::int64_t>(p == 0 ? n : n % p));
}

/// A primitive n-th root of unity (the smallest by enumeration order for
/// finite fields), or nullopt when none exists. Requires n >= 1.
std::optional<std::uint64_t> find_principal_root(const PrimeField& field, std::uint64_t n);
std::optional<std::uint64_t> find_principal_root(const ExtensionField& field, std::uint64_t n);
std::optional<mpq_class> find_principal_root(const RationalField& field, std::uint64_t n);

/// Element tagged with the field it belongs to; the checked entry point of
/// the field API.
template <GroundField F>
struct FieldElement {
  const F* owner;
  typename F::value_type value;

  bool operator==(const FieldElement& o) const {
    return *owner == *o.owner && value == o.value;
  }
};

template <GroundField F>
FieldElement<F> element(const F& field, typename F::value_type v) {
  return {&field, std::move(v)};
}

namespace detail {
template <GroundField F>
void require_same_field(const FieldElement<F>& x, const FieldElement<F>& y) {
  if (!(*x.owner == *y.owner)) throw DomainError("operands belong to different fields");
}
}  // namespace detail

template <GroundField F>
FieldElement<F> add(const FieldElement<F>& x, const FieldElement<F>& y, CostLedger& ledger) {
  detail::require_same_field(x, y);
  return {x.owner, x.owner->add(x.value, y.value, ledger)};
}

template <GroundField F>
FieldElement<F> mul(const FieldElement<F>& x, const FieldElement<F>& y, CostLedger& ledger,
                    bool scalar_flag) {
  detail::require_same_field(x, y);
  return {x.owner, x.owner->mul(x.value, y.value, ledger, scalar_flag)};
}

template <GroundField F>
FieldElement<F> inv(const FieldElement<F>& x) {
  return {x.owner, x.owner->inv(x.value)};
}

/// Principal root of unity of a ground field with its power table. The
/// powers are algorithm constants, so applying one is a scalar product.
template <GroundField F>
class FieldRoot {
 public:
  using value_type = typename F::value_type;

  FieldRoot(const F& field, value_type omega, std::size_t order)
      : field_(&field), order_(order) {
    powers_.reserve(order);
    value_type w = field.one();
    for (std::size_t i = 0; i < order; ++i) {
      powers_.push_back(w);
      w = field.times(w, omega);
    }
  }

  std::size_t order() const { return order_; }
  const value_type& value(std::size_t e) const { return powers_[e % order_]; }
  value_type apply(const value_type& v, std::size_t e, CostLedger& ledger) const {
    return field_->mul_scalar(v, value(e), ledger);
  }
  /// ω^k, a principal root of order order/gcd(order, k).
  FieldRoot power(std::size_t k) const {
    std::size_t g = std::gcd(order_, k % order_ == 0 ? order_ : k % order_);
    return FieldRoot(*field_, value(k), order_ / g);
  }
  FieldRoot inverse() const { return FieldRoot(*field_, value(order_ - 1), order_); }
  const F& ring() const { return *field_; }

 private:
  const F* field_;
  std::size_t order_;
  std::vector<value_type> powers_;
};

/// Root of order n in the field as a transform root, if it exists.
template <GroundField F>
std::optional<FieldRoot<F>> ring_root(const F& field, std::size_t n) {
  auto w = find_principal_root(field, n);
  if (!w) return std::nullopt;
  return FieldRoot<F>(field, *w, n);
}

template <GroundField F>
bool ring_has_root(const F& field, std::size_t n) {
  return field.has_root(n);
}

using AnyField = std::variant<PrimeField, ExtensionField, RationalField>;

/// Parses `fp:<p>`, `fq:<p>^<m>` or `q`. Throws UsageError when malformed
/// and DomainError when p is not prime.
AnyField parse_field_spec(const std::string& spec);

std::string field_spec(const AnyField& field);

}  // namespace dftmul

#endif  // DFTMUL_FIELDS_HPP_
