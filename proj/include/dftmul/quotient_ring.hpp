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

#ifndef DFTMUL_QUOTIENT_RING_HPP_
#define DFTMUL_QUOTIENT_RING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dftmul/cost_ledger.hpp"
#include "dftmul/errors.hpp"
#include "dftmul/fields.hpp"
#include "dftmul/number_theory.hpp"

namespace dftmul {

enum class RingFamily {
  Fermat,      // x^N + 1, dim N, x of order 2N
  Trinomial,   // x^{2N} + x^N + 1, dim 2N, x of order 3N
  Cyclotomic,  // Phi_{s^nu}, dim phi(s^nu), x of order s^nu
};

/// k[x]/(f) for one of the three families, with x as distinguished
/// principal root. Elements are dense coefficient vectors of length dim(),
/// always fully reduced. Immutable once built.
template <GroundField F>
class QuotientRing {
 public:
  using ground_type = F;
  using scalar_type = typename F::value_type;
  using value_type = std::vector<scalar_type>;

  /// Throws DomainError in characteristic 2 or for N < 1.
  static QuotientRing fermat(const F& k, std::size_t N) {
    if (N < 1) throw DomainError("Fermat ring needs N >= 1");
    if (k.characteristic() == 2) throw DomainError("x^N + 1 needs characteristic != 2");
    std::vector<std::int64_t> f(N + 1, 0);
    f[0] = 1;
    f[N] = 1;
    return QuotientRing(k, RingFamily::Fermat, N, 2 * N, std::move(f));
  }

  /// Throws DomainError in characteristic 3 or for N < 1.
  static QuotientRing trinomial(const F& k, std::size_t N) {
    if (N < 1) throw DomainError("trinomial ring needs N >= 1");
    if (k.characteristic() == 3) throw DomainError("x^2N + x^N + 1 needs characteristic != 3");
    std::vector<std::int64_t> f(2 * N + 1, 0);
    f[0] = 1;
    f[N] = 1;
    f[2 * N] = 1;
    return QuotientRing(k, RingFamily::Trinomial, N, 3 * N, std::move(f));
  }

  /// Phi_{s^nu}. Throws DomainError when the characteristic divides s.
  static QuotientRing cyclotomic(const F& k, std::size_t s, unsigned nu) {
    const std::uint64_t p = k.characteristic();
    if (s < 2 || nu < 1) throw DomainError("cyclotomic ring needs s >= 2 and nu >= 1");
    if (p != 0 && s % p == 0) throw DomainError("characteristic divides s");
    auto order = nt::checked_pow(s, nu);
    if (!order) throw DomainError("cyclotomic index too large");
    return QuotientRing(k, RingFamily::Cyclotomic, s, *order, nt::cyclotomic_power(s, nu), nu);
  }

  RingFamily family() const { return family_; }
  /// N for Fermat and trinomial rings, s for cyclotomic ones.
  std::size_t parameter() const { return param_; }
  unsigned exponent() const { return nu_; }
  std::size_t dim() const { return modulus_.size() - 1; }
  std::size_t root_order() const { return root_order_; }
  const F& ground() const { return *ground_; }
  /// Integer coefficients of the modulus, lowest first.
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  std::string describe() const {
    switch (family_) {
      case RingFamily::Fermat:
        return "A_" + std::to_string(param_);
      case RingFamily::Trinomial:
        return "B_" + std::to_string(param_);
      case RingFamily::Cyclotomic:
        return "C_" + std::to_string(root_order_);
    }
    return "?";
  }

  bool operator==(const QuotientRing& o) const {
    return *ground_ == *o.ground_ && modulus_ == o.modulus_;
  }

  value_type zero() const { return value_type(dim(), ground_->zero()); }
  value_type one() const {
    value_type v = zero();
    v[0] = ground_->one();
    return v;
  }
  /// x^e reduced, e taken modulo the root order.
  value_type monomial(std::size_t e) const {
    value_type v(root_order_, ground_->zero());
    v[e % root_order_] = ground_->one();
    CostLedger scratch;
    return reduce(std::move(v), scratch);
  }
  /// Reduces an arbitrary coefficient vector without charging.
  value_type from_coeffs(value_type coeffs) const {
    CostLedger scratch;
    return reduce(std::move(coeffs), scratch);
  }

  value_type add(const value_type& u, const value_type& v, CostLedger& ledger) const {
    check(u);
    check(v);
    value_type w(dim());
    for (std::size_t i = 0; i < dim(); ++i) w[i] = ground_->plus(u[i], v[i]);
    ledger.charge_additive(dim());
    return w;
  }
  value_type sub(const value_type& u, const value_type& v, CostLedger& ledger) const {
    check(u);
    check(v);
    value_type w(dim());
    for (std::size_t i = 0; i < dim(); ++i) w[i] = ground_->minus(u[i], v[i]);
    ledger.charge_additive(dim());
    return w;
  }
  value_type neg(const value_type& u, CostLedger& ledger) const {
    check(u);
    value_type w(dim());
    for (std::size_t i = 0; i < dim(); ++i) w[i] = ground_->negate(u[i]);
    ledger.charge_additive(dim());
    return w;
  }
  /// u * c for a ground constant c: dim scalar products.
  value_type scale(const value_type& u, const scalar_type& c, CostLedger& ledger) const {
    check(u);
    value_type w(dim());
    for (std::size_t i = 0; i < dim(); ++i) w[i] = ground_->times(u[i], c);
    ledger.charge_scalar(dim());
    return w;
  }

  /// u * x^e. Cyclic shift modulo x^{root_order} - 1, then reduction; only
  /// additions and (for coefficients other than +-1) scalar products.
  /// Throws DomainError unless e < root_order.
  value_type mul_by_root_power(const value_type& u, std::size_t e, CostLedger& ledger) const {
    check(u);
    if (e >= root_order_) throw DomainError("root exponent out of range");
    if (e == 0) return u;
    value_type w(root_order_, ground_->zero());
    std::vector<char> occupied(root_order_, 0);
    for (std::size_t i = 0; i < dim(); ++i) {
      const std::size_t t = (i + e) % root_order_;
      w[t] = u[i];
      occupied[t] = 1;
    }
    return reduce(std::move(w), std::move(occupied), ledger);
  }

  /// Schoolbook product followed by reduction: dim^2 nonscalar products.
  value_type mul_naive(const value_type& u, const value_type& v, CostLedger& ledger) const {
    return product(u, v, ledger, false);
  }
  /// Product with a precomputed ring constant c; every coefficient product
  /// is a scalar product.
  value_type mul_constant(const value_type& u, const value_type& c, CostLedger& ledger) const {
    return product(u, c, ledger, true);
  }

  /// Reduces a dense polynomial of any length, every slot treated as
  /// occupied.
  value_type reduce(value_type w, CostLedger& ledger) const {
    std::vector<char> occupied(w.size(), 1);
    return reduce(std::move(w), std::move(occupied), ledger);
  }

  bool has_root(std::size_t n) const { return n >= 1 && root_order_ % n == 0; }

 private:
  QuotientRing(const F& k, RingFamily family, std::size_t param, std::size_t root_order,
               std::vector<std::int64_t> modulus, unsigned nu = 1)
      : ground_(&k),
        family_(family),
        param_(param),
        nu_(nu),
        root_order_(root_order),
        modulus_(std::move(modulus)) {
    const std::uint64_t p = k.characteristic();
    for (std::size_t j = 0; j + 1 < modulus_.size(); ++j) {
      if (modulus_[j] == 0) continue;
      const std::int64_t m =
          p == 0 ? modulus_[j] : modulus_[j] % static_cast<std::int64_t>(p);
      if (m == 0) continue;
      Term t;
      t.offset = j;
      t.factor = k.negate(k.from_int(m));
      t.kind = t.factor == k.one()                ? Term::Copy
               : t.factor == k.negate(k.one())   ? Term::Negate
                                                  : Term::Scalar;
      terms_.push_back(t);
    }
  }

  // x^d = sum over terms of factor * x^offset, d = dim().
  struct Term {
    enum Kind { Copy, Negate, Scalar } kind;
    std::size_t offset;
    scalar_type factor;
  };

  void check(const value_type& u) const {
    if (u.size() != dim()) throw DomainError("element does not belong to " + describe());
  }

  value_type product(const value_type& u, const value_type& v, CostLedger& ledger,
                     bool scalar) const {
    check(u);
    check(v);
    const std::size_t d = dim();
    value_type w(2 * d - 1, ground_->zero());
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) w[i + j] = ground_->plus(w[i + j], ground_->times(u[i], v[j]));
    }
    if (scalar) {
      ledger.charge_scalar(d * d);
    } else {
      ledger.charge_nonscalar(d * d);
    }
    ledger.charge_additive((d - 1) * (d - 1));
    return reduce(std::move(w), ledger);
  }

  // Top-down elimination of every slot >= dim(). Charges follow the
  // occupancy pattern only, never the values.
  value_type reduce(value_type w, std::vector<char> occupied, CostLedger& ledger) const {
    const std::size_t d = dim();
    const F& k = *ground_;
    for (std::size_t t = w.size(); t-- > d;) {
      if (!occupied[t]) continue;
      const scalar_type c = w[t];
      const std::size_t base = t - d;
      for (const Term& term : terms_) {
        const std::size_t target = base + term.offset;
        const bool filled = occupied[target];
        switch (term.kind) {
          case Term::Copy:
            w[target] = filled ? k.plus(w[target], c) : c;
            if (filled) ledger.charge_additive();
            break;
          case Term::Negate:
            w[target] = filled ? k.minus(w[target], c) : k.negate(c);
            ledger.charge_additive();
            break;
          case Term::Scalar: {
            const scalar_type sc = k.times(c, term.factor);
            ledger.charge_scalar();
            w[target] = filled ? k.plus(w[target], sc) : sc;
            if (filled) ledger.charge_additive();
            break;
          }
        }
        occupied[target] = 1;
      }
    }
    w.resize(d, k.zero());
    return w;
  }

  const F* ground_;
  RingFamily family_;
  std::size_t param_;
  unsigned nu_;
  std::size_t root_order_;
  std::vector<std::int64_t> modulus_;
  std::vector<Term> terms_;
};

/// x^step as a principal root of order `order` in a quotient ring. Applying
/// a power is a shift plus reduction, never a multiplication.
template <GroundField F>
class RingRoot {
 public:
  using value_type = typename QuotientRing<F>::value_type;

  RingRoot(const QuotientRing<F>& ring, std::size_t step, std::size_t order)
      : ring_(&ring), step_(step % ring.root_order()), order_(order) {}

  std::size_t order() const { return order_; }
  std::size_t step() const { return step_; }
  const QuotientRing<F>& ring() const { return *ring_; }

  std::size_t exponent(std::size_t e) const {
    return static_cast<std::size_t>(static_cast<unsigned __int128>(e % order_) * step_ %
                                    ring_->root_order());
  }
  value_type apply(const value_type& v, std::size_t e, CostLedger& ledger) const {
    return ring_->mul_by_root_power(v, exponent(e), ledger);
  }
  value_type value(std::size_t e) const { return ring_->monomial(exponent(e)); }
  RingRoot power(std::size_t k) const {
    const std::size_t r = k % order_;
    const std::size_t g = std::gcd(order_, r == 0 ? order_ : r);
    return RingRoot(*ring_, exponent(k), order_ / g);
  }
  RingRoot inverse() const {
    return RingRoot(*ring_, (ring_->root_order() - step_) % ring_->root_order(), order_);
  }

 private:
  const QuotientRing<F>* ring_;
  std::size_t step_;
  std::size_t order_;
};

template <GroundField F>
std::optional<RingRoot<F>> ring_root(const QuotientRing<F>& ring, std::size_t n) {
  if (!ring.has_root(n)) return std::nullopt;
  return RingRoot<F>(ring, ring.root_order() / n, n);
}

template <GroundField F>
bool ring_has_root(const QuotientRing<F>& ring, std::size_t n) {
  return ring.has_root(n);
}

}  // namespace dftmul

#endif  // DFTMUL_QUOTIENT_RING_HPP_
