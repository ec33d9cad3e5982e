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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dftmul/bench.hpp"
#include "dftmul/dft.hpp"
#include "dftmul/field_meta.hpp"
#include "dftmul/generalized.hpp"
#include "dftmul/number_theory.hpp"
#include "dftmul/polymul.hpp"

namespace {

using namespace dftmul;

// Pinned tolerances.
constexpr std::size_t kOracleTrials = 50;
constexpr double kOracleSeconds = 120.0;
constexpr double kDirectBand = 4.0;
constexpr double kDirectSeconds = 60.0;
constexpr double kSchonhageBand = 6.0;
constexpr long kDepthSlack = 1;
constexpr double kSchonhageSeconds = 300.0;
constexpr std::size_t kRaderVectors = 100;
constexpr std::uint64_t kMetaLimit = 1 << 14;
constexpr std::uint64_t kTotientBruteLimit = 10000;
constexpr std::size_t kInstanceTrials = 20;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

template <class F>
Coeffs<F> random_poly(const F& f, std::size_t n, std::mt19937_64& rng) {
  Coeffs<F> a(n);
  for (auto& v : a) v = f.random(rng);
  return a;
}

std::uint64_t prime_with_roots(std::uint64_t m, std::vector<std::uint64_t> avoid = {}) {
  for (std::uint64_t q = m + 1;; q += m) {
    if (!nt::is_prime(q)) continue;
    bool ok = true;
    for (auto a : avoid) ok = ok && (q - 1) % a != 0;
    if (ok) return q;
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Every applicable engine equals the schoolbook product.
void oracle_equivalence(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  BenchConfig config;
  config.fields = {"fp:2", "fq:2^2", "fp:5", "fp:17", "fp:12289", "q"};
  config.degrees = {1, 2, 3, 4, 5, 6, 7, 8, 9, 16, 31, 64, 100, 256};
  config.trials = kOracleTrials;
  config.seed = 2026;
  const VerifyResult r = run_verify(config);
  std::size_t ran = 0;
  for (const auto& c : r.cells) {
    if (c.skipped) continue;
    ++ran;
    if (c.passed != c.trials) {
      o.fail(algo_name(c.engine) + " " + c.field + " n=" + std::to_string(c.n) + " mismatched; ");
    }
  }
  const double secs = seconds_since(t0);
  if (secs > kOracleSeconds) o.fail("runtime " + std::to_string(secs) + " s; ");
  o.detail << ran << " cells x " << kOracleTrials << " instances, " << r.mismatches
           << " mismatches, " << std::fixed << std::setprecision(1) << secs << " s";
}

// 2. Naive transform charge equals the closed form.
template <class F>
void closed_form_counts(const F& f, Outcome& o, std::size_t& checked) {
  std::mt19937_64 rng(f.characteristic());
  for (std::size_t n = 2; n <= 64; ++n) {
    const auto root = ring_root(f, n);
    if (!root) continue;
    std::vector<typename F::value_type> a(n);
    for (auto& v : a) v = f.random(rng);
    CostLedger l;
    detail::dft_naive(a, *root, l);
    const std::uint64_t want = n % 2 ? 2 * n * n - 3 * n + 1 : 2 * n * n - 5 * n + 4;
    if (l.total() != want) {
      o.fail(f.spec() + " n=" + std::to_string(n) + " charged " + std::to_string(l.total()) + "; ");
    }
    ++checked;
  }
}

void naive_transform_counts(Outcome& o) {
  std::size_t checked = 0;
  closed_form_counts(PrimeField(12289), o, checked);
  closed_form_counts(PrimeField(17), o, checked);
  o.detail << checked << " orders checked";
}

// 3. Cooley-Tukey charge against the sum of its measured parts.
void cooley_tukey_bound(Outcome& o) {
  const PrimeField f(12289);
  const RootAvailable avail = [&f](std::size_t k) { return f.has_root(k); };
  std::mt19937_64 rng(3);
  auto measure = [&](std::size_t n, const DftPlan& plan) {
    const auto root = ring_root(f, n);
    std::vector<std::uint64_t> a(n);
    for (auto& v : a) v = f.random(rng);
    CostLedger l;
    dft(a, *root, plan, l);
    return l.total();
  };
  std::size_t factorizations = 0, violations = 0;
  for (std::size_t n = 4; n <= 256; ++n) {
    if (!f.has_root(n)) continue;
    for (std::size_t n1 = 2; n1 * 2 <= n; ++n1) {
      if (n % n1) continue;
      const std::size_t n2 = n / n1;
      const DftPlan plan = make_cooley_tukey_plan(n1, n2, avail);
      const std::uint64_t whole = measure(n, plan);
      const std::uint64_t d1 = measure(n1, plan.children[0]);
      const std::uint64_t d2 = measure(n2, plan.children[1]);
      const std::uint64_t bound = n1 * d2 + n2 * d1 + (n1 - 1) * (n2 - 1);
      ++factorizations;
      if (whole > bound) {
        ++violations;
        o.fail(std::to_string(n) + " = " + std::to_string(n1) + " x " + std::to_string(n2) + "; ");
      }
    }
  }
  o.detail << factorizations << " factorizations, " << violations << " violations";
}

// 4. Direct transform issues exactly s^nu products, s^nu <= 2ns - s.
void direct_linear_products(Outcome& o) {
  const PrimeField f(12289);
  std::mt19937_64 rng(4);
  constexpr std::size_t s = 2;
  for (std::size_t n = 4; n <= 1024; ++n) {
    CostLedger l;
    mul_direct_dft(f, random_poly(f, n, rng), random_poly(f, n, rng), l, s);
    std::size_t N = 1;
    while (N < 2 * n - 1) N *= s;
    if (l.nonscalar() != N) o.fail("n=" + std::to_string(n) + " L^m=" + std::to_string(l.nonscalar()) + "; ");
    if (N > 2 * n * s - s) o.fail("n=" + std::to_string(n) + " s^nu too large; ");
  }
  o.detail << "n = 4..1024";
}

// 5, 6. Normalized totals across degrees.
template <class F, class Engine>
std::vector<CostLedger> ledgers(const F& f, const std::vector<std::size_t>& degrees, Engine engine) {
  std::mt19937_64 rng(5);
  std::vector<CostLedger> out;
  for (std::size_t n : degrees) {
    CostLedger l;
    engine(f, random_poly(f, n, rng), random_poly(f, n, rng), l);
    out.push_back(std::move(l));
  }
  return out;
}

double band(const std::vector<double>& v) {
  return *std::max_element(v.begin(), v.end()) / *std::min_element(v.begin(), v.end());
}

void direct_n_log_n(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const PrimeField f(12289);
  const std::vector<std::size_t> degrees{64, 128, 256, 512, 1024};
  const auto ls = ledgers(f, degrees, [](const auto& k, auto a, auto b, CostLedger& l) {
    return mul_direct_dft(k, std::move(a), std::move(b), l);
  });
  std::vector<double> r;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const double n = double(degrees[i]);
    r.push_back(double(ls[i].total()) / (n * std::log2(n)));
  }
  const double secs = seconds_since(t0);
  if (band(r) > kDirectBand) o.fail("band exceeds limit; ");
  if (secs > kDirectSeconds) o.fail("runtime; ");
  o.detail << std::setprecision(3) << "L/(n log n) = ";
  for (double x : r) o.detail << x << " ";
  o.detail << "band " << band(r);
}

template <class F>
void schonhage_field(const F& f, Outcome& o) {
  const std::vector<std::size_t> degrees{64, 256, 1024, 4096};
  const auto ls = ledgers(f, degrees, [](const auto& k, auto a, auto b, CostLedger& l) {
    return mul_schonhage_strassen(k, std::move(a), std::move(b), l);
  });
  std::vector<double> r;
  o.detail << f.spec() << ": ";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const double n = double(degrees[i]);
    r.push_back(double(ls[i].total()) / (n * std::log2(n) * std::log2(std::log2(n))));
    const std::size_t nu = nt::ceil_log2(2 * degrees[i] - 1);
    const long expected = long(nt::ceil_log2(nu));
    const long depth = long(ls[i].depth());
    o.detail << "n=" << degrees[i] << " depth " << depth << "/" << expected << " ";
    if (std::abs(depth - expected) > kDepthSlack) {
      o.fail(f.spec() + " n=" + std::to_string(degrees[i]) + " depth off; ");
    }
  }
  o.detail << std::setprecision(3) << "band " << band(r) << "; ";
  if (band(r) > kSchonhageBand) o.fail(f.spec() + " band exceeds limit; ");
}

void schonhage_n_log_n_log_log_n(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  schonhage_field(RationalField(), o);
  schonhage_field(PrimeField(5), o);
  const double secs = seconds_since(t0);
  if (secs > kSchonhageSeconds) o.fail("runtime; ");
  o.detail << std::fixed << std::setprecision(1) << secs << " s";
}

// 7. Ternary variant issues 2 N2 of the 3 N2 pointwise products.
template <class F>
void char2_field(const F& f, Outcome& o, std::size_t& levels) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {9, 30, 100, 333, 1000}) {
    CostLedger l;
    mul_schonhage_char2(f, random_poly(f, n, rng), random_poly(f, n, rng), l);
    if (l.splits().empty()) o.fail(f.spec() + " n=" + std::to_string(n) + " did not recurse; ");
    for (const auto& s : l.splits()) {
      ++levels;
      if (s.transform_order % 3 || s.products != 2 * (s.transform_order / 3)) {
        o.fail(f.spec() + " n=" + std::to_string(n) + " level " + std::to_string(s.level) + "; ");
      }
    }
  }
}

void char2_products(Outcome& o) {
  std::size_t levels = 0;
  char2_field(PrimeField(2), o, levels);
  char2_field(ExtensionField(2, 2), o, levels);
  o.detail << levels << " split records, each 2 N2";
}

// 8. Rader's transform against the naive one, both convolution lengths.
void rader(Outcome& o) {
  std::size_t vectors = 0;
  for (std::size_t p : {3, 5, 7, 11, 13}) {
    std::size_t padded = 1;
    while (padded < 2 * p - 3) padded *= 2;
    for (std::size_t L : {p - 1, padded}) {
      const PrimeField f(prime_with_roots(nt::lcm(p, L)));
      const RootAvailable avail = [&f](std::size_t k) { return f.has_root(k); };
      const DftPlan plan = make_rader_plan(p, L, avail);
      const auto root = ring_root(f, p);
      std::mt19937_64 rng(p * 1000 + L);
      for (std::size_t t = 0; t < kRaderVectors; ++t) {
        std::vector<std::uint64_t> a(p);
        for (auto& v : a) v = f.random(rng);
        CostLedger l1, l2;
        if (dft(a, *root, plan, l1) != detail::dft_naive(a, *root, l2)) {
          o.fail("p=" + std::to_string(p) + " L=" + std::to_string(L) + "; ");
        }
        ++vectors;
        if (l1.total() != plan.predicted_ops) o.fail("predicted cost p=" + std::to_string(p) + "; ");
      }
    }
  }
  o.detail << vectors << " vectors, L = p-1 and padded power of two";
}

// 9. Closed forms of the field metadata.
void meta_closed_forms(Outcome& o) {
  // Totient by sieve, independent of the library's factorization.
  std::vector<std::uint64_t> phi(kMetaLimit + 1);
  std::iota(phi.begin(), phi.end(), 0);
  for (std::uint64_t p = 2; p <= kMetaLimit; ++p) {
    if (phi[p] != p) continue;
    for (std::uint64_t k = p; k <= kMetaLimit; k += p) phi[k] -= phi[k] / p;
  }
  for (std::uint64_t n = 1; n <= kMetaLimit; ++n) {
    if (totient(n) != phi[n]) o.fail("phi(" + std::to_string(n) + "); ");
    if (n <= kTotientBruteLimit) {
      std::uint64_t units = 0;
      for (std::uint64_t k = 1; k <= n; ++k) units += std::gcd(k, n) == 1;
      if (units != phi[n]) o.fail("brute phi(" + std::to_string(n) + "); ");
    }
    if (degree_function(FieldInfo{}, n) != phi[n]) o.fail("f_Q(" + std::to_string(n) + "); ");
  }
  for (unsigned nu = 1; (std::uint64_t{1} << nu) <= kMetaLimit; ++nu) {
    const std::size_t h = std::size_t{1} << (nu - 1);
    std::vector<std::int64_t> want(h + 1, 0);
    want[0] = want[h] = 1;
    if (cyclotomic(2, nu) != want) o.fail("Phi_2^" + std::to_string(nu) + "; ");
  }
  for (unsigned nu = 1; *nt::checked_pow(3, nu) <= kMetaLimit; ++nu) {
    const std::size_t h = *nt::checked_pow(3, nu - 1);
    std::vector<std::int64_t> want(2 * h + 1, 0);
    want[0] = want[h] = want[2 * h] = 1;
    if (cyclotomic(3, nu) != want) o.fail("Phi_3^" + std::to_string(nu) + "; ");
  }
  const IntFunction id = [](std::uint64_t i) { return i; };
  const IntFunction half = [](std::uint64_t i) { return (i + 1) / 2; };
  for (std::uint64_t n = 1; n <= kMetaLimit; ++n) {
    std::uint64_t root = 0;
    while (root * root < n) ++root;
    if (f_vee(id, n) != root) o.fail("n^vee(" + std::to_string(n) + "); ");
    std::uint64_t lg = 0;
    while ((std::uint64_t{1} << lg) < n) ++lg;
    if (f_star(half, n) != lg) o.fail("half^*(" + std::to_string(n) + "); ");
  }
  o.detail << "arguments <= " << kMetaLimit << ", brute-force totient <= " << kTotientBruteLimit;
}

// 10. The generalized driver reproduces the direct and Schonhage engines.
template <class F, class Engine>
void instance(const F& f, AlgoTag tag, Engine engine, std::size_t n_max, Outcome& o) {
  std::mt19937_64 rng(static_cast<unsigned>(tag) + 10);
  std::uniform_int_distribution<std::size_t> degree(1, n_max);
  const auto strategy = make_strategy(f, tag);
  for (std::size_t t = 0; t < kInstanceTrials; ++t) {
    const std::size_t n = degree(rng);
    const auto a = random_poly(f, n, rng);
    const auto b = random_poly(f, n, rng);
    CostLedger le, lg;
    const auto want = engine(f, a, b, le);
    const auto got = mul_generalized(f, a, b, strategy, lg);
    if (got != want) o.fail(algo_name(tag) + " " + f.spec() + " output n=" + std::to_string(n) + "; ");
    if (lg.nonscalar() != le.nonscalar() || lg.additive_and_scalar() != le.additive_and_scalar() ||
        lg.depth() != le.depth()) {
      o.fail(algo_name(tag) + " " + f.spec() + " ledger n=" + std::to_string(n) + "; ");
    }
  }
}

void generalized_instances(Outcome& o) {
  auto direct = [](const auto& k, auto a, auto b, CostLedger& l) {
    return mul_direct_dft(k, std::move(a), std::move(b), l);
  };
  auto ss = [](const auto& k, auto a, auto b, CostLedger& l) {
    return mul_schonhage_strassen(k, std::move(a), std::move(b), l);
  };
  instance(PrimeField(12289), AlgoTag::DirectDFT, direct, 600, o);
  instance(PrimeField(17), AlgoTag::DirectDFT, direct, 8, o);
  instance(RationalField(), AlgoTag::SchonhageStrassen, ss, 300, o);
  instance(PrimeField(5), AlgoTag::SchonhageStrassen, ss, 600, o);
  o.detail << kInstanceTrials << " instances per (engine, field), outputs and ledgers identical";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"naive transform closed-form counts", naive_transform_counts},
      {"Cooley-Tukey cost bound", cooley_tukey_bound},
      {"direct transform linear products", direct_linear_products},
      {"direct transform n log n", direct_n_log_n},
      {"Schonhage-Strassen n log n log log n and depth", schonhage_n_log_n_log_log_n},
      {"ternary variant 2 N2 products", char2_products},
      {"Rader transform", rader},
      {"field metadata closed forms", meta_closed_forms},
      {"generalized driver instances", generalized_instances},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
              << "): " << o.detail.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
