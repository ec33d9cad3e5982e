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

#include "dftmul/bench.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

#include "dftmul/cost_ledger.hpp"
#include "dftmul/errors.hpp"
#include "dftmul/field_meta.hpp"
#include "dftmul/fields.hpp"
#include "dftmul/generalized.hpp"
#include "dftmul/polymul.hpp"

namespace dftmul {

const std::vector<AlgoTag>& all_engines() {
  static const std::vector<AlgoTag> engines{AlgoTag::Naive,          AlgoTag::DirectDFT,
                                            AlgoTag::SchonhageStrassen, AlgoTag::SchonhageChar2,
                                            AlgoTag::CantorKaltofen, AlgoTag::Generalized};
  return engines;
}

std::vector<std::size_t> parse_degrees(const std::string& text) {
  std::vector<std::size_t> out;
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 9) {
      throw UsageError("malformed degree list '" + text + "'");
    }
    const std::size_t v = std::stoul(s);
    if (v < 1) throw UsageError("degrees must be >= 1");
    return v;
  };
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(item));
      continue;
    }
    const std::size_t lo = number(item.substr(0, dots));
    const std::size_t hi = number(item.substr(dots + 2));
    if (hi < lo) throw UsageError("empty degree range '" + item + "'");
    for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
  }
  if (out.empty()) throw UsageError("no degrees given");
  return out;
}

namespace {

const std::vector<AlgoTag>& selected(const BenchConfig& config) {
  return config.engines.empty() ? all_engines() : config.engines;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

template <GroundField F>
Coeffs<F> random_poly(const F& field, std::size_t n, std::mt19937_64& rng) {
  Coeffs<F> a(n);
  for (auto& c : a) c = field.random(rng);
  return a;
}

std::mt19937_64 cell_rng(const BenchConfig& config, const std::string& field, std::size_t n,
                         std::size_t trial) {
  const std::uint64_t h = fnv1a(field);
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

template <GroundField F>
Coeffs<F> run_engine(AlgoTag engine, const F& field, const Coeffs<F>& a, const Coeffs<F>& b,
                     CostLedger& ledger) {
  switch (engine) {
    case AlgoTag::Naive:
      return mul_naive(field, a, b, ledger);
    case AlgoTag::DirectDFT:
      return mul_direct_dft(field, a, b, ledger);
    case AlgoTag::SchonhageStrassen:
      return mul_schonhage_strassen(field, a, b, ledger);
    case AlgoTag::SchonhageChar2:
      return mul_schonhage_char2(field, a, b, ledger);
    case AlgoTag::CantorKaltofen:
      return mul_cantor_kaltofen(field, a, b, ledger);
    case AlgoTag::Generalized:
      return mul_generalized(field, a, b, make_strategy(field, AlgoTag::Generalized), ledger);
  }
  throw UsageError("unknown engine");
}

std::size_t algebra_dim(const CostLedger& ledger, std::size_t n) {
  for (const auto& s : ledger.splits()) {
    if (s.level == 1) return s.outer_dim;
  }
  return 2 * n - 1;
}

// One engine on one instance. Returns false and fills `reason` when the
// engine's preconditions exclude this field.
template <GroundField F>
bool try_engine(AlgoTag engine, const F& field, const Coeffs<F>& a, const Coeffs<F>& b,
                CostLedger& ledger, Coeffs<F>& out, std::string& reason) {
  try {
    out = run_engine(engine, field, a, b, ledger);
    return true;
  } catch (const CapabilityError& e) {
    reason = e.what();
  } catch (const DomainError& e) {
    reason = e.what();
  }
  return false;
}

}  // namespace

VerifyResult run_verify(const BenchConfig& config) {
  const auto& engines = selected(config);
  VerifyResult result;
  std::map<AlgoTag, bool> ever_run;
  for (const auto& spec : config.fields) {
    const AnyField any = parse_field_spec(spec);
    std::visit(
        [&](const auto& field) {
          using F = std::decay_t<decltype(field)>;
          for (std::size_t n : config.degrees) {
            std::vector<VerifyCell> cells(engines.size());
            for (std::size_t e = 0; e < engines.size(); ++e) {
              cells[e].engine = engines[e];
              cells[e].field = spec;
              cells[e].n = n;
            }
            for (std::size_t t = 0; t < config.trials; ++t) {
              auto rng = cell_rng(config, spec, n, t);
              const Coeffs<F> a = random_poly(field, n, rng);
              const Coeffs<F> b = random_poly(field, n, rng);
              CostLedger scratch;
              const Coeffs<F> ref = mul_naive(field, a, b, scratch);
              for (std::size_t e = 0; e < engines.size(); ++e) {
                VerifyCell& cell = cells[e];
                if (cell.skipped) continue;
                CostLedger ledger;
                Coeffs<F> got;
                if (!try_engine(engines[e], field, a, b, ledger, got, cell.reason)) {
                  cell.skipped = true;
                  continue;
                }
                ++cell.trials;
                if (got == ref) ++cell.passed;
              }
            }
            for (auto& cell : cells) {
              if (!cell.skipped) ever_run[cell.engine] = true;
              result.mismatches += cell.trials - cell.passed;
              result.cells.push_back(std::move(cell));
            }
          }
        },
        any);
  }
  for (AlgoTag t : engines) {
    (ever_run[t] ? result.engines_run : result.engines_skipped).push_back(t);
  }
  return result;
}

std::vector<std::string> run_bench(const BenchConfig& config) {
  const auto& engines = selected(config);
  using Key = std::tuple<std::string, std::string, std::size_t>;
  std::map<Key, std::string> rows;
  for (const auto& spec : config.fields) {
    const AnyField any = parse_field_spec(spec);
    std::visit(
        [&](const auto& field) {
          using F = std::decay_t<decltype(field)>;
          for (std::size_t n : config.degrees) {
            std::vector<std::pair<Coeffs<F>, Coeffs<F>>> inputs;
            std::vector<Coeffs<F>> refs;
            for (std::size_t t = 0; t < std::max<std::size_t>(config.trials, 1); ++t) {
              auto rng = cell_rng(config, spec, n, t);
              auto a = random_poly(field, n, rng);
              auto b = random_poly(field, n, rng);
              CostLedger scratch;
              refs.push_back(mul_naive(field, a, b, scratch));
              inputs.emplace_back(std::move(a), std::move(b));
            }
            for (AlgoTag engine : engines) {
              std::string status = "ok";
              std::string reason;
              CostLedger first;
              std::size_t dim = 0;
              for (std::size_t t = 0; t < inputs.size(); ++t) {
                CostLedger ledger;
                Coeffs<F> got;
                if (!try_engine(engine, field, inputs[t].first, inputs[t].second, ledger, got,
                                reason)) {
                  status = "skipped";
                  break;
                }
                if (got != refs[t]) status = "mismatch";
                if (t == 0) {
                  dim = algebra_dim(ledger, n);
                  first = std::move(ledger);
                }
              }
              if (status == "skipped") first = CostLedger();
              rows[{algo_name(engine), spec, n}] =
                  csv_row(status, algo_name(engine), spec, n, dim, first.report(n));
            }
          }
        },
        any);
  }
  std::vector<std::string> out{csv_header()};
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  return out;
}

std::string explain_plans(const BenchConfig& config) {
  std::ostringstream out;
  for (const auto& spec : config.fields) {
    const AnyField any = parse_field_spec(spec);
    std::visit(
        [&](const auto& field) {
          for (AlgoTag engine : selected(config)) {
            for (std::size_t n : config.degrees) {
              out << "[" << algo_name(engine) << " " << spec << " n=" << n << "]\n";
              if (engine == AlgoTag::Naive) {
                out << "  level 1: schoolbook\n";
                continue;
              }
              try {
                const auto strategy = make_strategy(field, engine);
                out << strategy.describe(n);
                const auto plan = strategy.top(n);
                if (!plan) continue;
                std::size_t root_order = 0;
                switch (plan->inner.kind) {
                  case RingKind::Ground:
                    break;
                  case RingKind::Fermat:
                    root_order = 2 * plan->inner.param;
                    break;
                  case RingKind::Trinomial:
                    root_order = 3 * plan->inner.param;
                    break;
                  case RingKind::Cyclotomic:
                    root_order = *nt::checked_pow(plan->inner.param, plan->inner.exponent);
                    break;
                }
                const RootAvailable avail = [&](std::size_t k) {
                  return root_order == 0 ? field.has_root(k) : root_order % k == 0;
                };
                std::istringstream tree(render_plan(plan_dft(plan->transform_order, avail)));
                for (std::string line; std::getline(tree, line);) out << "  " << line << "\n";
              } catch (const std::exception& e) {
                out << "  not applicable: " << e.what() << "\n";
              }
            }
          }
        },
        any);
  }
  return out.str();
}

int cmd_verify(const BenchConfig& config, std::ostream& out) {
  if (config.explain_plan) out << explain_plans(config);
  const VerifyResult r = run_verify(config);
  for (const auto& cell : r.cells) {
    out << std::left << std::setw(9)
        << (cell.skipped ? "skipped" : cell.passed == cell.trials ? "ok" : "MISMATCH")
        << std::setw(11) << algo_name(cell.engine) << std::setw(10) << cell.field << "n="
        << std::setw(6) << cell.n;
    if (cell.skipped) {
      out << cell.reason << "\n";
    } else {
      out << cell.passed << "/" << cell.trials << "\n";
    }
  }
  out << "engines run:";
  for (AlgoTag t : r.engines_run) out << " " << algo_name(t);
  out << "\nengines skipped:";
  for (AlgoTag t : r.engines_skipped) out << " " << algo_name(t);
  out << "\n" << r.mismatches << " mismatches\n";
  return r.mismatches == 0 ? 0 : 1;
}

int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& log) {
  if (config.explain_plan) log << explain_plans(config);
  int status = 0;
  for (const auto& row : run_bench(config)) {
    if (row.rfind("mismatch,", 0) == 0) status = 1;
    out << row << "\n";
  }
  return status;
}

int cmd_meta(const BenchConfig& config, std::ostream& out) {
  for (const auto& spec : config.fields) {
    const FieldInfo info = field_info(parse_field_spec(spec));
    if (config.csv) {
      out << "field,n,phi,f,suitable,constant\n";
    } else {
      out << "field " << spec << "\n"
          << std::right << std::setw(8) << "n" << std::setw(10) << "phi(n)" << std::setw(10)
          << "f(n)" << std::setw(12) << "suitable" << std::setw(10) << "D/nlogn" << "\n";
    }
    std::size_t n_max = 1;
    for (std::size_t n : config.degrees) {
      n_max = std::max(n_max, n);
      const std::uint64_t phi = totient(n);
      std::string f = "undefined";
      std::string suitable = "undefined";
      std::string constant = "-";
      try {
        f = std::to_string(degree_function(info, n));
        const auto cert = certify_suitable(info, n, config.suitability_c);
        suitable = cert.suitable ? "yes" : "no";
        std::ostringstream c;
        c << std::fixed << std::setprecision(3) << cert.constant;
        constant = c.str();
      } catch (const DomainError&) {
      }
      if (config.csv) {
        out << spec << "," << n << "," << phi << "," << f << "," << suitable << "," << constant
            << "\n";
      } else {
        out << std::setw(8) << n << std::setw(10) << phi << std::setw(10) << f << std::setw(12)
            << suitable << std::setw(10) << constant << "\n";
      }
    }
    if (config.csv) continue;
    out << "suitability constant c = " << config.suitability_c << " (D(n) <= c n log2 n over k(w_n))\n";
    for (const auto& cand : propose_order_sequences(info, n_max)) {
      out << "order sequence candidate " << cand.family << ": sparseness " << std::fixed
          << std::setprecision(2) << cand.sparseness
          << (cand.divisibility ? ", divisibility chain holds" : ", divisibility chain broken")
          << (cand.increasing ? "" : ", not increasing") << "\n";
      for (const auto& e : cand.entries) {
        out << "    n=" << e.n << " = " << e.n_prime << " * " << e.n_second
            << "  f(n'')=" << (e.f_value == 0 ? std::string("undefined") : std::to_string(e.f_value))
            << "  D(n'')/(n'' log n'')=" << std::setprecision(3) << e.constant << "\n";
      }
      out.unsetf(std::ios::fixed);
    }
  }
  return 0;
}

}  // namespace dftmul
