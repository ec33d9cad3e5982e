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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "dftmul/bench.hpp"
#include "dftmul/errors.hpp"

namespace {

constexpr int kUsageExit = 2;

struct Options {
  std::vector<std::string> engines;
  std::vector<std::string> fields{"fp:17"};
  std::string degrees = "1,2,4,8,16";
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::string out;
  bool explain_plan = false;
  double c = 3.0;
  bool csv = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--engine", o.engines, "naive, dft, ss, schonhage2, ck or auto (repeatable)");
  cmd->add_option("--field", o.fields, "fp:<p>, fq:<p>^<m> or q (repeatable)");
  cmd->add_option("--degrees,--n", o.degrees, "degree list, e.g. 4 or 1,2,8 or 1..64");
  cmd->add_option("--seed", o.seed, "RNG seed");
  cmd->add_option("--out", o.out, "write output to this path instead of stdout");
}

dftmul::BenchConfig to_config(const Options& o) {
  dftmul::BenchConfig config;
  for (const auto& e : o.engines) config.engines.push_back(dftmul::parse_algo(e));
  config.fields = o.fields;
  config.degrees = dftmul::parse_degrees(o.degrees);
  if (o.trials < 1) throw dftmul::UsageError("--trials must be >= 1");
  config.trials = o.trials;
  config.seed = o.seed;
  config.explain_plan = o.explain_plan;
  config.suitability_c = o.c;
  config.csv = o.csv;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact DFT-based polynomial multiplication: verification, benchmarks, field data"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "check every engine against the schoolbook product");
  add_common(verify, o);
  verify->add_option("--trials", o.trials, "random instances per cell");
  verify->add_flag("--explain-plan", o.explain_plan, "print the chosen plans first");

  auto* bench = app.add_subcommand("bench", "emit operation-count CSV rows");
  add_common(bench, o);
  bench->add_option("--trials", o.trials, "instances checked per cell; counts come from the first");
  bench->add_flag("--explain-plan", o.explain_plan, "print the chosen plans to stderr");

  auto* meta = app.add_subcommand("meta", "degree function, suitability and order sequences");
  add_common(meta, o);
  meta->add_option("--c", o.c, "suitability constant");
  meta->add_flag("--csv", o.csv, "CSV instead of aligned text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageExit;
  }

  try {
    const dftmul::BenchConfig config = to_config(o);
    std::ofstream file;
    if (!o.out.empty()) {
      file.open(o.out);
      if (!file) throw dftmul::UsageError("cannot open '" + o.out + "' for writing");
    }
    std::ostream& out = o.out.empty() ? std::cout : file;
    if (verify->parsed()) return dftmul::cmd_verify(config, out);
    if (bench->parsed()) return dftmul::cmd_bench(config, out, std::cerr);
    return dftmul::cmd_meta(config, out);
  } catch (const dftmul::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageExit;
  } catch (const dftmul::DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageExit;
  }
}
