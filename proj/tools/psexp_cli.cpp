// Copyright 2026 The psexp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// psexp: exponentials, inverses and benchmarks of truncated power series.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
// 3 bad constant term, 4 unsupported size.

#include <bit>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "psexp/psexp.hpp"

namespace {

enum Exit : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kConstantTerm = 3,
  kUnsupportedSize = 4,
};

struct SeriesArgs {
  std::string input;
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> prime;
  bool ledger = false;
};

struct BenchArgs {
  std::size_t n_min = 1u << 10;
  std::size_t n_max = 1u << 18;
  int reps = 9;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> prime;
  bool with_ops = false;
  std::string output;
};

struct VerifyArgs {
  std::size_t n_max = 1024;
  std::uint64_t seed = 1;
  bool inject_fault = false;
};

psexp::FourierPrime select_prime(const std::optional<std::uint64_t>& p) {
  return p ? psexp::FourierPrime::make(*p) : psexp::FourierPrime::default_prime();
}

psexp::SeriesFile load(const std::string& path, const psexp::FourierPrime& F) {
  psexp::SeriesFile file;
  if (path == "-") {
    file = psexp::read_series_file(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw psexp::ParseError("cannot open " + path);
    file = psexp::read_series_file(in);
  }
  if (file.p != F.modulus()) {
    throw psexp::ParseError("file modulus " + std::to_string(file.p) + " does not match p = " +
                            std::to_string(F.modulus()) + " (use --prime)");
  }
  return file;
}

// Root table able to serve transforms of length 2 * bit_ceil(n).
psexp::RootTable table_for(std::size_t n, const psexp::FourierPrime& F) {
  const std::uint64_t len = 2 * std::bit_ceil(std::max<std::uint64_t>(n, 1));
  if (len > F.max_root_order()) {
    throw psexp::UnsupportedLength("precision " + std::to_string(n) + " needs roots of order " +
                                   std::to_string(len) + " but p has only 2^" +
                                   std::to_string(F.two_adicity()));
  }
  return psexp::RootTable(F, static_cast<std::size_t>(len));
}

void report_ledger(const psexp::OpLedger& ledger, std::size_t n, const psexp::RootTable& table) {
  std::cerr << "field_muls=" << ledger.field_muls() << '\n'
            << "field_adds=" << ledger.field_adds() << '\n'
            << "field_ops=" << ledger.total_ops() << '\n'
            << "butterfly_ops=" << ledger.butterfly_ops() << '\n'
            << "transforms_by_length=";
  bool first = true;
  for (const auto& [len, count] : ledger.transforms_by_length()) {
    std::cerr << (first ? "" : ",") << len << ':' << count;
    first = false;
  }
  std::cerr << '\n';
  if (n >= 2) {
    std::cerr << "E(n)=" << psexp::measure_E(n, table) << '\n'
              << "bound=" << psexp::cost_bound_x4(n, table) / 4.0 << '\n';
  }
}

int cmd_exp(const SeriesArgs& args) {
  const auto F = select_prime(args.prime);
  const auto file = load(args.input, F);
  const std::size_t n = args.n.value_or(file.series.precision());
  if (!(file.series.coeff(0) == F.zero())) throw psexp::NonzeroConstantTerm();
  if (n == 0) throw psexp::UnsupportedLength("precision must be at least 1");
  const auto table = table_for(n, F);
  const auto result = psexp::exp_any(file.series, n, table);
  std::ostringstream out;
  psexp::write_series_file(out, F.modulus(), result.f);
  std::cout << out.str();
  if (args.ledger) report_ledger(result.ledger, std::bit_ceil(n), table);
  return kOk;
}

int cmd_inv(const SeriesArgs& args) {
  const auto F = select_prime(args.prime);
  const auto file = load(args.input, F);
  const std::size_t n = args.n.value_or(file.series.precision());
  if (file.series.coeff(0) == F.zero()) throw psexp::NotInvertible();
  if (n == 0) throw psexp::UnsupportedLength("precision must be at least 1");
  const auto table = table_for(n, F);
  const std::size_t padded = std::bit_ceil(n);
  psexp::OpLedger ledger;
  const auto g = psexp::truncate(
      psexp::newton_inv(psexp::resized(file.series, padded), padded, table, ledger), n);
  std::ostringstream out;
  psexp::write_series_file(out, F.modulus(), g);
  std::cout << out.str();
  if (args.ledger) report_ledger(ledger, 0, table);
  return kOk;
}

int cmd_bench(const BenchArgs& args) {
  const auto F = select_prime(args.prime);
  const auto records = psexp::run_bench(
      {.n_min = args.n_min, .n_max = args.n_max, .reps = args.reps, .seed = args.seed}, F);
  const std::string csv = psexp::emit_csv(records, args.with_ops);
  if (args.output.empty() || args.output == "-") {
    std::cout << csv;
  } else {
    std::ofstream out(args.output);
    if (!out) throw psexp::InvalidArgument("cannot write " + args.output);
    out << csv;
  }
  return kOk;
}

int cmd_verify(const VerifyArgs& args) {
  const auto results = psexp::run_verification(
      {.n_max = args.n_max, .seed = args.seed, .inject_fault = args.inject_fault}, std::cout);
  return psexp::all_passed(results) ? kOk : kVerifyFailed;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const psexp::NonzeroConstantTerm*>(&e) ||
      dynamic_cast<const psexp::NotInvertible*>(&e)) {
    return kConstantTerm;
  }
  if (dynamic_cast<const psexp::PrecisionTooLarge*>(&e) ||
      dynamic_cast<const psexp::UnsupportedLength*>(&e)) {
    return kUnsupportedSize;
  }
  if (dynamic_cast<const psexp::ParseError*>(&e) ||
      dynamic_cast<const psexp::InvalidPrime*>(&e) ||
      dynamic_cast<const psexp::InvalidArgument*>(&e)) {
    return kUsage;
  }
  return kVerifyFailed;
}

void add_series_options(CLI::App* cmd, SeriesArgs& args) {
  cmd->add_option("input", args.input, "series file ('-' for stdin)")->required();
  cmd->add_option("--n", args.n, "output precision (default: the file's n)");
  cmd->add_option("--prime", args.prime, "Fourier prime modulus (default 998244353)");
  cmd->add_flag("--ledger", args.ledger, "print operation counts to stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponentials of truncated power series over a Fourier prime field"};
  app.require_subcommand(1);

  SeriesArgs exp_args, inv_args;
  BenchArgs bench_args;
  VerifyArgs verify_args;

  auto* exp_cmd = app.add_subcommand("exp", "exp(h) mod x^n");
  add_series_options(exp_cmd, exp_args);

  auto* inv_cmd = app.add_subcommand("inv", "1/f mod x^n by Newton iteration");
  add_series_options(inv_cmd, inv_args);

  auto* bench_cmd = app.add_subcommand("bench", "time exp against multiplication, CSV output");
  bench_cmd->add_option("--nmin", bench_args.n_min, "smallest n (power of two, >= 64)");
  bench_cmd->add_option("--nmax", bench_args.n_max, "largest n (power of two)");
  bench_cmd->add_option("--reps", bench_args.reps, "timed repetitions per size (>= 5)");
  bench_cmd->add_option("--seed", bench_args.seed, "random seed");
  bench_cmd->add_option("--prime", bench_args.prime, "Fourier prime modulus");
  bench_cmd->add_flag("--with-ops", bench_args.with_ops, "append ledger op-count columns");
  bench_cmd->add_option("-o,--output", bench_args.output, "write CSV here instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "run the oracle suite");
  verify_cmd->add_option("--nmax", verify_args.n_max, "largest precision checked");
  verify_cmd->add_option("--seed", verify_args.seed, "random seed");
  verify_cmd->add_flag("--inject-fault", verify_args.inject_fault)->group("");  // test only

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*exp_cmd) return cmd_exp(exp_args);
    if (*inv_cmd) return cmd_inv(inv_args);
    if (*bench_cmd) return cmd_bench(bench_args);
    if (*verify_cmd) return cmd_verify(verify_args);
  } catch (const std::exception& e) {
    std::cerr << "psexp: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kUsage;
}
