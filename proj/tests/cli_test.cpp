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

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "psexp/bench.hpp"
#include "psexp/oracle.hpp"
#include "psexp/series_io.hpp"

namespace psexp {
namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(PSEXP_TEST_DATA) + "/" + name; }

Run run(const std::string& args) {
  const auto err_path = std::filesystem::temp_directory_path() /
                        ("psexp_cli_err_" + std::to_string(::getpid()) + ".txt");
  const std::string cmd = std::string(PSEXP_CLI) + " " + args + " 2>" + err_path.string();
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err(err_path);
  r.err.assign(std::istreambuf_iterator<char>(err), {});
  std::filesystem::remove(err_path);
  return r;
}

SeriesFile parse(const std::string& text) {
  std::istringstream in(text);
  return read_series_file(in);
}

TEST(CliTest, ExpOfX) {
  const auto r = run("exp " + data("x.txt"));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "998244353 4\n1\n1\n499122177\n166374059\n");
}

TEST(CliTest, ExpOfZero) {
  const auto r = run("exp " + data("zero8.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "998244353 8\n1\n0\n0\n0\n0\n0\n0\n0\n");
}

TEST(CliTest, ExpPrecisionOverride) {
  const auto r = run("exp " + data("x.txt") + " --n 5");
  ASSERT_EQ(r.code, 0);
  const auto file = parse(r.out);
  const auto& F = FourierPrime::default_prime();
  EXPECT_EQ(file.series, oracle::exp_naive(Series::from_integers(F, {0, 1}), 5, F));
}

TEST(CliTest, ExpFromStdin) {
  const auto r = run("exp - < " + data("x.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "998244353 4\n1\n1\n499122177\n166374059\n");
}

TEST(CliTest, ExpLedgerGoesToStderr) {
  const auto r = run("exp " + data("zero8.txt") + " --ledger");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "998244353 8\n1\n0\n0\n0\n0\n0\n0\n0\n");
  EXPECT_NE(r.err.find("field_muls="), std::string::npos);
  EXPECT_NE(r.err.find("field_adds="), std::string::npos);
  EXPECT_NE(r.err.find("transforms_by_length="), std::string::npos);
}

TEST(CliTest, ExpNonzeroConstantTerm) {
  const auto r = run("exp " + data("nonzero_constant.txt"));
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(CliTest, ExpTooLarge) {
  const auto r = run("exp " + data("x.txt") + " --n 8388608");
  EXPECT_EQ(r.code, 4);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliTest, ParseErrors) {
  EXPECT_EQ(run("exp " + data("truncated.txt")).code, 2);
  EXPECT_EQ(run("exp " + data("does_not_exist.txt")).code, 2);
  EXPECT_EQ(run("exp " + data("other_prime.txt")).code, 2);
  EXPECT_EQ(run("exp " + data("x.txt") + " --prime 15").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(CliTest, PrimeOverride) {
  const auto r = run("exp " + data("other_prime.txt") + " --prime 7681 --n 4");
  EXPECT_EQ(r.code, 0) << r.err;
  const auto G = FourierPrime::make(7681);
  const auto file = parse(r.out);
  EXPECT_EQ(file.p, 7681u);
  EXPECT_EQ(file.series, oracle::exp_naive(Series::from_integers(G, {0, 1}), 4, G));
}

TEST(CliTest, InvGeometricSeries) {
  const auto r = run("inv " + data("one_minus_x.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "998244353 4\n1\n1\n1\n1\n");
  EXPECT_EQ(run("inv " + data("one.txt") + " --n 4").out, "998244353 4\n1\n0\n0\n0\n");
}

TEST(CliTest, InvZeroConstantTerm) {
  const auto r = run("inv " + data("x.txt"));
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliTest, InvRandomProductCheck) {
  const auto& F = FourierPrime::default_prime();
  std::mt19937_64 rng(77);
  Series f = random_series(37, rng, F);
  f.mutable_coeffs()[0] = Fe(9);
  const auto path = std::filesystem::temp_directory_path() / "psexp_cli_inv_input.txt";
  {
    std::ofstream out(path);
    write_series_file(out, F.modulus(), f);
  }
  const auto r = run("inv " + path.string());
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto g = parse(r.out).series;
  EXPECT_EQ(truncate(oracle::mul_naive(f, g, F), 37), Series::one(37));
}

TEST(CliTest, BenchSingleRow) {
  const auto r = run("bench --nmin 256 --nmax 256 --reps 5");
  EXPECT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].n, 256u);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,t_mul_ns,t_exp_ns,ratio,reps");
}

TEST(CliTest, BenchOpColumnsReproducible) {
  const auto a = parse_csv(run("bench --nmin 64 --nmax 128 --reps 5 --seed 4 --with-ops").out);
  const auto b = parse_csv(run("bench --nmin 64 --nmax 128 --reps 5 --seed 4 --with-ops").out);
  ASSERT_EQ(a.size(), 2u);
  ASSERT_EQ(b.size(), 2u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_GT(a[i].ops_exp, 0u);
    EXPECT_EQ(a[i].ops_mul, b[i].ops_mul);
    EXPECT_EQ(a[i].ops_exp, b[i].ops_exp);
  }
}

TEST(CliTest, BenchToFile) {
  const auto path = std::filesystem::temp_directory_path() / "psexp_cli_bench.csv";
  const auto r = run("bench --nmin 64 --nmax 64 --reps 5 -o " + path.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  std::filesystem::remove(path);
  EXPECT_EQ(parse_csv(text).size(), 1u);
}

TEST(CliTest, BenchBadSizes) {
  EXPECT_EQ(run("bench --nmin 100 --nmax 256").code, 2);
  EXPECT_EQ(run("bench --nmin 64 --nmax 128 --reps 2").code, 2);
  EXPECT_EQ(run("bench --nmin 64 --nmax 8388608").code, 4);
}

TEST(CliTest, Verify) {
  const auto ok = run("verify --nmax 2");
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("PASS exp.equivalence"), std::string::npos);
  EXPECT_EQ(ok.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run("verify --nmax 128 --seed 3").code, 0);
  const auto bad = run("verify --nmax 32 --inject-fault");
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
}

}  // namespace
}  // namespace psexp
