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

#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "psexp/error.hpp"
#include "psexp/exponential.hpp"
#include "psexp/field.hpp"
#include "psexp/series.hpp"
#include "psexp/transform.hpp"

namespace psexp {

struct BenchRecord {
  std::size_t n = 0;
  std::int64_t t_mul_ns = 0;  // median, one full degree-<n product
  std::int64_t t_exp_ns = 0;  // median, exp_fast at precision n
  double ratio = 0.0;         // t_exp / t_mul
  int reps = 0;
  std::uint64_t ops_mul = 0;  // ledger total of the product
  std::uint64_t ops_exp = 0;  // ledger total of exp_fast

  double op_ratio() const { return ops_mul == 0 ? 0.0 : double(ops_exp) / double(ops_mul); }
};

struct BenchOptions {
  std::size_t n_min = 1u << 10;
  std::size_t n_max = 1u << 18;
  int reps = 9;
  std::uint64_t seed = 1;
};

inline Series random_series(std::size_t len, std::mt19937_64& rng, const FourierPrime& F,
                            bool zero_constant = false) {
  std::uniform_int_distribution<std::uint32_t> dist(0, F.modulus() - 1);
  std::vector<Fe> c(len);
  for (auto& x : c) x = Fe(dist(rng));
  if (zero_constant && len > 0) c[0] = F.zero();
  return Series(std::move(c));
}

namespace detail {

template <typename Fn>
std::int64_t median_ns(int reps, Fn&& fn) {
  fn();  // warmup
  std::vector<std::int64_t> samples;
  samples.reserve(reps);
  for (int i = 0; i < reps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  const std::int64_t med =
      samples.size() % 2 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
  return std::max<std::int64_t>(med, 1);
}

inline void validate_bench(const BenchOptions& opt, const FourierPrime& F) {
  if (!std::has_single_bit(opt.n_min) || !std::has_single_bit(opt.n_max)) {
    throw InvalidArgument("benchmark bounds must be powers of two");
  }
  if (opt.n_min < 64) throw InvalidArgument("benchmark n_min must be at least 64");
  if (opt.n_min > opt.n_max) throw InvalidArgument("benchmark n_min exceeds n_max");
  if (opt.reps < 5) throw InvalidArgument("benchmark needs at least 5 repetitions");
  if (2 * static_cast<std::uint64_t>(opt.n_max) > F.max_root_order()) {
    throw PrecisionTooLarge("n_max = " + std::to_string(opt.n_max) +
                            " needs transforms of length " + std::to_string(2 * opt.n_max) +
                            " beyond 2^" + std::to_string(F.two_adicity()));
  }
}

}  // namespace detail

// Single-threaded by contract. For each n = n_min, 2 n_min, ..., n_max:
// median wall time of a full product of two random degree-<n polynomials
// and of exp_fast at precision n, plus the ledger totals of each.
inline std::vector<BenchRecord> run_bench(const BenchOptions& opt, const FourierPrime& F) {
  detail::validate_bench(opt, F);
  const RootTable table(F, 2 * opt.n_max);
  std::mt19937_64 rng(opt.seed);
  std::vector<BenchRecord> out;
  volatile std::uint32_t sink = 0;
  for (std::size_t n = opt.n_min; n <= opt.n_max; n *= 2) {
    const Series a = random_series(n, rng, F);
    const Series b = random_series(n, rng, F);
    const Series h = random_series(n, rng, F, /*zero_constant=*/true);

    BenchRecord rec{.n = n, .reps = opt.reps};
    {
      OpLedger ledger;
      mul_fft(a, b, table, ledger);
      rec.ops_mul = ledger.total_ops();
      rec.ops_exp = exp_fast(h, n, table).ledger.total_ops();
    }
    rec.t_mul_ns = detail::median_ns(opt.reps, [&] {
      OpLedger ledger;
      sink = sink + mul_fft(a, b, table, ledger)[n - 1].v;
    });
    rec.t_exp_ns = detail::median_ns(opt.reps, [&] {
      sink = sink + exp_fast(h, n, table).f[n - 1].v;
    });
    rec.ratio = double(rec.t_exp_ns) / double(rec.t_mul_ns);
    out.push_back(rec);
  }
  return out;
}

// Header `n,t_mul_ns,t_exp_ns,ratio,reps`, ratio with 4 decimals. With
// `with_ops`, three ledger columns follow: ops_mul, ops_exp, op_ratio.
inline std::string emit_csv(const std::vector<BenchRecord>& records, bool with_ops = false) {
  if (records.empty()) throw EmptyInput("no benchmark records to emit");
  std::ostringstream os;
  os << "n,t_mul_ns,t_exp_ns,ratio,reps";
  if (with_ops) os << ",ops_mul,ops_exp,op_ratio";
  os << '\n' << std::fixed << std::setprecision(4);
  for (const auto& r : records) {
    os << r.n << ',' << r.t_mul_ns << ',' << r.t_exp_ns << ',' << r.ratio << ',' << r.reps;
    if (with_ops) os << ',' << r.ops_mul << ',' << r.ops_exp << ',' << r.op_ratio();
    os << '\n';
  }
  return os.str();
}

inline std::vector<BenchRecord> parse_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty CSV");
  const bool with_ops = line == "n,t_mul_ns,t_exp_ns,ratio,reps,ops_mul,ops_exp,op_ratio";
  if (!with_ops && line != "n,t_mul_ns,t_exp_ns,ratio,reps") {
    throw ParseError("unexpected CSV header: " + line);
  }
  std::vector<BenchRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (cells.size() != (with_ops ? 8u : 5u)) throw ParseError("bad CSV row: " + line);
    try {
      BenchRecord r;
      r.n = std::stoull(cells[0]);
      r.t_mul_ns = std::stoll(cells[1]);
      r.t_exp_ns = std::stoll(cells[2]);
      r.ratio = std::stod(cells[3]);
      r.reps = std::stoi(cells[4]);
      if (with_ops) {
        r.ops_mul = std::stoull(cells[5]);
        r.ops_exp = std::stoull(cells[6]);
      }
      out.push_back(r);
    } catch (const std::exception&) {
      throw ParseError("bad CSV row: " + line);
    }
  }
  return out;
}

}  // namespace psexp
