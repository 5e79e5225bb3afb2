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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "psexp/bench.hpp"
#include "psexp/error.hpp"
#include "psexp/exponential.hpp"
#include "psexp/field.hpp"
#include "psexp/oracle.hpp"
#include "psexp/series.hpp"
#include "psexp/transform.hpp"

namespace psexp {

namespace detail {

inline Series span_series(std::span<const Fe> c) { return Series(std::vector<Fe>(c.begin(), c.end())); }

}  // namespace detail

// Recomputes the quantities of one exp_fast pass with the brute-force
// oracles and compares. Returns a description of the first mismatch.
inline std::optional<std::string> check_pass_identities(const PassView& pv, const Series& h,
                                                        const FourierPrime& F) {
  const std::size_t m = pv.m;
  const std::string at = " at m = " + std::to_string(m);
  const Series f = detail::span_series(pv.f);
  const Series g = detail::span_series(pv.g);

  // Loop invariant on entry.
  if (!(f == oracle::exp_naive(h, m, F))) return "f != exp(h) mod x^m" + at;
  if (!(g == oracle::inv_naive(f, m / 2, F))) return "g != 1/f mod x^(m/2)" + at;
  if (pv.g_dft.size() != m ||
      !(std::vector<Fe>(pv.g_dft.begin(), pv.g_dft.end()) == oracle::dft_naive(g, m, F))) {
    return "cached DFT(g, m) is stale" + at;
  }
  const Series g_next = detail::span_series(pv.g_next);
  if (!(g_next == oracle::inv_naive(f, m, F))) return "updated g != 1/f mod x^m" + at;

  const Series q = detail::span_series(pv.q);
  if (!(q == truncate(oracle::derivative_naive(resized(h, m), F), m - 1))) {
    return "q != h' mod x^(m-1)" + at;
  }

  // x (f' - q f) = x^m s.
  const Series fq = oracle::mul_naive(f, q, F);
  const Series fp = oracle::derivative_naive(f, F);
  std::vector<Fe> lhs(2 * m + 1);
  for (std::size_t i = 0; i < 2 * m; ++i) lhs[i + 1] = F.sub(fp.coeff(i), fq.coeff(i));
  for (std::size_t i = 0; i < m; ++i) {
    if (!(lhs[i] == F.zero())) return "x(f' - qf) has a nonzero low coefficient" + at;
  }
  if (!(lhs[2 * m] == F.zero())) return "x(f' - qf) has degree >= 2m" + at;
  for (std::size_t i = 0; i < m; ++i) {
    if (!(lhs[m + i] == pv.s[i])) return "x(f' - qf) != x^m s" + at;
  }

  // w from the textbook iteration; x^m u = (h - integral(w)) mod x^2m.
  std::vector<Fe> diff(2 * m - 1);
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = F.sub(fp.coeff(i), fq.coeff(i));
  const Series gw = oracle::mul_naive(g_next, Series(diff), F);
  std::vector<Fe> w(2 * m - 1);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = F.add(q.coeff(i), gw.coeff(i));
  const Series iw = oracle::integral_naive(Series(w), F);
  std::vector<Fe> residual(2 * m);
  for (std::size_t i = 0; i < 2 * m; ++i) residual[i] = F.sub(h.coeff(i), iw.coeff(i));
  for (std::size_t i = 0; i < m; ++i) {
    if (!(residual[i] == F.zero())) return "h - integral(w) is nonzero mod x^m" + at;
    if (!(residual[m + i] == pv.u[i])) return "x^m u != (h - integral(w)) mod x^2m" + at;
  }
  const Series fr = oracle::mul_naive(f, Series(residual), F);
  for (std::size_t i = 0; i < m; ++i) {
    if (!(fr.coeff(m + i) == pv.v[i])) return "x^m v != f (h - integral(w)) mod x^2m" + at;
  }
  return std::nullopt;
}

struct VerifyOptions {
  std::size_t n_max = 1024;
  std::uint64_t seed = 1;
  int samples = 4;            // random series per precision
  bool inject_fault = false;  // corrupts the fast result; negative control
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the oracle suite up to n_max and prints one PASS/FAIL line per check.
inline std::vector<CheckResult> run_verification(const VerifyOptions& opt, std::ostream& out,
                                                 const FourierPrime& F =
                                                     FourierPrime::default_prime()) {
  if (opt.n_max == 0 || !std::has_single_bit(opt.n_max)) {
    throw InvalidArgument("verify --nmax must be a power of two");
  }
  if (2 * static_cast<std::uint64_t>(opt.n_max) > F.max_root_order()) {
    throw PrecisionTooLarge("verify --nmax too large for this prime");
  }
  const std::size_t table_len = std::max<std::size_t>(2 * opt.n_max, 2);
  const RootTable table(F, table_len);
  std::mt19937_64 rng(opt.seed);
  std::vector<CheckResult> results;

  auto run = [&](const std::string& name, const std::function<std::optional<std::string>()>& body) {
    CheckResult r;
    r.name = name;
    try {
      const auto failure = body();
      r.passed = !failure.has_value();
      if (failure) r.detail = *failure;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) out << ": " << r.detail;
    out << '\n';
    results.push_back(std::move(r));
  };

  run("field.axioms", [&]() -> std::optional<std::string> {
    std::uniform_int_distribution<std::uint32_t> d(0, F.modulus() - 1);
    for (int i = 0; i < 2000; ++i) {
      const Fe a(d(rng)), b(d(rng)), c(d(rng));
      if (!(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)))) return "distributivity";
      if (a.v != 0 && !(F.mul(a, F.inv(a)) == F.one())) return "inverse";
    }
    for (std::uint64_t m = 1; 2 * m <= F.max_root_order(); m *= 2) {
      const Fe w = F.root_of_order(2 * m);
      if (!(F.root_of_order(m) == F.mul(w, w))) return "root chain at m = " + std::to_string(m);
    }
    return std::nullopt;
  });

  run("transform.naive_and_roundtrip", [&]() -> std::optional<std::string> {
    for (std::size_t m = 1; m <= table_len; m *= 2) {
      const Series f = random_series(m, rng, F);
      OpLedger ledger;
      const auto vals = dft(f.coeffs(), m, table, ledger);
      if (m <= 512 && !(vals == oracle::dft_naive(f, m, F))) return "dft mismatch at m = " + std::to_string(m);
      if (!(idft(vals, m, table, ledger) == std::vector<Fe>(f.coeffs().begin(), f.coeffs().end()))) {
        return "round trip at m = " + std::to_string(m);
      }
    }
    return std::nullopt;
  });

  run("transform.interleave", [&]() -> std::optional<std::string> {
    for (std::size_t m = 1; 2 * m <= table_len; m *= 2) {
      const Series f = random_series(2 * m, rng, F);
      OpLedger ledger;
      const auto merged = merge_dft(dft(f.coeffs(), m, table, ledger),
                                    dft_twisted(f.coeffs(), m, table, ledger));
      if (!(merged == dft(f.coeffs(), 2 * m, table, ledger))) {
        return "merge(DFT, DFT') != DFT(., 2m) at m = " + std::to_string(m);
      }
    }
    return std::nullopt;
  });

  run("transform.cost", [&]() -> std::optional<std::string> {
    for (std::size_t m = 1; m <= table_len; m *= 2) {
      const Series f = random_series(m, rng, F);
      OpLedger ledger;
      dft(f.coeffs(), m, table, ledger);
      if (ledger.total_ops() != measure_E(m, table)) return "ledger != E(m) at m = " + std::to_string(m);
      if (2 * m <= table_len && measure_E(2 * m, table) < 2 * measure_E(m, table)) {
        return "E(2m) < 2 E(m) at m = " + std::to_string(m);
      }
    }
    return std::nullopt;
  });

  run("series.mul_and_inverse", [&]() -> std::optional<std::string> {
    for (std::size_t n = 1; n <= opt.n_max; n *= 2) {
      const Series a = random_series(n, rng, F), b = random_series(n, rng, F);
      if (n <= 512 && !(mul_fft(a, b, table) == oracle::mul_naive(a, b, F))) {
        return "mul_fft mismatch at n = " + std::to_string(n);
      }
      Series f = random_series(n, rng, F);
      f.mutable_coeffs()[0] = F.one();
      const Series g = newton_inv(f, n, table);
      if (!(truncate(mul_fft(f, g, table), n) == Series::one(n))) {
        return "f * newton_inv(f) != 1 at n = " + std::to_string(n);
      }
    }
    return std::nullopt;
  });

  run("exp.equivalence", [&]() -> std::optional<std::string> {
    for (std::size_t n = 1; n <= opt.n_max; n *= 2) {
      for (int k = 0; k < opt.samples; ++k) {
        const Series h = random_series(n, rng, F, /*zero_constant=*/true);
        Series fast = exp_fast(h, n, table).f;
        if (opt.inject_fault) fast.mutable_coeffs().back() = F.add(fast.coeffs().back(), F.one());
        const Series standard = exp_standard(h, n, table);
        if (!(fast == standard)) return "exp_fast != exp_standard at n = " + std::to_string(n);
        if (n <= 4096 && !(fast == oracle::exp_naive(h, n, F))) {
          return "exp_fast != exp_naive at n = " + std::to_string(n);
        }
      }
    }
    return std::nullopt;
  });

  run("exp.arbitrary_n", [&]() -> std::optional<std::string> {
    for (std::size_t n : {1u, 3u, 5u, 7u, 100u, 1000u}) {
      if (std::bit_ceil(n) > opt.n_max) continue;
      const Series h = random_series(n, rng, F, /*zero_constant=*/true);
      if (!(exp_any(h, n, table).f == oracle::exp_naive(h, n, F))) {
        return "exp_any mismatch at n = " + std::to_string(n);
      }
    }
    return std::nullopt;
  });

  run("exp.log_roundtrip", [&]() -> std::optional<std::string> {
    for (std::size_t n = 1; n <= std::min<std::size_t>(opt.n_max, 1024); n *= 2) {
      const Series h = random_series(n, rng, F, /*zero_constant=*/true);
      if (!(oracle::log_naive(exp_fast(h, n, table).f, n, F) == h)) {
        return "log(exp(h)) != h at n = " + std::to_string(n);
      }
    }
    return std::nullopt;
  });

  run("exp.pass_identities", [&]() -> std::optional<std::string> {
    for (std::size_t n = 2; n <= std::min<std::size_t>(opt.n_max, 1024); n *= 2) {
      const Series h = random_series(n, rng, F, /*zero_constant=*/true);
      std::optional<std::string> failure;
      exp_fast(h, n, table, [&](const PassView& pv) {
        if (!failure) failure = check_pass_identities(pv, h, F);
      });
      if (failure) return failure;
    }
    return std::nullopt;
  });

  run("exp.cost_audit", [&]() -> std::optional<std::string> {
    for (std::size_t n = 2; n <= opt.n_max; n *= 2) {
      const Series h = random_series(n, rng, F, /*zero_constant=*/true);
      const OpLedger ledger = exp_fast(h, n, table).ledger;
      for (const auto& pass : ledger.passes()) audit_iteration(pass);
      if (4 * ledger.total_ops() > cost_bound_x4(n, table)) {
        return "total ops exceed 16.5 E(n) + 24.25 n + 64 at n = " + std::to_string(n);
      }
    }
    return std::nullopt;
  });

  return results;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace psexp
