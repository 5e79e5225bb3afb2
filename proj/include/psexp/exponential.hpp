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
#include <span>
#include <string>
#include <vector>

#include "psexp/error.hpp"
#include "psexp/field.hpp"
#include "psexp/ledger.hpp"
#include "psexp/series.hpp"
#include "psexp/transform.hpp"

namespace psexp {

struct ExpResult {
  Series f;
  OpLedger ledger;
};

// Everything one pass of exp_fast computed, handed to an inspector before
// f and g are overwritten. Spans are only valid during the callback.
struct PassView {
  std::size_t m = 0;
  bool final = false;
  std::span<const Fe> f;       // exp(h) mod x^m on entry
  std::span<const Fe> g;       // 1/f mod x^(m/2) on entry
  std::span<const Fe> g_dft;   // cached DFT(g, m) on entry
  std::span<const Fe> g_next;  // 1/f mod x^m
  std::span<const Fe> q;       // h' mod x^(m-1)
  std::span<const Fe> s;       // x (f' - q f) = x^m s
  std::span<const Fe> t;       // g s mod x^m
  std::span<const Fe> u;
  std::span<const Fe> v;       // the new coefficients f_m .. f_{2m-1}
};

using PassInspector = std::function<void(const PassView&)>;

// Iteration state between passes of exp_fast.
struct ExpState {
  std::vector<Fe> f;      // exp(h) mod x^m
  std::vector<Fe> g;      // 1/f mod x^(m/2)
  std::vector<Fe> g_dft;  // DFT(g, m)
  std::vector<Fe> q;      // h' mod x^(m-1), extended by half each pass
  std::size_t m = 1;
};

namespace detail {

inline void check_exp_args(const Series& h, std::size_t n, const RootTable& table) {
  const FourierPrime& F = table.prime();
  if (!(h.coeff(0) == F.zero())) throw NonzeroConstantTerm();
  if (n == 0 || !std::has_single_bit(n)) {
    throw UnsupportedLength("precision must be a power of two, got " + std::to_string(n));
  }
  if (n >= F.modulus()) {
    throw PrecisionTooLarge("precision " + std::to_string(n) + " must stay below p = " +
                            std::to_string(F.modulus()));
  }
  if (n >= 2) {
    if (2 * static_cast<std::uint64_t>(n) > F.max_root_order()) {
      throw UnsupportedLength("precision " + std::to_string(n) + " needs roots of order " +
                              std::to_string(2 * n) + " but p has only 2^" +
                              std::to_string(F.two_adicity()));
    }
    table.require(2 * n);
  }
}

}  // namespace detail

// Newton iteration for exp(h) mod x^n, n a power of two.
//
// Per pass at precision m (m >= 2), with DFT(g, m) carried over:
//   g <- (2g - f g^2) mod x^m     DFT(f, 2m) once; only DFT'(g, m) is new
//   q <- h' mod x^(m-1)           top half only
//   r <- f q mod (x^m - 1)        DFT(f, m) is the even half of DFT(f, 2m)
//   s <- x (f' - r) mod (x^m - 1) index rotation
//   t <- g s mod x^m              length 2m; leaves DFT(g, 2m) for the next pass
//   u <- (h mod x^2m - integral(t x^(m-1))) div x^m
//   f <- f + x^m (f u mod x^m)    reuses DFT(f, 2m)
// On the last pass t is split as g0 s0 + x^(m/2)(g0 s1 + g1 s0) with
// length-m transforms, since DFT(g, 2m) is no longer needed.
//
// The m = 1 pass is scalar: f = 1 + h_1 x, g = 1.
inline ExpResult exp_fast(const Series& h, std::size_t n, const RootTable& table,
                          const PassInspector& inspect = {}) {
  detail::check_exp_args(h, n, table);
  const FourierPrime& F = table.prime();
  ExpResult result;
  OpLedger& ledger = result.ledger;
  if (n == 1) {
    result.f = Series::one(1);
    return result;
  }

  ExpState st;
  ledger.begin_pass(1, n == 2, /*bootstrap=*/true);
  st.f = {F.one(), h.coeff(1)};
  st.g = {F.one()};
  st.g_dft = {F.one(), F.one()};
  st.m = 2;
  ledger.end_pass();

  for (; st.m <= n / 2; st.m *= 2) {
    const std::size_t m = st.m;
    const std::size_t half = m / 2;
    const bool final = (m == n / 2);
    ledger.begin_pass(m, final);

    // g <- (2g - f g^2) mod x^m.
    const auto f_vals = dft(st.f, 2 * m, table, ledger);
    const auto g_twisted = dft_twisted(st.g, m, table, ledger);
    auto prod = merge_dft(st.g_dft, g_twisted);
    for (std::size_t i = 0; i < 2 * m; ++i) {
      prod[i] = F.mul(F.mul(prod[i], prod[i]), f_vals[i]);
    }
    ledger.count_muls(4 * m);
    const auto fg2 = idft(prod, 2 * m, table, ledger);
    for (std::size_t i = 0; i < half; ++i) {
      if (!(fg2[i] == st.g[i])) {
        throw InternalInvariantError("Newton coincidence failed at m = " + std::to_string(m));
      }
    }
    std::vector<Fe> g_next(st.g);
    g_next.resize(m);
    for (std::size_t i = half; i < m; ++i) g_next[i] = F.neg(fg2[i]);
    ledger.count_adds(half);

    // q <- h' mod x^(m-1); coefficients below half - 1 are already cached.
    st.q.resize(m - 1);
    for (std::size_t i = half - 1; i < m - 1; ++i) st.q[i] = F.mul(F.of(i + 1), h.coeff(i + 1));
    ledger.count_muls(half);

    // r <- f q mod (x^m - 1).
    auto r_vals = dft(st.q, m, table, ledger);
    detail::pointwise_mul_into(r_vals, even_half(f_vals), F, ledger);
    const auto r = idft(r_vals, m, table, ledger);

    // s <- x (f' - r) mod (x^m - 1).
    std::vector<Fe> s(m);
    for (std::size_t i = 0; i < m; ++i) {
      const Fe fp = i + 1 < m ? F.mul(F.of(i + 1), st.f[i + 1]) : F.zero();
      s[(i + 1) & (m - 1)] = F.sub(fp, r[i]);
    }
    ledger.count_muls(m - 1);
    ledger.count_adds(m);

    // t <- g s mod x^m.
    std::vector<Fe> t(m);
    std::vector<Fe> g_next_dft;
    if (!final) {
      g_next_dft = dft(g_next, 2 * m, table, ledger);
      auto gs_vals = dft(s, 2 * m, table, ledger);
      detail::pointwise_mul_into(gs_vals, g_next_dft, F, ledger);
      const auto gs = idft(gs_vals, 2 * m, table, ledger);
      std::copy_n(gs.begin(), m, t.begin());
    } else {
      const std::span<const Fe> g_hi(g_next.data() + half, half);
      const std::span<const Fe> s_lo(s.data(), half), s_hi(s.data() + half, half);
      const auto g1 = dft(g_hi, m, table, ledger);
      const auto s0 = dft(s_lo, m, table, ledger);
      const auto s1 = dft(s_hi, m, table, ledger);
      std::vector<Fe> lo(m), mid(m);
      for (std::size_t i = 0; i < m; ++i) {
        lo[i] = F.mul(st.g_dft[i], s0[i]);
        mid[i] = F.add(F.mul(st.g_dft[i], s1[i]), F.mul(g1[i], s0[i]));
      }
      ledger.count_muls(3 * m);
      ledger.count_adds(m);
      const auto a = idft(lo, m, table, ledger);
      const auto b = idft(mid, m, table, ledger);
      for (std::size_t j = 0; j < half; ++j) t[j] = a[j];
      for (std::size_t j = half; j < m; ++j) t[j] = F.add(a[j], b[j - half]);
      ledger.count_adds(half);
    }

    // u <- (h mod x^2m - integral(t x^(m-1))) div x^m.
    std::vector<Fe> u(m);
    for (std::size_t j = 0; j < m; ++j) {
      u[j] = F.sub(h.coeff(m + j), F.mul(t[j], table.int_inverse(m + j)));
    }
    ledger.count_muls(m);
    ledger.count_adds(m);

    // v <- f u mod x^m.
    auto v_vals = dft(u, 2 * m, table, ledger);
    detail::pointwise_mul_into(v_vals, f_vals, F, ledger);
    auto v = idft(v_vals, 2 * m, table, ledger);
    v.resize(m);

    if (inspect) {
      inspect(PassView{.m = m, .final = final, .f = st.f, .g = st.g, .g_dft = st.g_dft,
                       .g_next = g_next, .q = st.q, .s = s, .t = t, .u = u, .v = v});
    }

    st.f.insert(st.f.end(), v.begin(), v.end());
    st.g = std::move(g_next);
    st.g_dft = std::move(g_next_dft);
    ledger.end_pass();
  }

  result.f = Series(std::move(st.f));
  return result;
}

// The textbook iteration, every product a plain mul_fft and a full inverse
// update per pass:
//   g <- (2g - f g^2) mod x^m
//   q <- h' mod x^(m-1)
//   w <- q + g (f' - f q) mod x^(2m-1)
//   f <- f + f (h - integral(w)) mod x^2m
inline Series exp_standard(const Series& h, std::size_t n, const RootTable& table,
                           OpLedger& ledger) {
  detail::check_exp_args(h, n, table);
  const FourierPrime& F = table.prime();
  Series f = Series::one(1);
  Series g = Series::one(1);
  for (std::size_t m = 1; m <= n / 2; m *= 2) {
    const Series f2g = mul_fft(f, mul_fft(g, g, table, ledger), table, ledger);
    g = truncate(sub(add(g, g, F, ledger), truncate(f2g, m), F, ledger), m);

    const Series q = truncate(derivative(resized(h, m), F, ledger), m - 1);

    const Series fq = truncate(mul_fft(f, q, table, ledger), 2 * m - 1);
    const Series diff = sub(derivative(f, F, ledger), fq, F, ledger);
    const Series w =
        truncate(add(q, mul_fft(g, diff, table, ledger), F, ledger), 2 * m - 1);

    const Series residual = sub(resized(h, 2 * m), integral(w, table, ledger), F, ledger);
    f = resized(add(f, truncate(mul_fft(f, residual, table, ledger), 2 * m), F, ledger), 2 * m);
  }
  return f;
}

inline Series exp_standard(const Series& h, std::size_t n, const RootTable& table) {
  OpLedger scratch;
  return exp_standard(h, n, table, scratch);
}

// exp(h) mod x^n for any n >= 1: pads to the next power of two.
inline ExpResult exp_any(const Series& h, std::size_t n, const RootTable& table) {
  if (n == 0) throw UnsupportedLength("precision must be at least 1");
  const std::size_t padded = std::bit_ceil(n);
  if (!(h.coeff(0) == table.prime().zero())) throw NonzeroConstantTerm();
  ExpResult r = exp_fast(resized(h, padded), padded, table);
  r.f = truncate(r.f, n);
  return r;
}

// Per-pass cost budget. Non-final passes: 3 transforms of length m, 7 of
// length 2m, at most 22m + kPassSlack linear ops. The final pass trades the
// 3 length-2m transforms and 4m linear ops of the g*s product for 5 length-m
// transforms and 2m + 4.5m linear ops.
inline constexpr std::uint64_t kPassSlack = 16;
inline constexpr std::uint64_t kTotalSlack = 64;

struct TransformTally {
  std::size_t m = 0;
  bool final = false;
  bool exempt = false;
  std::uint64_t at_m = 0;
  std::uint64_t at_2m = 0;
  std::uint64_t other = 0;
  std::uint64_t linear_ops = 0;
  std::uint64_t linear_budget = 0;  // doubled to keep 4.5m integral
};

inline std::uint64_t expected_transforms_at_m(bool final) { return final ? 8 : 3; }
inline std::uint64_t expected_transforms_at_2m(bool final) { return final ? 4 : 7; }

// Doubled linear budget for one pass, so 4.5m stays an integer.
inline std::uint64_t linear_budget_x2(std::size_t m, bool final) {
  const std::uint64_t nonfinal = 44 * m + 2 * kPassSlack;
  return final ? nonfinal - 8 * m + 4 * m + 9 * m : nonfinal;
}

inline TransformTally audit_iteration(const PassRecord& pass) {
  TransformTally tally{.m = pass.m, .final = pass.final};
  if (pass.bootstrap) {
    tally.exempt = true;
    return tally;
  }
  for (const auto& [len, count] : pass.transforms_by_length) {
    if (len == pass.m) {
      tally.at_m += count;
    } else if (len == 2 * pass.m) {
      tally.at_2m += count;
    } else {
      tally.other += count;
    }
  }
  tally.linear_ops = pass.linear_ops();
  tally.linear_budget = linear_budget_x2(pass.m, pass.final);

  const std::string where =
      std::string(pass.final ? "final" : "non-final") + " pass at m = " + std::to_string(pass.m);
  if (tally.at_m != expected_transforms_at_m(pass.final) ||
      tally.at_2m != expected_transforms_at_2m(pass.final) || tally.other != 0) {
    throw CostRegressionError(where + ": transform tally (m: " + std::to_string(tally.at_m) +
                              ", 2m: " + std::to_string(tally.at_2m) +
                              ", other: " + std::to_string(tally.other) + ")");
  }
  if (2 * tally.linear_ops > tally.linear_budget) {
    throw CostRegressionError(where + ": " + std::to_string(tally.linear_ops) +
                              " linear ops exceed budget " +
                              std::to_string(tally.linear_budget / 2));
  }
  return tally;
}

// 16.5 E(n) + 24.25 n + kTotalSlack, scaled by 4 to stay in integers.
inline std::uint64_t cost_bound_x4(std::size_t n, const RootTable& table) {
  return 66 * measure_E(n, table) + 97 * static_cast<std::uint64_t>(n) + 4 * kTotalSlack;
}

}  // namespace psexp
