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
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "psexp/error.hpp"
#include "psexp/field.hpp"
#include "psexp/ledger.hpp"

namespace psexp {

// Powers of a compatible family of 2-power roots of unity, built once and
// shared read-only. The root of order m < max_len is the stride
// (max_len / m) subsequence of the order-max_len powers, which gives
// omega_m == omega_{2m}^2 by construction.
class RootTable {
 public:
  RootTable(const FourierPrime& prime, std::size_t max_len) : prime_(prime), max_len_(max_len) {
    if (max_len == 0 || !std::has_single_bit(max_len) || max_len > prime.max_root_order()) {
      throw UnsupportedLength("root table length " + std::to_string(max_len) +
                              " must be a power of two <= 2^" +
                              std::to_string(prime.two_adicity()));
    }
    if (max_len >= prime.modulus()) {
      throw PrecisionTooLarge("root table length must stay below the modulus");
    }
    const Fe w = prime.root_of_order(max_len);
    const Fe w_inv = prime.inv(w);
    forward_.resize(max_len);
    inverse_.resize(max_len);
    Fe a = prime.one(), b = prime.one();
    for (std::size_t i = 0; i < max_len; ++i) {
      forward_[i] = a;
      inverse_[i] = b;
      a = prime.mul(a, w);
      b = prime.mul(b, w_inv);
    }

    // Level layout: level[h + j] = omega_{2h}^j for 0 <= j < h.
    fwd_level_.assign(std::max<std::size_t>(max_len, 2), prime.one());
    inv_level_.assign(std::max<std::size_t>(max_len, 2), prime.one());
    for (std::size_t h = 1; h < max_len; h <<= 1) {
      const std::size_t stride = max_len / (2 * h);
      for (std::size_t j = 0; j < h; ++j) {
        fwd_level_[h + j] = forward_[j * stride];
        inv_level_[h + j] = inverse_[j * stride];
      }
    }

    // 1/k for 1 <= k <= max_len, via inv(k) = -(p / k) * inv(p mod k).
    int_inverse_.assign(max_len + 1, prime.zero());
    if (max_len >= 1) int_inverse_[1] = prime.one();
    const std::uint32_t p = prime.modulus();
    for (std::size_t k = 2; k <= max_len; ++k) {
      int_inverse_[k] = prime.neg(prime.mul(prime.of(p / k), int_inverse_[p % k]));
    }
  }

  const FourierPrime& prime() const { return prime_; }
  std::size_t max_len() const { return max_len_; }

  std::span<const Fe> forward_roots() const { return forward_; }
  std::span<const Fe> inverse_roots() const { return inverse_; }

  // omega_{2m}^i for the twisted transform of length m.
  Fe twist(std::size_t m, std::size_t i) const { return forward_[i * (max_len_ / (2 * m))]; }

  Fe len_inverse(std::size_t m) const { return int_inverse_[m]; }

  // 1/k; falls back to extended Euclid beyond the table.
  Fe int_inverse(std::uint64_t k) const {
    if (k < int_inverse_.size()) return int_inverse_[k];
    if (k % prime_.modulus() == 0) throw PrecisionTooLarge("divisor is a multiple of p");
    return prime_.inv(prime_.of(k));
  }

  bool supports(std::size_t m) const {
    return m != 0 && std::has_single_bit(m) && m <= max_len_;
  }
  void require(std::size_t m) const {
    if (!supports(m)) {
      throw UnsupportedLength("transform length " + std::to_string(m) +
                              " unsupported (table max " + std::to_string(max_len_) + ")");
    }
  }

  const std::vector<Fe>& forward_level() const { return fwd_level_; }
  const std::vector<Fe>& inverse_level() const { return inv_level_; }

 private:
  FourierPrime prime_;
  std::size_t max_len_;
  std::vector<Fe> forward_, inverse_;
  std::vector<Fe> fwd_level_, inv_level_;
  std::vector<Fe> int_inverse_;
};

namespace detail {

inline void bit_reverse_permute(std::span<Fe> a) {
  const std::size_t m = a.size();
  for (std::size_t i = 1, j = 0; i < m; ++i) {
    std::size_t bit = m >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
}

// In-place radix-2 decimation-in-time transform, natural order in and out.
// Each stage costs m additions/subtractions and (m/2h)(h-1) multiplications;
// the j = 0 twiddle is 1 and is skipped.
inline void radix2_kernel(std::span<Fe> a, const std::vector<Fe>& level, const FourierPrime& F,
                          OpLedger& ledger) {
  const std::size_t m = a.size();
  if (m <= 1) return;
  bit_reverse_permute(a);
  std::uint64_t muls = 0, adds = 0;
  for (std::size_t h = 1; h < m; h <<= 1) {
    const Fe* w = level.data() + h;
    for (std::size_t k = 0; k < m; k += 2 * h) {
      {
        const Fe u = a[k], t = a[k + h];
        a[k] = F.add(u, t);
        a[k + h] = F.sub(u, t);
      }
      for (std::size_t j = 1; j < h; ++j) {
        const Fe u = a[k + j];
        const Fe t = F.mul(w[j], a[k + j + h]);
        a[k + j] = F.add(u, t);
        a[k + j + h] = F.sub(u, t);
      }
    }
    adds += m;
    muls += (m / (2 * h)) * (h - 1);
  }
  ledger.count_adds(adds);
  ledger.count_muls(muls);
  ledger.count_butterfly_ops(adds + muls);
}

// Reduces f modulo x^m - 1 into a buffer of length m. Inputs no longer than
// m are just zero-padded (padding is not arithmetic); longer ones cost one
// addition per folded coefficient.
inline std::vector<Fe> folded(std::span<const Fe> f, std::size_t m, const FourierPrime& F,
                              OpLedger& ledger) {
  std::vector<Fe> out(m);
  const std::size_t head = std::min(f.size(), m);
  std::copy_n(f.begin(), head, out.begin());
  for (std::size_t i = m; i < f.size(); ++i) out[i & (m - 1)] = F.add(out[i & (m - 1)], f[i]);
  if (f.size() > m) ledger.count_adds(f.size() - m);
  return out;
}

}  // namespace detail

// DFT(f, m)[j] = f(omega_m^j), natural order. f of any length; it is
// zero-padded or folded modulo x^m - 1 first.
inline std::vector<Fe> dft(std::span<const Fe> f, std::size_t m, const RootTable& table,
                           OpLedger& ledger) {
  table.require(m);
  auto a = detail::folded(f, m, table.prime(), ledger);
  detail::radix2_kernel(a, table.forward_level(), table.prime(), ledger);
  ledger.record_transform(TransformKind::kForward, m);
  return a;
}

// DFT'(f, m)[j] = f(omega_{2m} * omega_m^j): the odd-index half of DFT(f, 2m).
// Costs one length-m transform plus len(f) - 1 twisting multiplications.
inline std::vector<Fe> dft_twisted(std::span<const Fe> f, std::size_t m, const RootTable& table,
                                   OpLedger& ledger) {
  table.require(m);
  table.require(2 * m);
  const FourierPrime& F = table.prime();
  std::vector<Fe> scaled(f.begin(), f.end());
  for (std::size_t i = 1; i < scaled.size(); ++i) {
    scaled[i] = F.mul(scaled[i], table.twist(m, i & (2 * m - 1)));
  }
  if (f.size() > 1) ledger.count_muls(f.size() - 1);
  auto a = detail::folded(scaled, m, F, ledger);
  detail::radix2_kernel(a, table.forward_level(), F, ledger);
  ledger.record_transform(TransformKind::kTwisted, m);
  return a;
}

// Inverse of dft: interpolates m values back to m coefficients, including
// the m multiplications by 1/m.
inline std::vector<Fe> idft(std::span<const Fe> vals, std::size_t m, const RootTable& table,
                            OpLedger& ledger) {
  table.require(m);
  if (vals.size() != m) {
    throw ShapeError("idft expects exactly " + std::to_string(m) + " values, got " +
                     std::to_string(vals.size()));
  }
  std::vector<Fe> a(vals.begin(), vals.end());
  const FourierPrime& F = table.prime();
  detail::radix2_kernel(a, table.inverse_level(), F, ledger);
  if (m > 1) {
    const Fe scale = table.len_inverse(m);
    for (auto& x : a) x = F.mul(x, scale);
    ledger.count_muls(m);
  }
  ledger.record_transform(TransformKind::kInverse, m);
  return a;
}

// Interleaves DFT(f, m) and DFT'(f, m) into DFT(f, 2m). Pure permutation.
inline std::vector<Fe> merge_dft(std::span<const Fe> evens, std::span<const Fe> odds) {
  if (evens.size() != odds.size()) {
    throw ShapeError("merge_dft halves differ in length: " + std::to_string(evens.size()) +
                     " vs " + std::to_string(odds.size()));
  }
  std::vector<Fe> out(2 * evens.size());
  for (std::size_t j = 0; j < evens.size(); ++j) {
    out[2 * j] = evens[j];
    out[2 * j + 1] = odds[j];
  }
  return out;
}

// DFT(f, m) read off from DFT(f, 2m): the even-index entries. Pure gather.
inline std::vector<Fe> even_half(std::span<const Fe> vals) {
  std::vector<Fe> out(vals.size() / 2);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = vals[2 * j];
  return out;
}

// E(m): exact field-op count of one forward transform of length m.
inline std::uint64_t measure_E(std::size_t m, const RootTable& table) {
  table.require(m);
  std::vector<Fe> scratch(m);
  for (std::size_t i = 0; i < m; ++i) scratch[i] = table.prime().of(i + 1);
  OpLedger ledger;
  dft(scratch, m, table, ledger);
  return ledger.total_ops();
}

}  // namespace psexp
