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
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "psexp/error.hpp"
#include "psexp/field.hpp"
#include "psexp/ledger.hpp"
#include "psexp/transform.hpp"

namespace psexp {

// A truncated power series a mod x^precision, lowest degree first. The
// coefficient vector always has exactly `precision` entries; nothing beyond
// the precision is stored.
class Series {
 public:
  Series() = default;
  explicit Series(std::vector<Fe> coeffs) : c_(std::move(coeffs)) {}
  Series(std::initializer_list<Fe> coeffs) : c_(coeffs) {}

  static Series zero(std::size_t precision) { return Series(std::vector<Fe>(precision)); }
  static Series one(std::size_t precision) {
    Series s = zero(precision);
    if (precision > 0) s.c_[0] = Fe(1);
    return s;
  }
  static Series from_integers(const FourierPrime& F, std::initializer_list<std::int64_t> values) {
    std::vector<Fe> c;
    for (auto x : values) c.push_back(F.of_signed(x));
    return Series(std::move(c));
  }

  std::size_t precision() const { return c_.size(); }
  bool empty() const { return c_.empty(); }
  std::span<const Fe> coeffs() const { return c_; }
  std::vector<Fe>& mutable_coeffs() { return c_; }

  // Coefficient i; zero past the stored precision.
  Fe coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Fe(0); }
  Fe operator[](std::size_t i) const { return c_[i]; }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Fe> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Series& s) {
  os << '[';
  for (std::size_t i = 0; i < s.precision(); ++i) os << (i ? ", " : "") << s[i];
  return os << ']';
}

// a mod x^l. Never extends precision.
inline Series truncate(const Series& a, std::size_t l) {
  const auto c = a.coeffs();
  return Series(std::vector<Fe>(c.begin(), c.begin() + std::min(l, c.size())));
}

// a div x^l.
inline Series shift_div(const Series& a, std::size_t l) {
  const auto c = a.coeffs();
  if (l >= c.size()) return Series();
  return Series(std::vector<Fe>(c.begin() + l, c.end()));
}

// Explicit zero extension (or truncation) to exactly l coefficients, for
// callers that know the missing coefficients are zero.
inline Series resized(const Series& a, std::size_t l) {
  std::vector<Fe> c(l);
  std::copy_n(a.coeffs().begin(), std::min(l, a.precision()), c.begin());
  return Series(std::move(c));
}

namespace detail {

inline void pointwise_mul_into(std::span<Fe> a, std::span<const Fe> b, const FourierPrime& F,
                               OpLedger& ledger) {
  if (a.size() != b.size()) throw ShapeError("pointwise product of mismatched lengths");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = F.mul(a[i], b[i]);
  ledger.count_muls(a.size());
}

}  // namespace detail

// Coefficient i of the result is (i + 1) * a_{i+1}; precision drops by one.
inline Series derivative(const Series& a, const FourierPrime& F, OpLedger& ledger) {
  if (a.precision() <= 1) return Series();
  std::vector<Fe> out(a.precision() - 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.mul(F.of(i + 1), a[i + 1]);
  ledger.count_muls(out.size());
  return Series(std::move(out));
}

// result_j = t_j / (offset + j): the coefficients of (integral of t x^(offset-1))
// div x^offset.
inline Series integral_offset(const Series& t, std::size_t offset, const RootTable& table,
                              OpLedger& ledger) {
  if (t.empty()) return Series();
  if (offset == 0) throw DivisionByZero();
  const std::uint64_t top = static_cast<std::uint64_t>(offset) + t.precision() - 1;
  if (top >= table.prime().modulus()) {
    throw PrecisionTooLarge("integration divisor " + std::to_string(top) +
                            " is not invertible mod p");
  }
  const FourierPrime& F = table.prime();
  std::vector<Fe> out(t.precision());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = F.mul(t[j], table.int_inverse(offset + j));
  ledger.count_muls(out.size());
  return Series(std::move(out));
}

// Integral with zero constant term; precision grows by one since the new
// constant coefficient is known exactly.
inline Series integral(const Series& a, const RootTable& table, OpLedger& ledger) {
  auto tail = integral_offset(a, 1, table, ledger);
  std::vector<Fe> out(a.precision() + 1);
  std::copy(tail.coeffs().begin(), tail.coeffs().end(), out.begin() + 1);
  return Series(std::move(out));
}

// Coefficientwise a + b (resp. a - b); the shorter operand is zero-extended.
inline Series add(const Series& a, const Series& b, const FourierPrime& F, OpLedger& ledger) {
  std::vector<Fe> out(std::max(a.precision(), b.precision()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a.coeff(i), b.coeff(i));
  ledger.count_adds(out.size());
  return Series(std::move(out));
}

inline Series sub(const Series& a, const Series& b, const FourierPrime& F, OpLedger& ledger) {
  std::vector<Fe> out(std::max(a.precision(), b.precision()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a.coeff(i), b.coeff(i));
  ledger.count_adds(out.size());
  return Series(std::move(out));
}

// Full polynomial product a * b through one convolution of length
// bit_ceil(len a + len b - 1): two forward transforms, one pointwise pass,
// one inverse transform.
inline Series mul_fft(const Series& a, const Series& b, const RootTable& table, OpLedger& ledger) {
  if (a.empty() || b.empty()) return Series();
  const std::size_t len = a.precision() + b.precision() - 1;
  const std::size_t L = std::bit_ceil(len);
  auto A = dft(a.coeffs(), L, table, ledger);
  const auto B = dft(b.coeffs(), L, table, ledger);
  detail::pointwise_mul_into(A, B, table.prime(), ledger);
  auto c = idft(A, L, table, ledger);
  c.resize(len);
  return Series(std::move(c));
}

// a * b mod (x^m - 1), given DFT(a, m) and DFT(b, m).
inline Series cyclic_mul(std::span<const Fe> a_vals, std::span<const Fe> b_vals,
                         const RootTable& table, OpLedger& ledger) {
  if (a_vals.size() != b_vals.size()) {
    throw ShapeError("cyclic_mul operands have different transform lengths");
  }
  std::vector<Fe> prod(a_vals.begin(), a_vals.end());
  detail::pointwise_mul_into(prod, b_vals, table.prime(), ledger);
  return Series(idft(prod, prod.size(), table, ledger));
}

// 1/f mod x^n by Newton iteration g <- (2g - f g^2) mod x^2m.
//
// The low m coefficients of f g^2 coincide with g, so each step only negates
// the top half of f g^2; the coincidence is checked at every step.
inline Series newton_inv(const Series& f, std::size_t n, const RootTable& table, OpLedger& ledger) {
  const FourierPrime& F = table.prime();
  if (f.coeff(0) == F.zero()) throw NotInvertible();
  if (n == 0 || !std::has_single_bit(n)) {
    throw UnsupportedLength("newton_inv precision must be a power of two, got " +
                            std::to_string(n));
  }
  if (n > 1) table.require(2 * n);

  std::vector<Fe> g{F.inv(f.coeff(0))};
  for (std::size_t m = 1; m < n; m *= 2) {
    const std::size_t m2 = 2 * m;
    const auto f_low = resized(truncate(f, m2), m2);
    auto P = dft(f_low.coeffs(), 2 * m2, table, ledger);
    const auto G = dft(g, 2 * m2, table, ledger);
    detail::pointwise_mul_into(P, G, F, ledger);
    detail::pointwise_mul_into(P, G, F, ledger);
    const auto fg2 = idft(P, 2 * m2, table, ledger);
    for (std::size_t i = 0; i < m; ++i) {
      if (!(fg2[i] == g[i])) {
        throw InternalInvariantError("Newton coincidence failed at m = " + std::to_string(m2));
      }
    }
    g.resize(m2);
    for (std::size_t i = m; i < m2; ++i) g[i] = F.neg(fg2[i]);
    ledger.count_adds(m);
  }
  return Series(std::move(g));
}

inline Series newton_inv(const Series& f, std::size_t n, const RootTable& table) {
  OpLedger scratch;
  return newton_inv(f, n, table, scratch);
}

inline Series mul_fft(const Series& a, const Series& b, const RootTable& table) {
  OpLedger scratch;
  return mul_fft(a, b, table, scratch);
}

}  // namespace psexp
