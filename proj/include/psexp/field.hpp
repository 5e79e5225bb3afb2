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
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "psexp/error.hpp"

namespace psexp {

// Canonical residue in [0, p). Arithmetic lives on FourierPrime, which
// carries the modulus; an Fe is only meaningful together with its prime.
struct Fe {
  std::uint32_t v = 0;

  constexpr Fe() = default;
  constexpr explicit Fe(std::uint32_t value) : v(value) {}

  friend constexpr bool operator==(Fe a, Fe b) { return a.v == b.v; }
  friend std::ostream& operator<<(std::ostream& os, Fe a) { return os << a.v; }
};

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  for (; e != 0; e >>= 1) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
  }
  return r;
}

// Deterministic Miller-Rabin; bases {2, 7, 61} are exact below 2^32.
inline bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 7u, 61u}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace detail

// A prime p = c * 2^v + 1 (c odd, p < 2^32) together with a primitive root g
// and an element of multiplicative order exactly 2^v.
//
// Reduction uses Barrett with mu = floor(2^64 / p): every product of two
// canonical residues is < 2^64, and the quotient estimate is off by at most
// one, so a single conditional subtraction restores canonical form.
class FourierPrime {
 public:
  static constexpr std::uint32_t kDefaultModulus = 998244353;  // 119 * 2^23 + 1

  // Validates p and searches for the smallest primitive root.
  static FourierPrime make(std::uint64_t p) { return FourierPrime(p, 0); }

  // Validates p and checks that `generator` really is a primitive root.
  static FourierPrime make(std::uint64_t p, std::uint64_t generator) {
    return FourierPrime(p, generator);
  }

  static const FourierPrime& default_prime() {
    static const FourierPrime prime(kDefaultModulus, 3);
    return prime;
  }

  std::uint32_t modulus() const { return p_; }
  int two_adicity() const { return v_; }
  std::uint32_t odd_cofactor() const { return static_cast<std::uint32_t>((p_ - 1ull) >> v_); }
  Fe generator() const { return Fe(g_); }
  Fe omega_max() const { return omega_max_; }
  std::uint64_t max_root_order() const { return 1ull << v_; }

  Fe zero() const { return Fe(0); }
  Fe one() const { return Fe(1); }
  Fe minus_one() const { return Fe(p_ - 1); }

  // Accepts any nonnegative integer and reduces it.
  Fe of(std::uint64_t x) const { return Fe(static_cast<std::uint32_t>(x % p_)); }
  // Two's-complement-free embedding of a signed integer.
  Fe of_signed(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Fe(static_cast<std::uint32_t>(r));
  }

  Fe add(Fe a, Fe b) const {
    std::uint32_t s = a.v + b.v;  // may wrap when p > 2^31
    if (s < a.v || s >= p_) s -= p_;
    return Fe(s);
  }
  Fe sub(Fe a, Fe b) const {
    return Fe(a.v >= b.v ? a.v - b.v : a.v + (p_ - b.v));
  }
  Fe neg(Fe a) const { return Fe(a.v == 0 ? 0 : p_ - a.v); }

  Fe mul(Fe a, Fe b) const { return Fe(reduce(std::uint64_t{a.v} * b.v)); }

  Fe pow(Fe a, std::uint64_t e) const {
    Fe r = one();
    for (; e != 0; e >>= 1) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
    }
    return r;
  }

  // Extended Euclid on (a, p).
  Fe inv(Fe a) const {
    if (a.v == 0) throw DivisionByZero();
    std::int64_t r0 = p_, r1 = a.v;
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    return of_signed(s0);
  }

  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

  // omega_m = omega_max^(2^v / m), so root_of_order(m) == root_of_order(2m)^2.
  Fe root_of_order(std::uint64_t m) const {
    if (m == 0 || !std::has_single_bit(m) || m > max_root_order()) {
      throw UnsupportedLength("root of unity of order " + std::to_string(m) +
                              " unavailable (need a power of two <= 2^" +
                              std::to_string(v_) + ")");
    }
    return pow(omega_max_, max_root_order() / m);
  }

  friend bool operator==(const FourierPrime& a, const FourierPrime& b) {
    return a.p_ == b.p_ && a.g_ == b.g_;
  }

 private:
  FourierPrime(std::uint64_t p, std::uint64_t generator) {
    if (p < 3 || p > 0xffffffffull || !detail::is_prime_u32(p)) {
      throw InvalidPrime("modulus " + std::to_string(p) +
                         " is not an odd prime below 2^32");
    }
    p_ = static_cast<std::uint32_t>(p);
    v_ = std::countr_zero(static_cast<std::uint64_t>(p - 1));
    barrett_mu_ = ~std::uint64_t{0} / p_;  // floor((2^64 - 1) / p) == floor(2^64 / p) for odd p

    const auto factors = detail::distinct_prime_factors(p - 1);
    auto is_primitive = [&](std::uint64_t cand) {
      if (cand % p == 0) return false;
      for (std::uint64_t q : factors) {
        if (detail::powmod_u64(cand, (p - 1) / q, p) == 1) return false;
      }
      return true;
    };
    if (generator == 0) {
      generator = 2;
      while (!is_primitive(generator)) ++generator;
    } else if (!is_primitive(generator)) {
      throw InvalidPrime(std::to_string(generator) + " is not a primitive root mod " +
                         std::to_string(p));
    }
    g_ = static_cast<std::uint32_t>(generator);

    omega_max_ = pow(Fe(g_), (p - 1) >> v_);
    // Order of omega_max must be exactly 2^v.
    Fe half = omega_max_;
    for (int i = 1; i < v_; ++i) half = mul(half, half);
    if (!(half == minus_one()) || !(mul(half, half) == one())) {
      throw InvalidPrime("order check of the 2-power root failed for p = " +
                         std::to_string(p));
    }
  }

  std::uint32_t reduce(std::uint64_t x) const {
    const auto q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * barrett_mu_) >> 64);
    std::uint64_t r = x - q * p_;
    if (r >= p_) r -= p_;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t p_ = 0;
  int v_ = 0;
  std::uint32_t g_ = 0;
  std::uint64_t barrett_mu_ = 0;
  Fe omega_max_;
};

}  // namespace psexp
