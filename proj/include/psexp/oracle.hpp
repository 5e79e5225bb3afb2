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

// Brute-force references. Nothing here touches the transform kernels or any
// cached state, so a bug in the fast paths cannot hide behind them.

#include <cstddef>
#include <string>
#include <vector>

#include "psexp/error.hpp"
#include "psexp/field.hpp"
#include "psexp/series.hpp"

namespace psexp::oracle {

inline Series mul_naive(const Series& a, const Series& b, const FourierPrime& F) {
  if (a.empty() || b.empty()) return Series();
  std::vector<Fe> c(a.precision() + b.precision() - 1);
  for (std::size_t i = 0; i < a.precision(); ++i) {
    for (std::size_t j = 0; j < b.precision(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  return Series(std::move(c));
}

// Folds a polynomial modulo x^m - 1.
inline Series fold_cyclic(const Series& a, std::size_t m, const FourierPrime& F) {
  std::vector<Fe> c(m);
  for (std::size_t i = 0; i < a.precision(); ++i) c[i % m] = F.add(c[i % m], a[i]);
  return Series(std::move(c));
}

// exp(h) mod x^n from f' = h' f: k f_k = sum_{j=1..k} j h_j f_{k-j}.
inline Series exp_naive(const Series& h, std::size_t n, const FourierPrime& F) {
  if (!(h.coeff(0) == F.zero())) throw NonzeroConstantTerm();
  if (n >= F.modulus()) throw PrecisionTooLarge("exp_naive needs n < p");
  if (n == 0) return Series();
  std::vector<Fe> jh(n);
  for (std::size_t j = 1; j < n; ++j) jh[j] = F.mul(F.of(j), h.coeff(j));
  std::vector<Fe> f(n);
  f[0] = F.one();
  for (std::size_t k = 1; k < n; ++k) {
    Fe acc = F.zero();
    for (std::size_t j = 1; j <= k; ++j) acc = F.add(acc, F.mul(jh[j], f[k - j]));
    f[k] = F.div(acc, F.of(k));
  }
  return Series(std::move(f));
}

// log(f) mod x^n, solving k f_k = sum_{j=1..k} j l_j f_{k-j} for l_k.
inline Series log_naive(const Series& f, std::size_t n, const FourierPrime& F) {
  if (!(f.coeff(0) == F.one())) throw ConstantTermNotOne();
  if (n >= F.modulus()) throw PrecisionTooLarge("log_naive needs n < p");
  if (n == 0) return Series();
  std::vector<Fe> jl(n);  // j * l_j
  for (std::size_t k = 1; k < n; ++k) {
    Fe acc = F.mul(F.of(k), f.coeff(k));
    for (std::size_t j = 1; j < k; ++j) acc = F.sub(acc, F.mul(jl[j], f.coeff(k - j)));
    jl[k] = acc;
  }
  std::vector<Fe> l(n);
  for (std::size_t k = 1; k < n; ++k) l[k] = F.div(jl[k], F.of(k));
  return Series(std::move(l));
}

// 1/f mod x^n by the triangular recurrence.
inline Series inv_naive(const Series& f, std::size_t n, const FourierPrime& F) {
  if (f.coeff(0) == F.zero()) throw NotInvertible();
  std::vector<Fe> g(n);
  if (n == 0) return Series();
  const Fe c = F.inv(f.coeff(0));
  g[0] = c;
  for (std::size_t k = 1; k < n; ++k) {
    Fe acc = F.zero();
    for (std::size_t j = 1; j <= k; ++j) acc = F.add(acc, F.mul(f.coeff(j), g[k - j]));
    g[k] = F.neg(F.mul(c, acc));
  }
  return Series(std::move(g));
}

// Horner evaluation of f at omega^j, j < count, for an arbitrary point base.
inline std::vector<Fe> eval_naive(const Series& f, Fe omega, Fe start, std::size_t count,
                                  const FourierPrime& F) {
  std::vector<Fe> out(count);
  Fe x = start;
  for (std::size_t j = 0; j < count; ++j) {
    Fe acc = F.zero();
    for (std::size_t i = f.precision(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
    out[j] = acc;
    x = F.mul(x, omega);
  }
  return out;
}

// (f(1), f(w_m), ..., f(w_m^{m-1})) with w_m taken straight from the prime.
inline std::vector<Fe> dft_naive(const Series& f, std::size_t m, const FourierPrime& F) {
  return eval_naive(f, F.root_of_order(m), F.one(), m, F);
}

// (f(w_2m), f(w_2m w_m), ...).
inline std::vector<Fe> dft_twisted_naive(const Series& f, std::size_t m, const FourierPrime& F) {
  return eval_naive(f, F.root_of_order(m), F.root_of_order(2 * m), m, F);
}

inline Series derivative_naive(const Series& a, const FourierPrime& F) {
  std::vector<Fe> out(a.precision() > 0 ? a.precision() - 1 : 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.mul(F.of(i + 1), a[i + 1]);
  return Series(std::move(out));
}

inline Series integral_naive(const Series& a, const FourierPrime& F) {
  std::vector<Fe> out(a.precision() + 1);
  for (std::size_t i = 0; i < a.precision(); ++i) out[i + 1] = F.div(a[i], F.of(i + 1));
  return Series(std::move(out));
}

}  // namespace psexp::oracle
