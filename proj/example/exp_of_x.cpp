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

// Prints the first coefficients of exp(x) modulo 998244353 together with
// the op ledger of the computation.

#include <cstdio>

#include "psexp/psexp.hpp"

int main() {
  using namespace psexp;
  const FourierPrime& F = FourierPrime::default_prime();
  const std::size_t n = 16;
  const RootTable table(F, 2 * n);

  const Series h = Series::from_integers(F, {0, 1});
  const ExpResult r = exp_fast(h, n, table);
  for (std::size_t i = 0; i < n; ++i) {
    // i! * coefficient should be 1.
    std::uint64_t fact = 1;
    for (std::size_t k = 2; k <= i; ++k) fact = fact * k % F.modulus();
    std::printf("%2zu  %10u  i!*c = %u\n", i, r.f[i].v,
                F.mul(r.f[i], Fe(static_cast<std::uint32_t>(fact))).v);
  }
  std::printf("field ops %llu (muls %llu, adds %llu), E(n) = %llu\n",
              static_cast<unsigned long long>(r.ledger.total_ops()),
              static_cast<unsigned long long>(r.ledger.field_muls()),
              static_cast<unsigned long long>(r.ledger.field_adds()),
              static_cast<unsigned long long>(measure_E(n, table)));
  return 0;
}
