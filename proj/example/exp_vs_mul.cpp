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

// Compares the ledger cost of exp_fast with one full product at a few sizes.

#include <cstdio>
#include <random>

#include "psexp/psexp.hpp"

int main() {
  using namespace psexp;
  const FourierPrime& F = FourierPrime::default_prime();
  const std::size_t n_max = 1u << 14;
  const RootTable table(F, 2 * n_max);
  std::mt19937_64 rng(1);

  std::printf("%8s %12s %12s %8s\n", "n", "ops_mul", "ops_exp", "ratio");
  for (std::size_t n = 64; n <= n_max; n *= 4) {
    const Series a = random_series(n, rng, F);
    const Series b = random_series(n, rng, F);
    const Series h = random_series(n, rng, F, /*zero_constant=*/true);
    OpLedger ledger;
    mul_fft(a, b, table, ledger);
    const auto ops_exp = exp_fast(h, n, table).ledger.total_ops();
    std::printf("%8zu %12llu %12llu %8.4f\n", n,
                static_cast<unsigned long long>(ledger.total_ops()),
                static_cast<unsigned long long>(ops_exp),
                double(ops_exp) / double(ledger.total_ops()));
  }
  return 0;
}
