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

#include "psexp/transform.hpp"

#include <bit>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "psexp/oracle.hpp"
#include "psexp/series.hpp"

namespace psexp {
namespace {

const FourierPrime& F() { return FourierPrime::default_prime(); }

std::vector<Fe> random_vec(std::size_t len, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, F().modulus() - 1);
  std::vector<Fe> v(len);
  for (auto& x : v) x = Fe(d(rng));
  return v;
}

// Butterfly count of the radix-2 kernel: m log m adds, and per stage
// (m / 2h)(h - 1) multiplications, which sums to (m/2) log m - (m - 1).
std::uint64_t butterfly_count(std::size_t m) {
  if (m <= 1) return 0;
  const std::uint64_t lg = std::countr_zero(m);
  return m * lg + (m / 2) * lg - (m - 1);
}

class TransformTest : public ::testing::Test {
 protected:
  RootTable table{F(), 1u << 12};
  std::mt19937_64 rng{2024};
};

TEST_F(TransformTest, RootTableInvariants) {
  const auto fw = table.forward_roots();
  const auto iv = table.inverse_roots();
  for (std::size_t i = 0; i < table.max_len(); ++i) ASSERT_EQ(F().mul(fw[i], iv[i]), Fe(1));
  EXPECT_EQ(fw[table.max_len() / 2], F().minus_one());
  // Stride subsequence realizes the smaller roots.
  for (std::size_t m = 1; m <= table.max_len(); m *= 2) {
    EXPECT_EQ(fw[(table.max_len() / m) % table.max_len()], m == 1 ? Fe(1) : F().root_of_order(m));
    EXPECT_EQ(F().mul(table.len_inverse(m), F().of(m)), Fe(1));
  }
  for (std::uint64_t k = 1; k <= table.max_len(); ++k) {
    ASSERT_EQ(F().mul(table.int_inverse(k), F().of(k)), Fe(1)) << k;
  }
  EXPECT_THROW(RootTable(F(), 3), UnsupportedLength);
  EXPECT_THROW(RootTable(F(), 1u << 24), UnsupportedLength);
}

TEST_F(TransformTest, DftExamples) {
  OpLedger ledger;
  EXPECT_EQ(dft(std::vector<Fe>{Fe(9)}, 1, table, ledger), std::vector<Fe>{Fe(9)});
  const Fe a(5), b(11);
  EXPECT_EQ(dft(std::vector<Fe>{a, b}, 2, table, ledger),
            (std::vector<Fe>{F().add(a, b), F().sub(a, b)}));
  const Series f(random_vec(8, rng));
  EXPECT_EQ(dft(f.coeffs(), 8, table, ledger), oracle::dft_naive(f, 8, F()));
  EXPECT_THROW(dft(f.coeffs(), 6, table, ledger), UnsupportedLength);
  EXPECT_THROW(dft(f.coeffs(), 1u << 13, table, ledger), UnsupportedLength);
}

TEST_F(TransformTest, DftMatchesHornerAllLengths) {
  for (std::size_t m = 1; m <= 512; m *= 2) {
    for (std::size_t len : {std::size_t{1}, m / 2 + 1, m}) {
      const Series f(random_vec(std::min(len, m), rng));
      OpLedger ledger;
      ASSERT_EQ(dft(f.coeffs(), m, table, ledger), oracle::dft_naive(f, m, F())) << m;
    }
  }
}

TEST_F(TransformTest, DftFoldsLongInputs) {
  const Series f(random_vec(24, rng));
  OpLedger ledger;
  EXPECT_EQ(dft(f.coeffs(), 8, table, ledger), oracle::dft_naive(f, 8, F()));
  EXPECT_EQ(ledger.field_adds(), 16 + 8 * 3u);  // 16 folded coefficients + butterflies
}

TEST_F(TransformTest, TwistedExamples) {
  OpLedger ledger;
  EXPECT_EQ(dft_twisted(std::vector<Fe>{Fe(4)}, 1, table, ledger), std::vector<Fe>{Fe(4)});
  const Fe w4 = F().root_of_order(4);
  EXPECT_EQ(dft_twisted(std::vector<Fe>{Fe(0), Fe(1)}, 2, table, ledger),
            (std::vector<Fe>{w4, F().neg(w4)}));
  for (std::size_t m = 1; m <= 256; m *= 2) {
    const Series f(random_vec(m, rng));
    ASSERT_EQ(dft_twisted(f.coeffs(), m, table, ledger), oracle::dft_twisted_naive(f, m, F()));
    // Odd-index roots of order 2m.
    const auto direct = oracle::dft_naive(f, 2 * m, F());
    const auto tw = dft_twisted(f.coeffs(), m, table, ledger);
    for (std::size_t j = 0; j < m; ++j) ASSERT_EQ(tw[j], direct[2 * j + 1]);
  }
  EXPECT_THROW(dft_twisted(std::vector<Fe>{Fe(1)}, table.max_len(), table, ledger),
               UnsupportedLength);
}

TEST_F(TransformTest, TwistedCostIsTransformPlusScaling) {
  for (std::size_t m = 2; m <= 1024; m *= 2) {
    const auto f = random_vec(m / 2, rng);
    OpLedger ledger;
    dft_twisted(f, m, table, ledger);
    EXPECT_EQ(ledger.total_ops(), measure_E(m, table) + (m / 2 - 1));
    EXPECT_LE(ledger.total_ops(), measure_E(m, table) + 2 * m);
    EXPECT_EQ(ledger.transforms().at({TransformKind::kTwisted, m}), 1u);
  }
}

TEST_F(TransformTest, IdftExamplesAndRoundTrip) {
  OpLedger ledger;
  EXPECT_EQ(idft(std::vector<Fe>{Fe(3)}, 1, table, ledger), std::vector<Fe>{Fe(3)});
  const std::vector<Fe> ab{Fe(8), Fe(123)};
  EXPECT_EQ(idft(dft(ab, 2, table, ledger), 2, table, ledger), ab);
  const auto vals = random_vec(16, rng);
  EXPECT_EQ(dft(idft(vals, 16, table, ledger), 16, table, ledger), vals);
  for (std::size_t m = 1; m <= table.max_len(); m *= 2) {
    const auto f = random_vec(m, rng);
    ASSERT_EQ(idft(dft(f, m, table, ledger), m, table, ledger), f) << m;
  }
  EXPECT_THROW(idft(random_vec(3, rng), 4, table, ledger), ShapeError);
}

TEST_F(TransformTest, IdftCostIsTransformPlusScaling) {
  for (std::size_t m = 2; m <= 1024; m *= 2) {
    OpLedger ledger;
    idft(random_vec(m, rng), m, table, ledger);
    EXPECT_EQ(ledger.total_ops(), measure_E(m, table) + m);
    EXPECT_EQ(ledger.butterfly_ops(), measure_E(m, table));
  }
}

TEST_F(TransformTest, MergeExamples) {
  const Series f(random_vec(2, rng));
  const Fe at_one = F().add(f[0], f[1]), at_minus_one = F().sub(f[0], f[1]);
  EXPECT_EQ(merge_dft(std::vector<Fe>{at_one}, std::vector<Fe>{at_minus_one}),
            (std::vector<Fe>{at_one, at_minus_one}));
  EXPECT_EQ(merge_dft(std::vector<Fe>(4), std::vector<Fe>(4)), std::vector<Fe>(8));
  EXPECT_THROW(merge_dft(std::vector<Fe>(4), std::vector<Fe>(2)), ShapeError);
}

TEST_F(TransformTest, InterleavingIdentity) {
  for (std::size_t m = 1; 2 * m <= table.max_len(); m *= 2) {
    const auto f = random_vec(2 * m, rng);
    OpLedger ledger;
    const auto evens = dft(f, m, table, ledger);
    const auto odds = dft_twisted(f, m, table, ledger);
    const auto before = ledger.total_ops();
    const auto merged = merge_dft(evens, odds);
    EXPECT_EQ(ledger.total_ops(), before);
    ASSERT_EQ(merged, dft(f, 2 * m, table, ledger)) << m;
    EXPECT_EQ(even_half(merged), evens);
  }
}

TEST_F(TransformTest, ConvolutionIsCyclicProduct) {
  for (std::size_t m = 1; m <= 256; m *= 2) {
    const Series a(random_vec(2 * m, rng)), b(random_vec(2 * m, rng));
    OpLedger ledger;
    auto A = dft(a.coeffs(), 2 * m, table, ledger);
    const auto B = dft(b.coeffs(), 2 * m, table, ledger);
    for (std::size_t i = 0; i < A.size(); ++i) A[i] = F().mul(A[i], B[i]);
    const Series c(idft(A, 2 * m, table, ledger));
    ASSERT_EQ(c, oracle::fold_cyclic(oracle::mul_naive(a, b, F()), 2 * m, F())) << m;
  }
}

TEST_F(TransformTest, MeasureEMatchesButterflyCount) {
  EXPECT_EQ(measure_E(1, table), 0u);
  EXPECT_EQ(measure_E(2, table), 2u);
  for (std::size_t m = 1; m <= table.max_len(); m *= 2) {
    EXPECT_EQ(measure_E(m, table), butterfly_count(m)) << m;
    EXPECT_EQ(measure_E(m, table), measure_E(m, table));
  }
  EXPECT_THROW(measure_E(12, table), UnsupportedLength);
}

TEST_F(TransformTest, MeasureEIsSuperlinear) {
  for (std::size_t m = 1; 2 * m <= table.max_len(); m *= 2) {
    EXPECT_GE(measure_E(2 * m, table), 2 * measure_E(m, table)) << m;
  }
}

TEST_F(TransformTest, LedgerOfOneDftEqualsE) {
  for (std::size_t m = 1; m <= table.max_len(); m *= 2) {
    OpLedger ledger;
    dft(random_vec(m, rng), m, table, ledger);
    EXPECT_EQ(ledger.field_muls() + ledger.field_adds(), measure_E(m, table));
    EXPECT_EQ(ledger.transforms().at({TransformKind::kForward, m}), 1u);
    EXPECT_EQ(ledger.transform_count(), 1u);
  }
}

TEST_F(TransformTest, SmallPrimeFullLength) {
  const auto G = FourierPrime::make(17);
  const RootTable small(G, 16);
  const Series f = Series::from_integers(G, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16});
  OpLedger ledger;
  EXPECT_EQ(dft(f.coeffs(), 16, small, ledger), oracle::dft_naive(f, 16, G));
  EXPECT_EQ(idft(dft(f.coeffs(), 16, small, ledger), 16, small, ledger),
            std::vector<Fe>(f.coeffs().begin(), f.coeffs().end()));
}

}  // namespace
}  // namespace psexp
