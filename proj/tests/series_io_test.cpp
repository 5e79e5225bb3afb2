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

#include "psexp/series_io.hpp"

#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "psexp/bench.hpp"

namespace psexp {
namespace {

const FourierPrime& F() { return FourierPrime::default_prime(); }

SeriesFile parse(const std::string& text) {
  std::istringstream in(text);
  return read_series_file(in);
}

TEST(SeriesIoTest, ReadsWithComments) {
  const auto file = parse("# exp input\n998244353 3\n0\n# middle\n1\n  42 \n");
  EXPECT_EQ(file.p, 998244353u);
  EXPECT_EQ(file.series, Series({Fe(0), Fe(1), Fe(42)}));
}

TEST(SeriesIoTest, WriteThenReadIsIdentity) {
  std::mt19937_64 rng(12);
  for (std::size_t n : {1u, 2u, 17u, 300u}) {
    const Series s = random_series(n, rng, F());
    std::ostringstream out;
    write_series_file(out, F().modulus(), s);
    const auto back = parse(out.str());
    EXPECT_EQ(back.p, F().modulus());
    EXPECT_EQ(back.series, s);
  }
}

TEST(SeriesIoTest, WriteFormat) {
  std::ostringstream out;
  write_series_file(out, 17, Series({Fe(1), Fe(16)}));
  EXPECT_EQ(out.str(), "17 2\n1\n16\n");
}

TEST(SeriesIoTest, RejectsMalformedInput) {
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("# only a comment\n"), ParseError);
  EXPECT_THROW(parse("998244353\n"), ParseError);
  EXPECT_THROW(parse("998244353 2\n1\n"), ParseError);          // too few
  EXPECT_THROW(parse("998244353 1\n1\n2\n"), ParseError);       // too many
  EXPECT_THROW(parse("998244353 1\n998244353\n"), ParseError);  // not below p
  EXPECT_THROW(parse("998244353 1\n-3\n"), ParseError);
  EXPECT_THROW(parse("998244353 1\n12x\n"), ParseError);
  EXPECT_THROW(parse("p n\n"), ParseError);
}

}  // namespace
}  // namespace psexp
