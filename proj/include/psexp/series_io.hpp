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

// Text series files:
//
//   # comment lines start with '#'
//   <p> <n>
//   <c_0>
//   ...
//   <c_{n-1}>
//
// Decimal, one coefficient per line, lowest degree first, each in [0, p).

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "psexp/error.hpp"
#include "psexp/field.hpp"
#include "psexp/series.hpp"

namespace psexp {

struct SeriesFile {
  std::uint64_t p = 0;
  Series series;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::uint64_t parse_u64(std::string_view s, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a decimal integer, got '" +
                     std::string(s) + "'");
  }
  return value;
}

}  // namespace detail

inline SeriesFile read_series_file(std::istream& in) {
  SeriesFile out;
  std::vector<Fe> coeffs;
  bool have_header = false;
  std::uint64_t n = 0;
  std::string raw;
  for (std::size_t line_no = 1; std::getline(in, raw); ++line_no) {
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!have_header) {
      const auto space = line.find_first_of(" \t");
      if (space == std::string_view::npos) {
        throw ParseError("line " + std::to_string(line_no) + ": header must be 'p n'");
      }
      out.p = detail::parse_u64(line.substr(0, space), line_no);
      n = detail::parse_u64(detail::trim(line.substr(space)), line_no);
      if (out.p < 2 || out.p > 0xffffffffull) {
        throw ParseError("line " + std::to_string(line_no) + ": modulus out of range");
      }
      have_header = true;
      coeffs.reserve(n);
      continue;
    }
    if (coeffs.size() == n) {
      throw ParseError("line " + std::to_string(line_no) + ": more than " + std::to_string(n) +
                       " coefficients");
    }
    const auto c = detail::parse_u64(line, line_no);
    if (c >= out.p) {
      throw ParseError("line " + std::to_string(line_no) + ": coefficient " + std::to_string(c) +
                       " not below p");
    }
    coeffs.push_back(Fe(static_cast<std::uint32_t>(c)));
  }
  if (!have_header) throw ParseError("missing 'p n' header");
  if (coeffs.size() != n) {
    throw ParseError("expected " + std::to_string(n) + " coefficients, found " +
                     std::to_string(coeffs.size()));
  }
  out.series = Series(std::move(coeffs));
  return out;
}

inline void write_series_file(std::ostream& os, std::uint64_t p, const Series& s) {
  os << p << ' ' << s.precision() << '\n';
  for (const Fe c : s.coeffs()) os << c.v << '\n';
}

}  // namespace psexp
