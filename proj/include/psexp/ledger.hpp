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

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace psexp {

enum class TransformKind { kForward, kTwisted, kInverse };

inline const char* to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::kForward: return "forward";
    case TransformKind::kTwisted: return "twisted";
    case TransformKind::kInverse: return "inverse";
  }
  return "?";
}

// Operation counts attributed to one Newton pass of exp_fast.
struct PassRecord {
  std::size_t m = 0;      // precision on entry
  bool final = false;     // the m = n/2 pass
  bool bootstrap = false; // the scalar m = 1 pass
  std::uint64_t field_muls = 0;
  std::uint64_t field_adds = 0;
  std::uint64_t butterfly_ops = 0;  // ops performed inside transform kernels
  std::map<std::size_t, std::uint64_t> transforms_by_length;
  std::map<std::pair<TransformKind, std::size_t>, std::uint64_t> transforms;

  std::uint64_t total_ops() const { return field_muls + field_adds; }
  // Everything that is not a butterfly: pointwise products, twisting and
  // 1/m scaling, derivatives, integrals, negations.
  std::uint64_t linear_ops() const { return total_ops() - butterfly_ops; }
};

// Per-invocation record of field operations and transform calls.
//
// Field additions, subtractions and negations all count as `field_adds`.
// Counters only ever grow. Passes are opened with begin_pass(); everything
// counted while a pass is open is also attributed to that pass.
class OpLedger {
 public:
  void count_muls(std::uint64_t k) {
    field_muls_ += k;
    if (auto* pass = open()) pass->field_muls += k;
  }
  void count_adds(std::uint64_t k) {
    field_adds_ += k;
    if (auto* pass = open()) pass->field_adds += k;
  }
  void count_butterfly_ops(std::uint64_t k) {
    butterfly_ops_ += k;
    if (auto* pass = open()) pass->butterfly_ops += k;
  }
  void record_transform(TransformKind kind, std::size_t length) {
    ++transforms_[{kind, length}];
    if (auto* pass = open()) {
      ++pass->transforms[{kind, length}];
      ++pass->transforms_by_length[length];
    }
  }

  void begin_pass(std::size_t m, bool final, bool bootstrap = false) {
    PassRecord& pass = passes_.emplace_back();
    pass.m = m;
    pass.final = final;
    pass.bootstrap = bootstrap;
    current_ = passes_.size() - 1;
  }
  void end_pass() { current_ = kNoPass; }

  std::uint64_t field_muls() const { return field_muls_; }
  std::uint64_t field_adds() const { return field_adds_; }
  std::uint64_t total_ops() const { return field_muls_ + field_adds_; }
  std::uint64_t butterfly_ops() const { return butterfly_ops_; }

  const std::map<std::pair<TransformKind, std::size_t>, std::uint64_t>& transforms() const {
    return transforms_;
  }
  std::map<std::size_t, std::uint64_t> transforms_by_length() const {
    std::map<std::size_t, std::uint64_t> out;
    for (const auto& [key, count] : transforms_) out[key.second] += count;
    return out;
  }
  std::uint64_t transform_count() const {
    std::uint64_t total = 0;
    for (const auto& entry : transforms_) total += entry.second;
    return total;
  }
  const std::vector<PassRecord>& passes() const { return passes_; }

  friend bool operator==(const OpLedger& a, const OpLedger& b) {
    if (a.field_muls_ != b.field_muls_ || a.field_adds_ != b.field_adds_ ||
        a.butterfly_ops_ != b.butterfly_ops_ || a.transforms_ != b.transforms_ ||
        a.passes_.size() != b.passes_.size()) {
      return false;
    }
    for (std::size_t i = 0; i < a.passes_.size(); ++i) {
      const auto& x = a.passes_[i];
      const auto& y = b.passes_[i];
      if (x.m != y.m || x.final != y.final || x.bootstrap != y.bootstrap ||
          x.field_muls != y.field_muls || x.field_adds != y.field_adds ||
          x.butterfly_ops != y.butterfly_ops || x.transforms != y.transforms) {
        return false;
      }
    }
    return true;
  }

 private:
  std::uint64_t field_muls_ = 0;
  std::uint64_t field_adds_ = 0;
  std::uint64_t butterfly_ops_ = 0;
  std::map<std::pair<TransformKind, std::size_t>, std::uint64_t> transforms_;
  std::vector<PassRecord> passes_;
  static constexpr std::size_t kNoPass = static_cast<std::size_t>(-1);
  PassRecord* open() { return current_ == kNoPass ? nullptr : &passes_[current_]; }

  std::size_t current_ = kNoPass;
};

}  // namespace psexp
