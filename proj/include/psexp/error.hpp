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

#include <stdexcept>
#include <string>

namespace psexp {

// Base of every error raised by the library. Each subclass maps to one
// failure kind, so callers (the CLI in particular) can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in the field") {}
};

// Transform length is not a power of two, or exceeds what the root table
// (or the prime's 2-adic valuation) supports.
class UnsupportedLength : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  NotInvertible() : Error("series has zero constant term and is not invertible") {}
};

class NonzeroConstantTerm : public Error {
 public:
  NonzeroConstantTerm() : Error("exp requires h(0) = 0") {}
};

class ConstantTermNotOne : public Error {
 public:
  ConstantTermNotOne() : Error("log requires f(0) = 1") {}
};

// Some integer divisor used by the algorithm would not be a unit mod p.
class PrecisionTooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidPrime : public Error {
 public:
  using Error::Error;
};

// A cost audit found more transforms or linear work than the budget allows.
class CostRegressionError : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// An internal identity of the Newton iteration failed. Never expected.
class InternalInvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace psexp
