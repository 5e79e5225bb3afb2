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

// Exponentials of truncated power series over a Fourier prime field, with
// exact operation accounting.

#include "psexp/bench.hpp"
#include "psexp/error.hpp"
#include "psexp/exponential.hpp"
#include "psexp/field.hpp"
#include "psexp/ledger.hpp"
#include "psexp/oracle.hpp"
#include "psexp/series.hpp"
#include "psexp/series_io.hpp"
#include "psexp/transform.hpp"
#include "psexp/verify.hpp"
