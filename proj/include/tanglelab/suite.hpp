// Copyright 2026 The tanglelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "tanglelab/linalg.hpp"

namespace tanglelab {

struct SuiteConfig {
  double tolerance = 1e-9;
  Seed seed{7};
  long wire_cap = 4096;
  // Encoders of the concatenated UEB code need about 2^18 rows.
  long code_wire_cap = 1L << 20;
  int workers = 0;
  std::vector<int> criteria;  // empty: all
};

struct SuiteItem {
  int criterion = 0;
  std::string name;
  bool pass = false;
  double residual = 0.0;
  std::string detail;
  // Set on failure when the residual is within the default tolerance, i.e. the
  // item only fails because the requested tolerance is tighter than double
  // precision supports.
  bool tolerance_related = false;
  double seconds = 0.0;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<SuiteItem> items;
  bool pass = false;
  double seconds = 0.0;

  // Everything outside the "timing" object is a function of the config only.
  std::string to_json(bool include_timing = true) const;
  std::string to_text() const;
};

inline constexpr const char* kSuiteSchema = "tanglelab.suite/1";

SuiteReport run_suite(const SuiteConfig& config);

}  // namespace tanglelab
