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

#include <gtest/gtest.h>
#include <json.hpp>

#include "tanglelab/suite.hpp"

using namespace tanglelab;

TEST(Suite, SubsetPassesAndIsDeterministic) {
  SuiteConfig c;
  c.criteria = {1, 3};
  SuiteReport a = run_suite(c);
  SuiteReport b = run_suite(c);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.to_json(false), b.to_json(false));
  for (const auto& item : a.items) EXPECT_TRUE(item.criterion == 1 || item.criterion == 3);
}

TEST(Suite, JsonSchema) {
  SuiteConfig c;
  c.criteria = {1};
  auto j = nlohmann::json::parse(run_suite(c).to_json(true));
  EXPECT_EQ(j["schema"], kSuiteSchema);
  EXPECT_TRUE(j.contains("timing"));
  EXPECT_FALSE(nlohmann::json::parse(run_suite(c).to_json(false)).contains("timing"));
  EXPECT_GT(j["items"].size(), 0u);
}

TEST(Suite, TightToleranceIsFlagged) {
  SuiteConfig c;
  c.criteria = {4};
  c.tolerance = 1e-17;
  SuiteReport r = run_suite(c);
  EXPECT_FALSE(r.pass);
  bool flagged = false;
  for (const auto& item : r.items)
    if (!item.pass) {
      EXPECT_TRUE(item.tolerance_related) << item.name;
      flagged = true;
    }
  EXPECT_TRUE(flagged);
}
