// Copyright 2026 The torus-harmonics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace torus::acceptance {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs every acceptance criterion; deterministic for a fixed seed.
std::vector<CriterionResult> run_all(std::uint64_t seed = 0);

// Runs a single criterion by 1-based index.
CriterionResult run_one(int index, std::uint64_t seed = 0);

}  // namespace torus::acceptance
