// Copyright 2026 The qworlds Authors
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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qworlds/contexts.hpp"
#include "qworlds/oml.hpp"
#include "qworlds/presheaf.hpp"

namespace qworlds {

// One checked statement: a theorem on one fixture under one implication.
// `result` is "pass", "fail", "skip" (hypothesis not met) or "info"
// (recorded but not asserted).
struct BatteryRecord {
  std::string suite;
  std::string theorem_id;
  std::string fixture;
  std::string j;  // "S", "C", "R" or "-"
  std::string scope;
  std::string result;
  std::string witness;
};

struct BatteryConfig {
  std::uint64_t seed = 1;
  // Random cases for the negation-free transfer check.
  std::size_t trials = 1000;
  // Sampled subobjects or pairs when exhaustive checking is out of reach.
  std::size_t samples = 500;
  // Pairs are checked exhaustively up to this many.
  std::size_t max_exhaustive_pairs = 20000;
  // Rank of the random sets fed to the transfer checks.
  std::size_t max_rank = 3;
  ContextOptions contexts;
  SubclOptions subcl;
};

const std::vector<std::string>& battery_suites();

// Runs one suite, or every suite for "all". Throws kInvalidArgument for an
// unknown suite name.
std::vector<BatteryRecord> run_battery(const Oml& lattice, std::string_view fixture,
                                       std::string_view suite, const BatteryConfig& config);

bool battery_passed(const std::vector<BatteryRecord>& records);

std::string format_text(const std::vector<BatteryRecord>& records);
// One JSON object per line with fields in a fixed order.
std::string format_structured(const std::vector<BatteryRecord>& records);

}  // namespace qworlds
