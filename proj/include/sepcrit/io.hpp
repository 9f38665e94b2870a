// Copyright 2026 The sepcrit Authors
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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sepcrit/mixed_criterion.hpp"
#include "sepcrit/pure_criterion.hpp"
#include "sepcrit/zoo.hpp"

namespace sepcrit::io {

inline constexpr const char* kStateSchema = "sepcrit.state";
inline constexpr int kStateSchemaVersion = 1;

/// Pure inputs whose norm is off by more than this get a warning.
inline constexpr double kNormWarnThreshold = 1e-6;

struct StateMetadata {
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;
};

struct LoadedState {
  zoo::State state;
  StateMetadata metadata;
  std::vector<std::string> warnings;
};

/// Parses the state JSON schema. Errors carry the JSON path of the offending
/// element, e.g. "data[2][1]".
LoadedState parse_state(const std::string& text);
LoadedState read_state(const std::filesystem::path& path);

std::string write_state(const zoo::State& state, const StateMetadata& meta = {});

enum class Format { Text, Json, CsvRow };

/// Oracle columns appended by --cross-check.
struct CrossCheck {
  std::optional<bool> ppt;           // all single-subsystem cuts PPT
  std::optional<double> ppt_min_eigenvalue;
  std::optional<double> wootters;    // two-qubit inputs only
  bool disagreement = false;
};

struct ReportContext {
  std::string state_id;
  std::string dims;  // "2x2x2"
  std::uint64_t seed = 0;
  std::optional<double> wall_time_s;
  std::vector<std::string> operator_tags;
  std::optional<CrossCheck> cross_check;
};

/// state_id,dims,value,verdict,restarts,seed,wall_time_s
/// plus ppt,ppt_min_eig,wootters,disagreement when cross_check is set.
std::string csv_header(bool cross_check);

std::string write_report(const PureCriterionReport& report, const ReportContext& ctx,
                         Format format);
std::string write_report(const MixedCriterionReport& report, const ReportContext& ctx,
                         Format format);

}  // namespace sepcrit::io
