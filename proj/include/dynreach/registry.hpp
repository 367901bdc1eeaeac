// Copyright 2026 The dynreach Authors.
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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dynreach/replay.hpp"

namespace dynreach {

/// Bad algorithm spec or other command-line level misuse.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Resolves an algorithm spec string:
///   sbfs | sdfs | cbfs | cdfs | lbfs | ldfs
///   si:<R|nR>:<SF|nSF>:<ratio>          ratio in [0, 1]
///   es|mes|ses:<beta|inf>:<ratio|inf>
/// Throws UsageError listing the valid forms.
AlgorithmFactory make_algorithm_factory(std::string_view spec);

/// Normalized spelling of spec (e.g. "ses:5:.5" -> "ses:5:0.5").
std::string canonical_algorithm_name(std::string_view spec);

/// The thirteen configurations used for cross-checking: six static-search
/// variants, four SI settings, and ES/MES/SES with beta=5, ratio=0.5.
std::vector<std::string> canonical_configurations();

/// ES/MES/SES at all three benchmark parameter sets, plus the four SI
/// settings and the six static searches.
std::vector<std::string> benchmark_configurations();

}  // namespace dynreach
