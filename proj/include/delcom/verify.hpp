// Copyright 2026 The delcom Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Self-checks behind `delcom verify`.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace delcom::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// table1 | orthonormal | nosignal | formulas | routing | all
[[nodiscard]] const std::vector<std::string> &suite_names();

/// Throws std::invalid_argument for an unknown suite.
[[nodiscard]] std::vector<CheckResult> run_suite(std::string_view suite);

} // namespace delcom::verify
