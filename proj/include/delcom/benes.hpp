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
 * Rearrangeable permutation network built from 2x2 exchange elements.
 *
 * A network on 2^k lines has 2k-1 stages of 2^(k-1) elements. Settings for a
 * given permutation are found with the classic looping algorithm.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace delcom::benes {

/// perm[source line] = destination line.
using Permutation = std::vector<std::size_t>;

struct Element {
    std::size_t stage;
    std::size_t upper;
    std::size_t lower;
    bool cross;
};

struct Network {
    std::size_t num_lines = 0;
    /// Execution order: stage-major, so elements of one stage are contiguous.
    std::vector<Element> elements;

    [[nodiscard]] std::size_t num_stages() const;
};

[[nodiscard]] bool is_permutation(std::span<const std::size_t> perm);

/// Settings realizing `perm`. Throws std::invalid_argument unless perm is a
/// permutation of 0..N-1 with N a power of two >= 2.
[[nodiscard]] Network route(std::span<const std::size_t> perm);

/// Push line labels through the network; result[line] = source now on it.
[[nodiscard]] std::vector<std::size_t> trace_lines(const Network &net);

} // namespace delcom::benes
