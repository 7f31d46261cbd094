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
#include "delcom/benes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace delcom::benes {

namespace {
constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

std::size_t log2_exact(std::size_t n) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n) {
        ++k;
    }
    return k;
}

void route_recursive(const std::vector<std::size_t> &lines, const Permutation &perm,
                     std::size_t first_stage, std::size_t total_stages,
                     std::vector<Element> &out) {
    const std::size_t m = lines.size();
    if (m == 2) {
        out.push_back({first_stage, lines[0], lines[1], perm[0] != 0});
        return;
    }
    const std::size_t half = m / 2;
    Permutation inverse(m);
    for (std::size_t x = 0; x < m; ++x) {
        inverse[perm[x]] = x;
    }

    // 0 = through the upper subnetwork, 1 = lower. Siblings at an input or an
    // output element must take different subnetworks.
    std::vector<std::size_t> side(m, kUnset);
    for (std::size_t a = 0; a < half; ++a) {
        std::size_t x = 2 * a;
        while (side[x] == kUnset) {
            side[x] = 0;
            side[x ^ 1U] = 1;
            x = inverse[perm[x ^ 1U] ^ 1U];
        }
    }

    Permutation upper_perm(half);
    Permutation lower_perm(half);
    for (std::size_t a = 0; a < half; ++a) {
        const std::size_t up = side[2 * a] == 0 ? 2 * a : 2 * a + 1;
        const std::size_t down = up ^ 1U;
        upper_perm[a] = perm[up] / 2;
        lower_perm[a] = perm[down] / 2;
        out.push_back({first_stage, lines[2 * a], lines[2 * a + 1], up != 2 * a});
    }

    std::vector<std::size_t> upper_lines(half);
    std::vector<std::size_t> lower_lines(half);
    for (std::size_t a = 0; a < half; ++a) {
        upper_lines[a] = lines[2 * a];
        lower_lines[a] = lines[2 * a + 1];
    }
    route_recursive(upper_lines, upper_perm, first_stage + 1, total_stages - 2, out);
    route_recursive(lower_lines, lower_perm, first_stage + 1, total_stages - 2, out);

    // Output element b receives the upper subnetwork's item on line 2b.
    const std::size_t last_stage = first_stage + total_stages - 1;
    for (std::size_t a = 0; a < half; ++a) {
        const std::size_t up = side[2 * a] == 0 ? 2 * a : 2 * a + 1;
        const std::size_t dest = perm[up];
        out.push_back({last_stage, lines[2 * (dest / 2)], lines[2 * (dest / 2) + 1],
                       dest % 2 != 0});
    }
}
} // namespace

std::size_t Network::num_stages() const {
    std::size_t stages = 0;
    for (const auto &e : elements) {
        stages = std::max(stages, e.stage + 1);
    }
    return stages;
}

bool is_permutation(std::span<const std::size_t> perm) {
    std::vector<bool> seen(perm.size(), false);
    for (auto p : perm) {
        if (p >= perm.size() || seen[p]) {
            return false;
        }
        seen[p] = true;
    }
    return true;
}

Network route(std::span<const std::size_t> perm) {
    const std::size_t n = perm.size();
    if (n < 2 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("permutation network needs a power-of-two line count >= 2, got " +
                                    std::to_string(n));
    }
    if (!is_permutation(perm)) {
        throw std::invalid_argument("routing is not a permutation of the ports");
    }
    std::vector<std::size_t> lines(n);
    for (std::size_t i = 0; i < n; ++i) {
        lines[i] = i;
    }
    Network net;
    net.num_lines = n;
    const std::size_t stages = 2 * log2_exact(n) - 1;
    route_recursive(lines, Permutation(perm.begin(), perm.end()), 0, stages,
                    net.elements);
    std::stable_sort(net.elements.begin(), net.elements.end(),
                     [](const Element &a, const Element &b) { return a.stage < b.stage; });
    return net;
}

std::vector<std::size_t> trace_lines(const Network &net) {
    std::vector<std::size_t> content(net.num_lines);
    for (std::size_t i = 0; i < net.num_lines; ++i) {
        content[i] = i;
    }
    for (const auto &e : net.elements) {
        if (e.cross) {
            std::swap(content[e.upper], content[e.lower]);
        }
    }
    return content;
}

} // namespace delcom::benes
