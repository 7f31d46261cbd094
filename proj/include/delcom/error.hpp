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
 * Exception types shared across the library.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace delcom {

/// Two sources asked for the same destination port. Never resolved in-switch.
class ContentionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A configuration or scenario could not be parsed / validated.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(const std::string &key, const std::string &what)
        : std::runtime_error(key + ": " + what), key_(key) {}

    [[nodiscard]] const std::string &key() const noexcept { return key_; }

  private:
    std::string key_;
};

} // namespace delcom
