// Copyright 2026 The jqbattery Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JQB_CLI_CONFIG_H
#define JQB_CLI_CONFIG_H

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jqb/ergotropy/ergotropy.h"

namespace jqb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Bad flags, bad config keys or values. Maps to exit code 2.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Unreadable input or unwritable output. Maps to exit code 3.
class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class Format { Csv, JsonLines };
Format parse_format(std::string_view s);

/// "first:last:step" (inclusive), a comma list, or one value. Values may be
/// written with pi, e.g. "0,pi/4,pi/2" or "3*pi/8".
std::vector<double> parse_grid(std::string_view s);
double parse_value(std::string_view s);

/// Comma list of protocol names.
std::vector<Protocol> parse_protocols(std::string_view s);

/// 64-bit FNV-1a.
uint64_t fnv1a(std::string_view data);

/// Output path: empty or "-" is stdout (returned empty). A relative path is
/// placed under $JQB_OUTPUT_DIR when that is set.
std::filesystem::path resolve_output_path(const std::string &requested);

/// Whole file as text; throws IoError if unreadable.
std::string read_text_file(const std::filesystem::path &path);

/// Writes `text` to `path` (or stdout if empty). Throws IoError on failure.
void write_output(const std::filesystem::path &path, const std::string &text);

}  // namespace jqb::cli

#endif
