// Copyright 2026 The xpsearch Authors.
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

#ifndef XPS_STRINGS_H_
#define XPS_STRINGS_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace xps {

std::string_view Trim(std::string_view s);

// ASCII lowercase; bytes >= 0x80 pass through unchanged.
std::string ToLower(std::string_view s);

// Splits on '\n', dropping a trailing '\r' from each line. A final empty line
// after a trailing newline is not returned.
std::vector<std::string_view> SplitLines(std::string_view text);

std::vector<std::string> SplitOn(std::string_view s, char separator);

std::string Join(const std::vector<std::string> &parts, std::string_view separator);

// Replaces '_' with ' ', e.g. very_quiet -> "very quiet".
std::string Humanize(std::string_view label);

std::string ReadFile(const std::filesystem::path &path);

// 64-bit FNV-1a. Streamable: pass the previous result as `state`.
uint64_t Fnv1a64(std::string_view data, uint64_t state = 0xcbf29ce484222325ULL);

std::string HexDigest(uint64_t value);

}  // namespace xps

#endif  // XPS_STRINGS_H_
