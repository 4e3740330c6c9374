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

#include "xps/config.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "xps/error.h"
#include "xps/strings.h"

namespace xps {

namespace {

Error ConfigError(int line, const std::string &message) {
  return Error(ErrorCode::kBadInput, "config line " + std::to_string(line) + ": " + message);
}

template <typename T>
T ParseNumber(std::string_view value, int line) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(line, "invalid number '" + std::string(value) + "'");
  }
  return out;
}

}  // namespace

std::string_view TNormName(TNorm tnorm) { return tnorm == TNorm::kMin ? "min" : "product"; }

Config ParseConfig(std::string_view text) {
  Config config;
  int line_number = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_number, "expected key = value");
    std::string key = ToLower(Trim(line.substr(0, eq)));
    std::string_view value = Trim(line.substr(eq + 1));

    if (key == "tau") {
      config.tau = ParseNumber<double>(value, line_number);
    } else if (key == "delta") {
      config.delta = ParseNumber<double>(value, line_number);
      if (config.delta <= 0) throw ConfigError(line_number, "delta must be > 0");
    } else if (key == "alpha") {
      config.alpha = ParseNumber<double>(value, line_number);
    } else if (key == "theta") {
      config.theta = ParseNumber<double>(value, line_number);
    } else if (key == "rho") {
      config.rho = ParseNumber<double>(value, line_number);
    } else if (key == "c_min") {
      config.c_min = ParseNumber<int>(value, line_number);
    } else if (key == "snippet_k") {
      config.snippet_k = ParseNumber<int>(value, line_number);
      if (config.snippet_k < 1) throw ConfigError(line_number, "snippet_k must be >= 1");
    } else if (key == "seed") {
      config.seed = ParseNumber<uint64_t>(value, line_number);
    } else if (key == "tnorm") {
      std::string name = ToLower(value);
      if (name == "product") {
        config.tnorm = TNorm::kProduct;
      } else if (name == "min") {
        config.tnorm = TNorm::kMin;
      } else {
        throw ConfigError(line_number, "tnorm must be product or min");
      }
    } else {
      throw ConfigError(line_number, "unknown key '" + key + "'");
    }
  }
  if (config.alpha < 0 || config.alpha > 1) {
    throw Error(ErrorCode::kBadInput, "config: alpha must lie in [0, 1]");
  }
  return config;
}

Config LoadConfig(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kBadInput, "cannot open config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str());
}

}  // namespace xps
