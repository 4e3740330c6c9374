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

#ifndef XPS_CONFIG_H_
#define XPS_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace xps {

// Conjunction operator used to combine predicate memberships.
enum class TNorm { kProduct, kMin };

// Tunables shared by ingest and serving. Read from a flat "key = value" file;
// '#' starts a comment. Unknown keys are rejected.
struct Config {
  double tau = 0.35;   // direct-match threshold for predicate interpretation
  double delta = 2.0;  // marker degree decay width, in ordinals
  double alpha = 0.5;  // significance weight in the candidate blend
  double theta = 0.5;  // sentence similarity above which duplicates drop
  double rho = 3.0;    // informative token frequency ratio
  int c_min = 3;       // informative token minimum count
  int snippet_k = 3;   // review snippets per summary
  uint64_t seed = 20190101;
  TNorm tnorm = TNorm::kProduct;
};

Config ParseConfig(std::string_view text);
Config LoadConfig(const std::filesystem::path &path);

std::string_view TNormName(TNorm tnorm);

}  // namespace xps

#endif  // XPS_CONFIG_H_
