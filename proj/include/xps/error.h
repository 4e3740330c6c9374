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

#ifndef XPS_ERROR_H_
#define XPS_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace xps {

enum class ErrorCode {
  kBadInput,  // malformed corpus, schema, alias or config file
  kBadQuery,  // query text failed to parse or names an unknown relation
  kUnknownEntity,
  kUninterpretablePredicate,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

// All failures surface as Error. Parse errors carry the byte offset of the
// offending input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message, std::optional<size_t> position = std::nullopt)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const { return code_; }
  std::optional<size_t> position() const { return position_; }

 private:
  ErrorCode code_;
  std::optional<size_t> position_;
};

}  // namespace xps

#endif  // XPS_ERROR_H_
