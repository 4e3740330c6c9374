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

#ifndef XPS_QUERY_H_
#define XPS_QUERY_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xps/corpus.h"

namespace xps {

enum class CompareOp { kLess, kLessEqual, kGreater, kGreaterEqual, kEqual };

std::string_view CompareOpSymbol(CompareOp op);

struct Comparison {
  std::string attribute;
  CompareOp op = CompareOp::kEqual;
  double value = 0;

  bool operator==(const Comparison &) const = default;
};

// A parsed query: objective comparisons and quoted subjective predicates
// over one relation, all conjoined.
struct Query {
  Category relation = Category::kHotel;
  std::vector<Comparison> objective;
  std::vector<std::string> subjective;
  std::optional<int> limit;

  bool operator==(const Query &) const = default;
};

// Grammar (keywords case-insensitive):
//
//   query      := "select" "*" "from" IDENT [IDENT] ["where" conj] ["limit" INT]
//   conj       := term {"and" term}
//   term       := IDENT op NUMBER | STRING
//   op         := "<" | "<=" | ">" | ">=" | "=" | "≤" | "≥"
//   NUMBER     := ["-"] DIGITS ["." DIGITS]
//   STRING     := '"' { char | '\' char } '"'
//
// The optional IDENT after the relation is a tuple alias and is dropped.
// Throws Error(kBadQuery) with the byte offset of the offending token. "or"
// and "not" are rejected as unsupported connectives.
Query ParseQuery(std::string_view text);

// Canonical single-line text; ParseQuery(RenderQuery(q)) == q.
std::string RenderQuery(const Query &query);

// Double-quoted, backslash-escaped predicate literal.
std::string QuotePredicate(std::string_view predicate);

}  // namespace xps

#endif  // XPS_QUERY_H_
