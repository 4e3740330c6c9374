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

#include "xps/query.h"

#include "doctest.h"
#include "oracles.h"
#include "xps/error.h"

namespace xps {
namespace {

constexpr char kPaperQuery[] =
    "select * from Hotels h where price_pn <= 350 and price_pn >= 200 and \"quiet\" and "
    "\"friendly staff\"";

Error ParseError(std::string_view text) {
  try {
    ParseQuery(text);
  } catch (const Error &e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  return Error(ErrorCode::kInternal, "unreachable");
}

TEST_CASE("the example query") {
  Query q = ParseQuery(kPaperQuery);
  CHECK(q.relation == Category::kHotel);
  REQUIRE(q.objective.size() == 2);
  CHECK(q.objective[0] == Comparison{"price_pn", CompareOp::kLessEqual, 350});
  CHECK(q.objective[1] == Comparison{"price_pn", CompareOp::kGreaterEqual, 200});
  CHECK(q.subjective == std::vector<std::string>{"quiet", "friendly staff"});
  CHECK_FALSE(q.limit.has_value());
  CHECK(RenderQuery(q) ==
        "select * from Hotels where price_pn <= 350 and price_pn >= 200 and \"quiet\" and "
        "\"friendly staff\"");
  CHECK(ParseQuery(RenderQuery(q)) == q);
}

TEST_CASE("minimal and variant spellings") {
  Query q = ParseQuery("select * from Hotels");
  CHECK(q.objective.empty());
  CHECK(q.subjective.empty());
  CHECK(ParseQuery("SELECT * FROM hotel WHERE \"quiet\"").subjective.size() == 1);
  CHECK(ParseQuery("select*from Restaurants r").relation == Category::kRestaurant);
  Query unicode =
      ParseQuery("select * from Hotels where price_pn \xE2\x89\xA4 350 and stars \xE2\x89\xA5 4");
  CHECK(unicode.objective[0].op == CompareOp::kLessEqual);
  CHECK(unicode.objective[1].op == CompareOp::kGreaterEqual);
  Query ops = ParseQuery("select * from Hotels where a < 1 and b > -2.5 and c = 3");
  CHECK(ops.objective[0].op == CompareOp::kLess);
  CHECK(ops.objective[1].value == -2.5);
  CHECK(ops.objective[2].op == CompareOp::kEqual);
  CHECK(ParseQuery("select * from Hotels limit 5").limit == 5);
  CHECK(ParseQuery("select * from Hotels where \"a \\\"b\\\" \\\\\"").subjective[0] ==
        "a \"b\" \\");
  CHECK(ParseQuery("select * from Hotels where \"  padded  \"").subjective[0] == "padded");
  // Contradictory bounds are accepted.
  CHECK(ParseQuery("select * from Hotels where p < 10 and p > 20").objective.size() == 2);
}

TEST_CASE("errors carry offsets") {
  Error e = ParseError("select *");
  CHECK(e.code() == ErrorCode::kBadQuery);
  CHECK(e.position() == 8u);
  CHECK(std::string(e.what()) == "syntax error at offset 8: expected 'from', found end of query");

  e = ParseError("select * from Hotels where \"a\" or \"b\"");
  CHECK(std::string(e.what()).find("unsupported connective 'or'") != std::string::npos);
  CHECK(e.position() == 31u);
  e = ParseError("select * from Hotels where not \"b\"");
  CHECK(std::string(e.what()).find("unsupported connective 'not'") != std::string::npos);

  e = ParseError("select * from Castles");
  CHECK(std::string(e.what()) == "unknown relation 'Castles'");
  CHECK(e.position() == 14u);

  CHECK(ParseError("select * from Hotels where price_pn <= ").position() == 39u);
  CHECK(ParseError("select * from Hotels where \"open").position() == 27u);
  CHECK(ParseError("select * from Hotels where \"\"").code() == ErrorCode::kBadQuery);
  CHECK(ParseError("select * from Hotels where price_pn <= 3.").code() == ErrorCode::kBadQuery);
  CHECK(ParseError("select * from Hotels limit 0").code() == ErrorCode::kBadQuery);
  CHECK(ParseError("select * from Hotels limit 2.5").code() == ErrorCode::kBadQuery);
  CHECK(ParseError("select * from Hotels where price_pn <= 1" + std::string(400, '0')).code() ==
        ErrorCode::kBadQuery);
  CHECK(ParseError("select name from Hotels").position() == 7u);
  CHECK(ParseError("select * from Hotels where a <= 1 b").code() == ErrorCode::kBadQuery);
  CHECK(ParseError("").position() == 0u);
  CHECK(ParseError("select * from Hotels where a # 1").position() == 29u);
}

TEST_CASE("render formats numbers without exponents") {
  Query q;
  q.objective = {{"a", CompareOp::kLess, 1e21},
                 {"b", CompareOp::kGreater, 1.5e-7},
                 {"c", CompareOp::kEqual, -0.25}};
  std::string text = RenderQuery(q);
  CHECK(text.substr(text.find("where") + 5).find('e') == std::string::npos);
  CHECK(ParseQuery(text) == q);
}

TEST_CASE("generated queries round-trip") {
  synth::Rng rng(2024);
  std::vector<std::string> attributes = {"price_pn", "stars", "rating", "x1", "_hidden"};
  std::vector<std::string> predicates = {"quiet",     "friendly staff", "romantic",
                                         "near park", "say \"hi\"",     "back\\slash"};
  for (int i = 0; i < 1000; ++i) {
    Query q = oracle::RandomQuery(rng, attributes, predicates);
    std::string text = RenderQuery(q);
    INFO(text);
    Query back = ParseQuery(text);
    CHECK(back == q);
    CHECK(RenderQuery(back) == text);
  }
}

TEST_CASE("arbitrary bytes never crash the parser") {
  synth::Rng rng(17);
  std::string base = kPaperQuery;
  int parsed = 0, rejected = 0;
  for (int i = 0; i < 3000; ++i) {
    std::string input;
    if (i % 2 == 0) {
      size_t n = 1 + rng.Below(1024);
      for (size_t j = 0; j < n; ++j) input.push_back(static_cast<char>(rng.Below(256)));
    } else {
      // Mutations of a valid query reach deeper into the grammar.
      input = base;
      int edits = 1 + static_cast<int>(rng.Below(4));
      for (int k = 0; k < edits; ++k) {
        size_t at = rng.Below(input.size() + 1);
        switch (rng.Below(3)) {
          case 0: input.insert(input.begin() + at, static_cast<char>(rng.Below(256))); break;
          case 1:
            if (at < input.size()) input.erase(at, 1);
            break;
          default: input = input.substr(0, at); break;
        }
      }
    }
    try {
      ParseQuery(input);
      ++parsed;
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::kBadQuery);
      if (e.position()) CHECK(*e.position() <= input.size());
      ++rejected;
    }
  }
  CHECK(parsed + rejected == 3000);
  CHECK(parsed > 0);
}

}  // namespace
}  // namespace xps
