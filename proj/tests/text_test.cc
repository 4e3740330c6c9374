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

#include "xps/text.h"

#include <fstream>
#include <string>

#include "doctest.h"
#include "oracles.h"
#include "xps/lexicon.h"
#include "xps/strings.h"

namespace xps {
namespace {

using Strings = std::vector<std::string>;

TEST_CASE("bundled lexicon") {
  const Lexicon &lex = Lexicon::Default();
  CHECK(lex.opinion_size() > 2000);
  CHECK(lex.Polarity("quiet") == 0.5);
  CHECK(lex.Polarity("peaceful") == 1.0);
  CHECK(lex.Polarity("noisy") == -1.0);
  CHECK(lex.Polarity("friendly") == 0.5);
  CHECK(lex.Polarity("beautiful") > 0);
  CHECK_FALSE(lex.Polarity("room").has_value());
  CHECK_FALSE(lex.Polarity("very").has_value());
  CHECK(lex.IsNegation("not"));
  CHECK(lex.IsNegation("never"));
  CHECK(lex.IsNegation("wasn't"));
  CHECK_FALSE(lex.IsNegation("note"));
  CHECK(lex.IntensifierFactor("very") == 1.5);
  CHECK_FALSE(lex.IntensifierFactor("quite").has_value());
  CHECK(lex.IsAbbreviation("dr"));
  CHECK_FALSE(lex.IsAbbreviation("no"));
  CHECK(lex.IsImperativeVerb("ask"));
  CHECK(lex.IsStopword("the"));
  CHECK_FALSE(lex.IsStopword("not"));
  CHECK_FALSE(lex.IsStopword("very"));
  CHECK(lex.tip_patterns().size() == 9);
}

TEST_CASE("opinion lexicon validation") {
  Lexicon::Sources bad{.opinion = "great\t2\n"};
  CHECK_THROWS(Lexicon{bad});
  Lexicon::Sources zero{.opinion = "meh\t0\n"};
  CHECK_THROWS(Lexicon{zero});
  Lexicon::Sources ok{.opinion = "# comment\ngreat\t1\n\nbad\t-0.5\n"};
  Lexicon custom(ok);
  CHECK(custom.opinion_size() == 2);
  CHECK(custom.Polarity("bad") == -0.5);
}

TEST_CASE("tokenizer") {
  CHECK(Tokenize("Quiet, peaceful!") == Strings{"quiet", "peaceful"});
  CHECK(Tokenize("Don't forget the check-in desk") ==
        Strings{"don't", "forget", "the", "check-in", "desk"});
  CHECK(Tokenize("don\xe2\x80\x99t") == Strings{"don't"});
  CHECK(Tokenize("--hello-- 'quoted'") == Strings{"hello", "quoted"});
  CHECK(Tokenize("caf\xc3\xa9 na\xc3\xafve") == Strings{"caf\xc3\xa9", "na\xc3\xafve"});
  CHECK(Tokenize("10 min walk") == Strings{"10", "min", "walk"});
  CHECK(Tokenize("quiet\xe2\x80\x94really") == Strings{"quiet", "really"});
  CHECK(Tokenize("").empty());
  CHECK(Tokenize("... !!! ???").empty());
}

TEST_CASE("token offsets point at the source bytes") {
  std::string text = "The Room, very QUIET.";
  auto tokens = TokenizeWithOffsets(text);
  REQUIRE(tokens.size() == 4);
  for (const auto &t : tokens) {
    CHECK(ToLower(text.substr(t.begin, t.end - t.begin)) == t.text);
  }
}

TEST_CASE("tokenizer never crashes on random bytes") {
  synth::Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    std::string s;
    size_t n = rng.Below(200);
    for (size_t j = 0; j < n; ++j) s.push_back(static_cast<char>(rng.Below(256)));
    auto tokens = TokenizeWithOffsets(s);
    for (const auto &t : tokens) {
      CHECK(t.begin < t.end);
      CHECK(t.end <= s.size());
      CHECK_FALSE(t.text.empty());
    }
    ReviewRecord r{.review_id = "r", .entity_id = "e", .text = s};
    for (const auto &sentence : SplitSentences(r)) {
      CHECK_FALSE(sentence.tokens.empty());
      CHECK(sentence.offset + sentence.text.size() <= s.size());
    }
  }
}

TEST_CASE("sentence splitting basics") {
  ReviewRecord r{.review_id = "r1", .entity_id = "h1", .text = "quiet and peaceful location"};
  auto one = SplitSentences(r);
  REQUIRE(one.size() == 1);
  CHECK(one[0].text == "quiet and peaceful location");
  CHECK(one[0].review_id == "r1");
  CHECK(one[0].entity_id == "h1");

  r.text = "  First one.   Second one!  ";
  auto two = SplitSentences(r);
  REQUIRE(two.size() == 2);
  CHECK(two[1].index == 1);
  CHECK(r.text.substr(two[1].offset, two[1].text.size()) == "Second one!");

  r.text = "We met Dr. Smith.";
  CHECK(SplitSentences(r).size() == 1);
  r.text = "... !!!";
  CHECK(SplitSentences(r).empty());
}

TEST_CASE("hand-labeled splitter fixture") {
  std::ifstream in(std::string(XPS_TEST_FIXTURES) + "/sentences.txt");
  REQUIRE(in.good());
  std::vector<std::string> block;
  int cases = 0, sentences = 0;
  auto check_block = [&] {
    if (block.empty()) return;
    ReviewRecord r{.review_id = "r", .entity_id = "e", .text = block[0]};
    Strings expected(block.begin() + 1, block.end());
    Strings actual;
    for (const auto &s : SplitSentences(r)) actual.push_back(s.text);
    INFO("input: " << block[0]);
    CHECK(actual == expected);
    ++cases;
    sentences += static_cast<int>(expected.size());
    block.clear();
  };
  std::string line;
  while (std::getline(in, line)) {
    if (line.starts_with("#")) continue;
    if (line.empty()) {
      check_block();
    } else {
      block.push_back(line);
    }
  }
  check_block();
  CHECK(cases == 11);
  CHECK(sentences >= 20);
}

}  // namespace
}  // namespace xps
