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

#ifndef XPS_TEXT_H_
#define XPS_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "xps/corpus.h"
#include "xps/lexicon.h"

namespace xps {

// A token and the byte range [begin, end) it was read from.
struct Token {
  std::string text;
  size_t begin = 0;
  size_t end = 0;
};

// Lowercases and splits on anything that is not a letter, digit or UTF-8
// byte. Apostrophes and hyphens are kept when they sit between word
// characters ("don't", "check-in"); U+2019 is read as an apostrophe.
std::vector<Token> TokenizeWithOffsets(std::string_view text);
std::vector<std::string> Tokenize(std::string_view text);

struct Sentence {
  std::string review_id;
  std::string entity_id;
  int index = 0;
  std::string text;
  std::vector<std::string> tokens;
  // Byte ranges of tokens within `text`.
  std::vector<std::pair<size_t, size_t>> token_spans;
  // Byte offset of `text` within the review.
  size_t offset = 0;
};

Sentence MakeSentence(std::string_view text, std::string review_id = {}, std::string entity_id = {},
                      int index = 0, size_t offset = 0);

// Splits on runs of '.', '!' and '?'. A period after a listed abbreviation,
// a single letter or inside a number does not end the sentence. Sentences
// that contain no tokens are dropped.
std::vector<Sentence> SplitSentences(const ReviewRecord &review,
                                     const Lexicon &lexicon = Lexicon::Default());

}  // namespace xps

#endif  // XPS_TEXT_H_
