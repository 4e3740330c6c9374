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

#include "xps/strings.h"

namespace xps {

namespace {

bool IsAsciiAlnum(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// Length of the UTF-8 punctuation sequence at text[i], or 0. Covers the
// general punctuation block (U+2000..U+206F) and Latin-1 punctuation
// (U+00A0..U+00BF).
size_t PunctuationLength(std::string_view text, size_t i) {
  auto byte = [&](size_t k) { return static_cast<unsigned char>(text[k]); };
  if (i + 2 < text.size() && byte(i) == 0xE2 && (byte(i + 1) == 0x80 || byte(i + 1) == 0x81)) {
    return 3;
  }
  if (i + 1 < text.size() && byte(i) == 0xC2 && byte(i + 1) >= 0xA0 && byte(i + 1) <= 0xBF) {
    return 2;
  }
  return 0;
}

bool IsRightSingleQuote(std::string_view text, size_t i) {
  return i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
         static_cast<unsigned char>(text[i + 1]) == 0x80 &&
         static_cast<unsigned char>(text[i + 2]) == 0x99;
}

// Number of bytes of the word character at text[i], or 0 when text[i] does
// not start one.
size_t WordCharLength(std::string_view text, size_t i) {
  unsigned char c = static_cast<unsigned char>(text[i]);
  if (IsAsciiAlnum(c)) return 1;
  if (c < 0x80) return 0;
  if (PunctuationLength(text, i) > 0) return 0;
  // Any other UTF-8 sequence: take the lead byte plus continuation bytes.
  size_t len = 1;
  while (i + len < text.size() && (static_cast<unsigned char>(text[i + len]) & 0xC0) == 0x80) {
    ++len;
  }
  return len;
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

std::vector<Token> TokenizeWithOffsets(std::string_view text) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < text.size()) {
    size_t len = WordCharLength(text, i);
    if (len == 0) {
      size_t punct = PunctuationLength(text, i);
      i += punct > 0 ? punct : 1;
      continue;
    }
    Token token;
    token.begin = i;
    while (i < text.size()) {
      len = WordCharLength(text, i);
      if (len > 0) {
        token.text.append(ToLower(text.substr(i, len)));
        i += len;
        continue;
      }
      // Intra-word apostrophe or hyphen.
      size_t connector = 0;
      char as = 0;
      if (text[i] == '\'' || text[i] == '-') {
        connector = 1;
        as = text[i];
      } else if (IsRightSingleQuote(text, i)) {
        connector = 3;
        as = '\'';
      }
      if (connector == 0 || i + connector >= text.size() ||
          WordCharLength(text, i + connector) == 0) {
        break;
      }
      token.text.push_back(as);
      i += connector;
    }
    token.end = i;
    tokens.push_back(std::move(token));
  }
  return tokens;
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> out;
  for (auto &t : TokenizeWithOffsets(text)) out.push_back(std::move(t.text));
  return out;
}

Sentence MakeSentence(std::string_view text, std::string review_id, std::string entity_id,
                      int index, size_t offset) {
  Sentence s;
  s.review_id = std::move(review_id);
  s.entity_id = std::move(entity_id);
  s.index = index;
  s.text = std::string(text);
  s.offset = offset;
  for (auto &t : TokenizeWithOffsets(s.text)) {
    s.token_spans.emplace_back(t.begin, t.end);
    s.tokens.push_back(std::move(t.text));
  }
  return s;
}

std::vector<Sentence> SplitSentences(const ReviewRecord &review, const Lexicon &lexicon) {
  std::string_view text = review.text;
  std::vector<Sentence> sentences;
  size_t start = 0;

  auto emit = [&](size_t end) {
    std::string_view raw = text.substr(start, end - start);
    std::string_view trimmed = Trim(raw);
    if (!trimmed.empty()) {
      size_t offset = start + (trimmed.data() - raw.data());
      Sentence s = MakeSentence(trimmed, review.review_id, review.entity_id,
                                static_cast<int>(sentences.size()), offset);
      if (!s.tokens.empty()) {
        sentences.push_back(std::move(s));
      }
    }
    start = end;
  };

  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c != '.' && c != '!' && c != '?') {
      ++i;
      continue;
    }
    size_t run_begin = i;
    bool has_terminal = false;  // '!' or '?' in the run
    while (i < text.size() && (text[i] == '.' || text[i] == '!' || text[i] == '?')) {
      has_terminal |= text[i] != '.';
      ++i;
    }
    // Closing quotes and brackets stay with the sentence they end.
    size_t end = i;
    while (end < text.size() &&
           (text[end] == '"' || text[end] == '\'' || text[end] == ')' || text[end] == ']')) {
      ++end;
    }
    bool at_break = end == text.size() || IsSpace(text[end]);
    if (!at_break) continue;

    if (!has_terminal && i - run_begin == 1) {
      // A lone period: check the word it follows.
      size_t word_begin = run_begin;
      while (word_begin > start && !IsSpace(text[word_begin - 1]) && text[word_begin - 1] != '(' &&
             text[word_begin - 1] != '"') {
        --word_begin;
      }
      std::string_view word = text.substr(word_begin, run_begin - word_begin);
      // An uppercase initial, as in "J. Smith"; the pronoun "I" still ends one.
      bool initial = word.size() == 1 && word[0] >= 'A' && word[0] <= 'Z' && word[0] != 'I';
      if (initial || lexicon.IsAbbreviation(ToLower(word))) continue;
    }
    emit(end);
    i = end;
  }
  emit(text.size());
  return sentences;
}

}  // namespace xps
