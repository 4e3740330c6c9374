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

#include "xps/lexicon.h"

#include <charconv>

#include "xps/error.h"
#include "xps/strings.h"
#include "xps/text.h"

namespace xps {

namespace lexicon_data {
extern const char kOpinion[];
extern const char kNegations[];
extern const char kIntensifiers[];
extern const char kAbbreviations[];
extern const char kTipPatterns[];
extern const char kImperativeVerbs[];
extern const char kStopwords[];
}  // namespace lexicon_data

namespace {

struct Entry {
  std::string key;
  double value = 1;
};

std::vector<Entry> ParseEntries(std::string_view text, std::string_view list_name) {
  std::vector<Entry> entries;
  int line_number = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_number;
    std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    Entry entry;
    auto tab = trimmed.find('\t');
    entry.key = ToLower(Trim(trimmed.substr(0, tab)));
    if (tab != std::string_view::npos) {
      std::string_view value = Trim(trimmed.substr(tab + 1));
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), entry.value);
      if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw Error(ErrorCode::kBadInput, std::string(list_name) + " lexicon line " +
                                              std::to_string(line_number) + ": bad value");
      }
    }
    if (!entry.key.empty()) entries.push_back(std::move(entry));
  }
  return entries;
}

std::unordered_set<std::string> ParseSet(std::string_view text, std::string_view list_name) {
  std::unordered_set<std::string> out;
  for (auto &e : ParseEntries(text, list_name)) out.insert(std::move(e.key));
  return out;
}

}  // namespace

Lexicon::Lexicon(const Sources &sources) {
  for (auto &e : ParseEntries(sources.opinion, "opinion")) {
    if (e.value < -1 || e.value > 1 || e.value == 0) {
      throw Error(ErrorCode::kBadInput, "opinion lexicon: polarity of '" + e.key +
                                            "' must be nonzero and within [-1, 1]");
    }
    opinion_[e.key] = e.value;
  }
  negations_ = ParseSet(sources.negations, "negation");
  for (auto &e : ParseEntries(sources.intensifiers, "intensifier")) {
    intensifiers_[e.key] = e.value;
  }
  abbreviations_ = ParseSet(sources.abbreviations, "abbreviation");
  imperative_verbs_ = ParseSet(sources.imperative_verbs, "imperative verb");
  stopwords_ = ParseSet(sources.stopwords, "stopword");
  for (auto &e : ParseEntries(sources.tip_patterns, "tip pattern")) {
    auto tokens = Tokenize(e.key);
    if (!tokens.empty()) tip_patterns_.push_back(std::move(tokens));
  }
}

const Lexicon &Lexicon::Default() {
  static const Lexicon *lexicon = new Lexicon(Sources{
      .opinion = lexicon_data::kOpinion,
      .negations = lexicon_data::kNegations,
      .intensifiers = lexicon_data::kIntensifiers,
      .abbreviations = lexicon_data::kAbbreviations,
      .tip_patterns = lexicon_data::kTipPatterns,
      .imperative_verbs = lexicon_data::kImperativeVerbs,
      .stopwords = lexicon_data::kStopwords,
  });
  return *lexicon;
}

std::optional<double> Lexicon::Polarity(std::string_view token) const {
  auto it = opinion_.find(std::string(token));
  if (it == opinion_.end()) return std::nullopt;
  return it->second;
}

bool Lexicon::IsNegation(std::string_view token) const {
  if (token.size() > 3 && token.ends_with("n't")) return true;
  return negations_.contains(std::string(token));
}

std::optional<double> Lexicon::IntensifierFactor(std::string_view token) const {
  auto it = intensifiers_.find(std::string(token));
  if (it == intensifiers_.end()) return std::nullopt;
  return it->second;
}

bool Lexicon::IsAbbreviation(std::string_view token) const {
  return abbreviations_.contains(std::string(token));
}

bool Lexicon::IsImperativeVerb(std::string_view token) const {
  return imperative_verbs_.contains(std::string(token));
}

bool Lexicon::IsStopword(std::string_view token) const {
  return stopwords_.contains(std::string(token));
}

}  // namespace xps
