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

#ifndef XPS_LEXICON_H_
#define XPS_LEXICON_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace xps {

// Word lists used by extraction, sentence splitting and tip mining. Each list
// is plain text, one "token<TAB>value" entry per line, '#' comments allowed.
// The default instance is compiled in from data/lexicon/.
class Lexicon {
 public:
  struct Sources {
    std::string_view opinion;
    std::string_view negations;
    std::string_view intensifiers;
    std::string_view abbreviations;
    std::string_view tip_patterns;
    std::string_view imperative_verbs;
    std::string_view stopwords;
  };

  explicit Lexicon(const Sources &sources);

  static const Lexicon &Default();

  // Signed prior polarity in {-1, -0.5, 0.5, 1}.
  std::optional<double> Polarity(std::string_view token) const;

  // Matches the listed cues and any token ending in "n't".
  bool IsNegation(std::string_view token) const;

  std::optional<double> IntensifierFactor(std::string_view token) const;
  bool IsAbbreviation(std::string_view token) const;
  bool IsImperativeVerb(std::string_view token) const;
  bool IsStopword(std::string_view token) const;

  // Tip phrase patterns, tokenized.
  const std::vector<std::vector<std::string>> &tip_patterns() const { return tip_patterns_; }

  size_t opinion_size() const { return opinion_.size(); }

 private:
  std::unordered_map<std::string, double> opinion_;
  std::unordered_set<std::string> negations_;
  std::unordered_map<std::string, double> intensifiers_;
  std::unordered_set<std::string> abbreviations_;
  std::unordered_set<std::string> imperative_verbs_;
  std::unordered_set<std::string> stopwords_;
  std::vector<std::vector<std::string>> tip_patterns_;
};

}  // namespace xps

#endif  // XPS_LEXICON_H_
