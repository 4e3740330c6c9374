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

#include "xps/extraction.h"

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "xps/strings.h"

namespace xps {

namespace {

struct ScoredToken {
  double polarity = 0;
  int negation = -1;     // position of the flipping cue, or -1
  int intensifier = -1;  // position of the intensifier, or -1
};

std::vector<std::optional<ScoredToken>> ScoreTokens(const std::vector<std::string> &tokens,
                                                    const Lexicon &lexicon) {
  const int n = static_cast<int>(tokens.size());
  std::vector<std::optional<ScoredToken>> scored(n);
  for (int j = 0; j < n; ++j) {
    auto prior = lexicon.Polarity(tokens[j]);
    if (!prior) continue;
    ScoredToken s;
    s.polarity = *prior;
    if (j > 0) {
      if (auto factor = lexicon.IntensifierFactor(tokens[j - 1])) {
        s.polarity *= *factor;
        s.intensifier = j - 1;
      }
    }
    for (int k = j - 1; k >= 0 && j - k <= kNegationScope; --k) {
      if (lexicon.IsNegation(tokens[k])) {
        s.polarity = -s.polarity;
        s.negation = k;
        break;
      }
    }
    s.polarity = std::clamp(s.polarity, -1.0, 1.0);
    scored[j] = s;
  }
  return scored;
}

}  // namespace

std::vector<std::optional<double>> ContextualPolarities(const std::vector<std::string> &tokens,
                                                        const Lexicon &lexicon) {
  std::vector<std::optional<double>> out;
  out.reserve(tokens.size());
  for (const auto &s : ScoreTokens(tokens, lexicon)) {
    out.push_back(s ? std::optional<double>(s->polarity) : std::nullopt);
  }
  return out;
}

double SentimentScore(const Sentence &sentence, const Lexicon &lexicon) {
  double sum = 0;
  int count = 0;
  for (const auto &p : ContextualPolarities(sentence.tokens, lexicon)) {
    if (!p) continue;
    sum += *p;
    ++count;
  }
  return count == 0 ? 0.0 : sum / count;
}

std::vector<ExtractionRecord> ExtractPhrases(const Sentence &sentence, const SchemaDef &schema,
                                             const Lexicon &lexicon) {
  std::vector<ExtractionRecord> records;
  const auto &tokens = sentence.tokens;
  const int n = static_cast<int>(tokens.size());
  if (n == 0) return records;
  auto scored = ScoreTokens(tokens, lexicon);

  for (const auto &attr : schema.attributes) {
    // [begin, end) token spans, one per paired aspect term.
    std::vector<std::pair<int, int>> spans;
    for (int i = 0; i < n; ++i) {
      if (!attr.seed_aspect_terms.contains(tokens[i])) continue;
      int best = -1;
      for (int d = 0; d <= kPairingWindow && best < 0; ++d) {
        if (i - d >= 0 && scored[i - d]) {
          best = i - d;
        } else if (i + d < n && scored[i + d]) {
          best = i + d;
        }
      }
      if (best < 0) continue;
      spans.emplace_back(std::min(i, best), std::max(i, best) + 1);
    }
    if (spans.empty()) continue;

    // Pull in the cues that modified each covered opinion word, then merge.
    auto extend = [&](std::pair<int, int> &span) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (int j = span.first; j < span.second; ++j) {
          if (!scored[j]) continue;
          for (int cue : {scored[j]->negation, scored[j]->intensifier}) {
            if (cue >= 0 && cue < span.first) {
              span.first = cue;
              changed = true;
            }
          }
        }
      }
    };
    for (auto &span : spans) extend(span);
    std::sort(spans.begin(), spans.end());
    std::vector<std::pair<int, int>> merged;
    for (const auto &span : spans) {
      if (!merged.empty() && span.first <= merged.back().second + kMergeGap) {
        merged.back().second = std::max(merged.back().second, span.second);
      } else {
        merged.push_back(span);
      }
    }

    for (const auto &[begin, end] : merged) {
      double sum = 0;
      int count = 0;
      for (int j = begin; j < end; ++j) {
        if (!scored[j]) continue;
        sum += scored[j]->polarity;
        ++count;
      }
      ExtractionRecord record;
      record.entity_id = sentence.entity_id;
      record.review_id = sentence.review_id;
      record.sentence_index = sentence.index;
      record.span_start = begin;
      record.span_end = end;
      record.attribute = attr.name;
      size_t byte_begin = sentence.token_spans[begin].first;
      size_t byte_end = sentence.token_spans[end - 1].second;
      record.phrase =
          ToLower(std::string_view(sentence.text).substr(byte_begin, byte_end - byte_begin));
      record.polarity = count == 0 ? 0.0 : std::clamp(sum / count, -1.0, 1.0);
      records.push_back(std::move(record));
    }
  }
  return records;
}

std::vector<ExtractionRecord> ExtractCorpus(const Corpus &corpus, const SchemaDef &schema,
                                            const Lexicon &lexicon) {
  std::vector<ExtractionRecord> records;
  for (const auto &review : corpus.reviews()) {
    for (const auto &sentence : SplitSentences(review, lexicon)) {
      auto found = ExtractPhrases(sentence, schema, lexicon);
      records.insert(records.end(), std::make_move_iterator(found.begin()),
                     std::make_move_iterator(found.end()));
    }
  }
  std::sort(records.begin(), records.end(), [](const auto &a, const auto &b) {
    return std::tie(a.review_id, a.sentence_index, a.span_start, a.attribute) <
           std::tie(b.review_id, b.sentence_index, b.span_start, b.attribute);
  });
  return records;
}

}  // namespace xps
