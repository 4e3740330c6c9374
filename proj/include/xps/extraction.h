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

#ifndef XPS_EXTRACTION_H_
#define XPS_EXTRACTION_H_

#include <optional>
#include <string>
#include <vector>

#include "xps/corpus.h"
#include "xps/lexicon.h"
#include "xps/text.h"

namespace xps {

// Aspect and opinion tokens pair up when at most this many tokens apart.
inline constexpr int kPairingWindow = 4;
// A negation cue flips an opinion word up to this many tokens after it.
inline constexpr int kNegationScope = 3;
// Same-attribute spans this many tokens apart or closer merge ("quiet and
// peaceful").
inline constexpr int kMergeGap = 1;
// |sentiment| at or above this counts as extreme.
inline constexpr double kExtremeSentiment = 0.5;

// One opinion phrase about a subjective attribute.
struct ExtractionRecord {
  std::string entity_id;
  std::string review_id;
  int sentence_index = 0;
  // Token span [span_start, span_end) within the sentence.
  int span_start = 0;
  int span_end = 0;
  std::string attribute;
  // Lowercased source text of the span.
  std::string phrase;
  double polarity = 0;

  bool operator==(const ExtractionRecord &) const = default;
};

// Per-token polarity after negation and intensifier handling; nullopt for
// tokens not in the opinion lexicon.
std::vector<std::optional<double>> ContextualPolarities(const std::vector<std::string> &tokens,
                                                        const Lexicon &lexicon);

// Mean contextual polarity of the sentence's opinion tokens, 0 if none.
double SentimentScore(const Sentence &sentence, const Lexicon &lexicon = Lexicon::Default());

// Pairs every aspect term of every attribute with its nearest opinion word
// within kPairingWindow (the aspect term itself counts when it carries
// polarity). Each pair spans the tokens between them plus the negation and
// intensifier cues that modified the opinion word. Spans of the same
// attribute at most kMergeGap tokens apart merge into one record whose
// polarity is the mean over the opinion words it covers. Aspect terms with
// no opinion word in range yield nothing.
std::vector<ExtractionRecord> ExtractPhrases(const Sentence &sentence, const SchemaDef &schema,
                                             const Lexicon &lexicon = Lexicon::Default());

// Extraction over a whole corpus, sorted by (review_id, sentence_index,
// span_start, attribute).
std::vector<ExtractionRecord> ExtractCorpus(const Corpus &corpus, const SchemaDef &schema,
                                            const Lexicon &lexicon = Lexicon::Default());

}  // namespace xps

#endif  // XPS_EXTRACTION_H_
