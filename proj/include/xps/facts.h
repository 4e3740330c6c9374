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

#ifndef XPS_FACTS_H_
#define XPS_FACTS_H_

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "xps/config.h"
#include "xps/corpus.h"
#include "xps/interpretation.h"
#include "xps/lexicon.h"
#include "xps/text.h"

namespace xps {

inline constexpr double kTextRankDamping = 0.85;
inline constexpr double kTextRankTolerance = 1e-4;
inline constexpr int kTextRankMaxIterations = 100;
// Attribute-document terms added to each predicate for relevance.
inline constexpr size_t kExpansionTerms = 10;

enum class CandidateKind { kTip, kFact };

std::string_view CandidateKindName(CandidateKind kind);

// A review sentence proposed as a tip or an interesting fact.
struct Candidate {
  std::string entity_id;
  std::string review_id;
  int index = 0;  // sentence index within the review
  std::string text;
  std::vector<std::string> tokens;
  CandidateKind kind = CandidateKind::kFact;
  double significance = 0;
  double relevance = 0;
  double score = 0;

  bool operator==(const Candidate &) const = default;
};

// Matches a tip phrase pattern anywhere, or starts with an imperative verb.
bool IsTip(const Sentence &sentence, const Lexicon &lexicon = Lexicon::Default());

// Token occurrence counts over a set of reviews.
struct TokenCounts {
  std::unordered_map<std::string, long> counts;
  long total = 0;

  void Add(const std::vector<std::string> &tokens);
  long Count(const std::string &token) const;
};

struct InformativeToken {
  long count = 0;
  double entity_frequency = 0;
  double background_frequency = 0;  // smoothed
  double ratio = 0;
};

struct InformativeTokenSet {
  std::string entity_id;
  std::map<std::string, InformativeToken> tokens;

  bool Contains(const std::string &token) const { return tokens.contains(token); }
};

// Non-stopword tokens with at least `c_min` occurrences in the entity whose
// relative frequency is at least `rho` times the background's. The
// background frequency is smoothed with one extra occurrence:
// (count + 1) / (total + 1).
InformativeTokenSet InformativeTokens(const std::string &entity_id, const TokenCounts &entity,
                                      const TokenCounts &background, double rho, int c_min,
                                      const Lexicon &lexicon = Lexicon::Default());

// Contains an informative token, or |sentiment| >= kExtremeSentiment.
bool IsFact(const Sentence &sentence, const InformativeTokenSet &informative, double sentiment);

// |shared| / (log(1 + |a|) + log(1 + |b|)) over content-token sets.
double SentenceSimilarity(const std::set<std::string> &a, const std::set<std::string> &b);

// Damped power iteration over the sentence similarity graph. Scores start at
// 1/n and sum to 1; dangling nodes spread their mass uniformly. Stops when no
// score moves by kTextRankTolerance or after kTextRankMaxIterations.
std::vector<double> TextRankScores(std::span<const std::set<std::string>> sentences);

// Ranks the candidates, drops the less significant sentence of every pair
// more similar than `theta`, then re-ranks the survivors so significance is
// their min-max normalized score (1 when all tie). Idempotent. Output sorted
// by significance descending.
std::vector<Candidate> TextRankDedup(std::vector<Candidate> candidates, double theta,
                                     const Lexicon &lexicon = Lexicon::Default());

// Token sets a candidate is matched against for one query predicate.
struct PredicateExpansion {
  std::string predicate;
  std::set<std::string> literal;   // predicate content tokens
  std::set<std::string> expanded;  // + alias concepts + top attribute terms
};

// `interpretation` may be null (uninterpretable predicate).
PredicateExpansion ExpandPredicate(std::string_view predicate, const Interpretation *interpretation,
                                   const AttributeDocuments &documents, const AliasTable &aliases,
                                   const Lexicon &lexicon = Lexicon::Default());

// Max over predicates of the larger of the literal and expanded cosines
// against the sentence's content tokens plus their alias concepts. 0 for no
// predicates.
double Relevance(const Candidate &candidate, std::span<const PredicateExpansion> predicates,
                 const AliasTable &aliases, const Lexicon &lexicon = Lexicon::Default());

// score = alpha * significance + (1 - alpha) * relevance; sorted by score
// descending, then (entity_id, review_id, index).
std::vector<Candidate> RankCandidates(std::vector<Candidate> candidates,
                                      std::span<const PredicateExpansion> predicates,
                                      const AliasTable &aliases, double alpha,
                                      const Lexicon &lexicon = Lexicon::Default());

struct EntityCandidates {
  std::vector<Candidate> tips;
  std::vector<Candidate> facts;
};

// Filtering phase for every entity. A sentence that passes the tip filter is
// a tip and is not also offered as a fact. Informative tokens use the other
// entities of the same category as background.
std::map<std::string, EntityCandidates> MineCandidates(const Corpus &corpus, const Config &config,
                                                       const Lexicon &lexicon = Lexicon::Default());

}  // namespace xps

#endif  // XPS_FACTS_H_
