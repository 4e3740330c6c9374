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

#ifndef XPS_MODEL_H_
#define XPS_MODEL_H_

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "xps/corpus.h"
#include "xps/extraction.h"
#include "xps/lexicon.h"

namespace xps {

// Weight of lexical overlap against polarity agreement in MarkerSimilarity.
inline constexpr double kLexicalWeight = 0.5;

// Ordinals map linearly onto [+1, -1]: ordinal 0 is +1, the last is -1.
double MarkerPole(int ordinal, int marker_count);

// Cosine between two token sets viewed as binary vectors; 0 if either is
// empty.
double SetCosine(const std::set<std::string> &a, const std::set<std::string> &b);

// Content tokens of a phrase: tokenized, stopwords removed.
std::set<std::string> ContentTokens(std::string_view text,
                                    const Lexicon &lexicon = Lexicon::Default());

// Union of a marker's seed-phrase content tokens; the label's tokens when the
// marker has no seed phrases.
std::set<std::string> MarkerTokens(const Marker &marker,
                                   const Lexicon &lexicon = Lexicon::Default());

//   kLexicalWeight * SetCosine(phrase, marker tokens)
//     + (1 - kLexicalWeight) * (1 - |polarity - pole| / 2)
double MarkerSimilarity(std::string_view phrase, double polarity, const Marker &marker,
                        int marker_count, const Lexicon &lexicon = Lexicon::Default());

// Closest marker for an extraction. A phrase equal to a seed phrase takes
// that marker outright; otherwise the MarkerSimilarity argmax, ties toward
// the lower ordinal.
const Marker &AssignMarker(const ExtractionRecord &record, const SubjectiveAttributeDef &attribute,
                           const Lexicon &lexicon = Lexicon::Default());

struct MarkerCount {
  std::string label;
  int count = 0;
  bool operator==(const MarkerCount &) const = default;
};

// Histogram of one entity's phrases over an attribute's markers, in ordinal
// order.
struct MarkerSummary {
  std::string entity_id;
  std::string attribute;
  std::vector<MarkerCount> counts;
  int total = 0;

  bool operator==(const MarkerSummary &) const = default;
};

// Every phrase seen for an attribute, with its corpus count.
struct LinguisticDomain {
  std::string attribute;
  std::map<std::string, int> phrases;

  bool operator==(const LinguisticDomain &) const = default;
};

struct AssignedExtraction {
  ExtractionRecord record;
  int marker = 0;  // ordinal of the assigned marker

  bool operator==(const AssignedExtraction &) const = default;
};

std::vector<AssignedExtraction> AssignMarkers(std::span<const ExtractionRecord> extractions,
                                              const SchemaDef &schema,
                                              const Lexicon &lexicon = Lexicon::Default());

// One summary per (entity, attribute) with at least one extraction, sorted by
// entity id then schema attribute order. Records naming attributes outside
// the schema are skipped.
std::vector<MarkerSummary> BuildSummaries(std::span<const AssignedExtraction> assigned,
                                          const SchemaDef &schema);
std::vector<MarkerSummary> BuildSummaries(std::span<const ExtractionRecord> extractions,
                                          const SchemaDef &schema,
                                          const Lexicon &lexicon = Lexicon::Default());

// One domain per attribute with at least one extraction, in schema order.
std::vector<LinguisticDomain> BuildDomains(std::span<const ExtractionRecord> extractions,
                                           const SchemaDef &schema);

// Assigned extractions, summaries and domains, indexed for lookup. Immutable
// after construction.
class SubjectiveModel {
 public:
  SubjectiveModel() = default;
  SubjectiveModel(const SchemaDef &schema, std::span<const ExtractionRecord> extractions,
                  const Lexicon &lexicon = Lexicon::Default());
  // Reassembles a model from its serialized parts.
  SubjectiveModel(std::vector<AssignedExtraction> assigned, std::vector<MarkerSummary> summaries,
                  std::vector<LinguisticDomain> domains);

  const std::vector<AssignedExtraction> &assigned() const { return assigned_; }
  const std::vector<MarkerSummary> &summaries() const { return summaries_; }
  const std::vector<LinguisticDomain> &domains() const { return domains_; }

  const MarkerSummary *FindSummary(std::string_view entity_id, std::string_view attribute) const;

  // Indices into assigned() for one entity and attribute, in stored order.
  const std::vector<size_t> &ExtractionsFor(std::string_view entity_id,
                                            std::string_view attribute) const;

 private:
  void BuildIndex();

  std::vector<AssignedExtraction> assigned_;
  std::vector<MarkerSummary> summaries_;
  std::vector<LinguisticDomain> domains_;
  std::unordered_map<std::string, size_t> summary_index_;
  std::unordered_map<std::string, std::vector<size_t>> extraction_index_;
};

}  // namespace xps

#endif  // XPS_MODEL_H_
