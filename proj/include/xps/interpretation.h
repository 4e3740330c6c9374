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

#ifndef XPS_INTERPRETATION_H_
#define XPS_INTERPRETATION_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xps/corpus.h"
#include "xps/lexicon.h"
#include "xps/model.h"

namespace xps {

// Term-frequency x inverse-attribute-frequency vector describing one
// attribute. Terms with zero weight are not stored.
struct AttributeDocument {
  std::string attribute;
  std::map<std::string, double> weights;
  double norm = 0;

  // Highest-weighted terms, ties by term.
  std::vector<std::string> TopTerms(size_t n) const;

  bool operator==(const AttributeDocument &) const = default;
};

struct AttributeDocuments {
  std::vector<AttributeDocument> documents;  // schema order
  // ln(N / df) over the N attribute documents.
  std::map<std::string, double> iaf;

  const AttributeDocument *Find(std::string_view attribute) const;

  bool operator==(const AttributeDocuments &) const = default;
};

// Each attribute's bag of terms is its domain phrases (weighted by corpus
// count), name tokens, marker labels and marker seed phrases, with stopwords
// removed.
AttributeDocuments BuildAttributeDocuments(std::span<const LinguisticDomain> domains,
                                           const SchemaDef &schema,
                                           const Lexicon &lexicon = Lexicon::Default());

struct InterpretationComponent {
  std::string attribute;
  std::string target_marker;
  int target_ordinal = 0;
  double weight = 1;

  bool operator==(const InterpretationComponent &) const = default;
};

// A subjective predicate rewritten as a weighted mix of (attribute, target
// marker) pairs. Weights sum to 1.
struct Interpretation {
  std::string predicate;
  std::vector<InterpretationComponent> components;
  bool matched_directly = false;

  bool operator==(const Interpretation &) const = default;
};

// Predicate content tokens plus their alias concepts, with multiplicity.
std::vector<std::string> ExpandTokens(std::string_view text, const AliasTable &aliases,
                                      const Lexicon &lexicon = Lexicon::Default());

// Cosine of the expanded predicate against every attribute document, ties by
// attribute name. Attributes scoring 0 are included.
std::vector<std::pair<std::string, double>> ScoreAttributes(
    std::string_view predicate, const AttributeDocuments &documents, const AliasTable &aliases,
    const Lexicon &lexicon = Lexicon::Default());

// A predicate whose content tokens equal an attribute's name tokens maps to
// that attribute directly. Otherwise the best-scoring attribute is taken
// alone when it reaches `tau`, and the top two share the weight in
// proportion to their scores when it does not. Throws
// Error(kUninterpretablePredicate) when every score is 0.
Interpretation InterpretPredicate(std::string_view predicate, const AttributeDocuments &documents,
                                  const SchemaDef &schema, const AliasTable &aliases, double tau,
                                  const Lexicon &lexicon = Lexicon::Default());

// Marker of `attribute` most similar to the predicate tokens by label and
// seed-phrase overlap; ordinal 0 when nothing overlaps.
const Marker &TargetMarker(const std::vector<std::string> &predicate_tokens,
                           const SubjectiveAttributeDef &attribute,
                           const Lexicon &lexicon = Lexicon::Default());

}  // namespace xps

#endif  // XPS_INTERPRETATION_H_
