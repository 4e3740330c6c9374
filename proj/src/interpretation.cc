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

#include "xps/interpretation.h"

#include <algorithm>
#include <cmath>

#include "xps/error.h"
#include "xps/text.h"

namespace xps {

namespace {

void AddTerms(std::string_view text, int times, const Lexicon &lexicon,
              std::map<std::string, double> &bag) {
  for (const auto &t : Tokenize(text)) {
    if (!lexicon.IsStopword(t)) bag[t] += times;
  }
}

std::vector<std::string> ContentTokenList(std::string_view text, const Lexicon &lexicon) {
  std::vector<std::string> all = Tokenize(text);
  std::vector<std::string> content;
  for (const auto &t : all) {
    if (!lexicon.IsStopword(t)) content.push_back(t);
  }
  return content.empty() ? all : content;
}

}  // namespace

std::vector<std::string> AttributeDocument::TopTerms(size_t n) const {
  std::vector<std::pair<std::string, double>> terms(weights.begin(), weights.end());
  std::sort(terms.begin(), terms.end(), [](const auto &a, const auto &b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<std::string> out;
  for (size_t i = 0; i < terms.size() && i < n; ++i) out.push_back(terms[i].first);
  return out;
}

const AttributeDocument *AttributeDocuments::Find(std::string_view attribute) const {
  for (const auto &doc : documents) {
    if (doc.attribute == attribute) return &doc;
  }
  return nullptr;
}

AttributeDocuments BuildAttributeDocuments(std::span<const LinguisticDomain> domains,
                                           const SchemaDef &schema, const Lexicon &lexicon) {
  std::vector<std::map<std::string, double>> bags;
  for (const auto &attr : schema.attributes) {
    std::map<std::string, double> bag;
    AddTerms(attr.name, 1, lexicon, bag);
    for (const auto &marker : attr.markers) {
      AddTerms(marker.label, 1, lexicon, bag);
      for (const auto &seed : marker.seed_phrases) AddTerms(seed, 1, lexicon, bag);
    }
    for (const auto &domain : domains) {
      if (domain.attribute != attr.name) continue;
      for (const auto &[phrase, count] : domain.phrases) AddTerms(phrase, count, lexicon, bag);
    }
    bags.push_back(std::move(bag));
  }

  AttributeDocuments out;
  std::map<std::string, int> df;
  for (const auto &bag : bags) {
    for (const auto &[term, tf] : bag) ++df[term];
  }
  const double n = static_cast<double>(bags.size());
  for (const auto &[term, count] : df) out.iaf[term] = std::log(n / count);

  for (size_t i = 0; i < bags.size(); ++i) {
    AttributeDocument doc;
    doc.attribute = schema.attributes[i].name;
    double sq = 0;
    for (const auto &[term, tf] : bags[i]) {
      double w = tf * out.iaf[term];
      if (w <= 0) continue;
      doc.weights[term] = w;
      sq += w * w;
    }
    doc.norm = std::sqrt(sq);
    out.documents.push_back(std::move(doc));
  }
  return out;
}

std::vector<std::string> ExpandTokens(std::string_view text, const AliasTable &aliases,
                                      const Lexicon &lexicon) {
  std::vector<std::string> tokens = ContentTokenList(text, lexicon);
  std::vector<std::string> expanded = tokens;
  for (const auto &t : tokens) {
    auto it = aliases.find(t);
    if (it == aliases.end()) continue;
    expanded.insert(expanded.end(), it->second.begin(), it->second.end());
  }
  return expanded;
}

std::vector<std::pair<std::string, double>> ScoreAttributes(std::string_view predicate,
                                                            const AttributeDocuments &documents,
                                                            const AliasTable &aliases,
                                                            const Lexicon &lexicon) {
  std::map<std::string, double> query;
  for (const auto &t : ExpandTokens(predicate, aliases, lexicon)) {
    auto it = documents.iaf.find(t);
    if (it != documents.iaf.end() && it->second > 0) query[t] += it->second;
  }
  double query_norm = 0;
  for (const auto &[t, w] : query) query_norm += w * w;
  query_norm = std::sqrt(query_norm);

  std::vector<std::pair<std::string, double>> scores;
  for (const auto &doc : documents.documents) {
    double dot = 0;
    for (const auto &[t, w] : query) {
      auto it = doc.weights.find(t);
      if (it != doc.weights.end()) dot += w * it->second;
    }
    double score = (query_norm == 0 || doc.norm == 0) ? 0.0 : dot / (query_norm * doc.norm);
    scores.emplace_back(doc.attribute, score);
  }
  std::sort(scores.begin(), scores.end(), [](const auto &a, const auto &b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return scores;
}

const Marker &TargetMarker(const std::vector<std::string> &predicate_tokens,
                           const SubjectiveAttributeDef &attribute, const Lexicon &lexicon) {
  std::set<std::string> tokens(predicate_tokens.begin(), predicate_tokens.end());
  const Marker *best = &attribute.markers.front();
  double best_score = 0;
  for (const auto &marker : attribute.markers) {
    double score = SetCosine(tokens, ContentTokens(marker.label, lexicon)) +
                   SetCosine(tokens, MarkerTokens(marker, lexicon));
    if (score > best_score) {
      best_score = score;
      best = &marker;
    }
  }
  return *best;
}

Interpretation InterpretPredicate(std::string_view predicate, const AttributeDocuments &documents,
                                  const SchemaDef &schema, const AliasTable &aliases, double tau,
                                  const Lexicon &lexicon) {
  Interpretation out;
  out.predicate = std::string(predicate);
  const std::vector<std::string> expanded = ExpandTokens(predicate, aliases, lexicon);

  auto component = [&](const SubjectiveAttributeDef &attr, double weight) {
    const Marker &target = TargetMarker(expanded, attr, lexicon);
    return InterpretationComponent{attr.name, target.label, target.ordinal, weight};
  };

  // Naming an attribute outright is always a direct match.
  std::vector<std::string> literal = ContentTokenList(predicate, lexicon);
  std::sort(literal.begin(), literal.end());
  for (const auto &attr : schema.attributes) {
    std::vector<std::string> name = ContentTokenList(attr.name, lexicon);
    std::sort(name.begin(), name.end());
    if (!literal.empty() && literal == name) {
      out.components.push_back(component(attr, 1.0));
      out.matched_directly = true;
      return out;
    }
  }

  auto scores = ScoreAttributes(predicate, documents, aliases, lexicon);
  if (scores.empty() || scores.front().second <= 0) {
    throw Error(ErrorCode::kUninterpretablePredicate,
                "uninterpretable predicate \"" + std::string(predicate) + "\"");
  }
  const auto &[best_name, best_score] = scores.front();
  const SubjectiveAttributeDef *best = schema.Find(best_name);
  if (best == nullptr) {
    throw Error(ErrorCode::kInternal, "attribute document " + best_name + " not in schema");
  }
  if (best_score >= tau) {
    out.components.push_back(component(*best, 1.0));
    out.matched_directly = true;
    return out;
  }
  if (scores.size() < 2 || scores[1].second <= 0) {
    out.components.push_back(component(*best, 1.0));
    return out;
  }
  const SubjectiveAttributeDef *second = schema.Find(scores[1].first);
  if (second == nullptr) {
    throw Error(ErrorCode::kInternal, "attribute document " + scores[1].first + " not in schema");
  }
  double sum = best_score + scores[1].second;
  out.components.push_back(component(*best, best_score / sum));
  out.components.push_back(component(*second, 1.0 - best_score / sum));
  return out;
}

}  // namespace xps
