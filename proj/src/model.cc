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

#include "xps/model.h"

#include <cmath>

#include "xps/text.h"

namespace xps {

namespace {

std::string Key(std::string_view entity_id, std::string_view attribute) {
  std::string key(entity_id);
  key.push_back('\0');
  key.append(attribute);
  return key;
}

const std::vector<size_t> kNone;

}  // namespace

double MarkerPole(int ordinal, int marker_count) {
  if (marker_count <= 1) return 1.0;
  return 1.0 - 2.0 * ordinal / (marker_count - 1);
}

double SetCosine(const std::set<std::string> &a, const std::set<std::string> &b) {
  if (a.empty() || b.empty()) return 0.0;
  size_t shared = 0;
  for (const auto &t : a) shared += b.count(t);
  return shared / std::sqrt(static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

std::set<std::string> ContentTokens(std::string_view text, const Lexicon &lexicon) {
  std::set<std::string> out;
  for (auto &t : Tokenize(text)) {
    if (!lexicon.IsStopword(t)) out.insert(std::move(t));
  }
  return out;
}

std::set<std::string> MarkerTokens(const Marker &marker, const Lexicon &lexicon) {
  std::set<std::string> out;
  for (const auto &phrase : marker.seed_phrases) {
    out.merge(ContentTokens(phrase, lexicon));
  }
  if (marker.seed_phrases.empty()) out = ContentTokens(marker.label, lexicon);
  return out;
}

double MarkerSimilarity(std::string_view phrase, double polarity, const Marker &marker,
                        int marker_count, const Lexicon &lexicon) {
  double lexical = SetCosine(ContentTokens(phrase, lexicon), MarkerTokens(marker, lexicon));
  double proximity = 1.0 - std::abs(polarity - MarkerPole(marker.ordinal, marker_count)) / 2.0;
  return kLexicalWeight * lexical + (1.0 - kLexicalWeight) * proximity;
}

const Marker &AssignMarker(const ExtractionRecord &record, const SubjectiveAttributeDef &attribute,
                           const Lexicon &lexicon) {
  for (const auto &marker : attribute.markers) {
    for (const auto &seed : marker.seed_phrases) {
      if (seed == record.phrase) return marker;
    }
  }
  const auto phrase_tokens = ContentTokens(record.phrase, lexicon);
  const int k = attribute.marker_count();
  const Marker *best = &attribute.markers.front();
  double best_score = -1;
  for (const auto &marker : attribute.markers) {
    double lexical = SetCosine(phrase_tokens, MarkerTokens(marker, lexicon));
    double proximity = 1.0 - std::abs(record.polarity - MarkerPole(marker.ordinal, k)) / 2.0;
    double score = kLexicalWeight * lexical + (1.0 - kLexicalWeight) * proximity;
    if (score > best_score) {
      best_score = score;
      best = &marker;
    }
  }
  return *best;
}

std::vector<AssignedExtraction> AssignMarkers(std::span<const ExtractionRecord> extractions,
                                              const SchemaDef &schema, const Lexicon &lexicon) {
  std::vector<AssignedExtraction> out;
  out.reserve(extractions.size());
  for (const auto &record : extractions) {
    const SubjectiveAttributeDef *attr = schema.Find(record.attribute);
    if (attr == nullptr) continue;
    out.push_back({record, AssignMarker(record, *attr, lexicon).ordinal});
  }
  return out;
}

std::vector<MarkerSummary> BuildSummaries(std::span<const AssignedExtraction> assigned,
                                          const SchemaDef &schema) {
  // entity -> attribute position in schema -> summary
  std::map<std::string, std::map<size_t, MarkerSummary>> grouped;
  for (const auto &a : assigned) {
    size_t position = 0;
    while (position < schema.attributes.size() &&
           schema.attributes[position].name != a.record.attribute) {
      ++position;
    }
    if (position == schema.attributes.size()) continue;
    const auto &attr = schema.attributes[position];
    auto &summary = grouped[a.record.entity_id][position];
    if (summary.counts.empty()) {
      summary.entity_id = a.record.entity_id;
      summary.attribute = attr.name;
      for (const auto &m : attr.markers) summary.counts.push_back({m.label, 0});
    }
    ++summary.counts.at(a.marker).count;
    ++summary.total;
  }
  std::vector<MarkerSummary> out;
  for (auto &[entity, by_attr] : grouped) {
    for (auto &[position, summary] : by_attr) out.push_back(std::move(summary));
  }
  return out;
}

std::vector<MarkerSummary> BuildSummaries(std::span<const ExtractionRecord> extractions,
                                          const SchemaDef &schema, const Lexicon &lexicon) {
  auto assigned = AssignMarkers(extractions, schema, lexicon);
  return BuildSummaries(std::span<const AssignedExtraction>(assigned), schema);
}

std::vector<LinguisticDomain> BuildDomains(std::span<const ExtractionRecord> extractions,
                                           const SchemaDef &schema) {
  std::vector<LinguisticDomain> domains;
  for (const auto &attr : schema.attributes) {
    LinguisticDomain domain;
    domain.attribute = attr.name;
    for (const auto &record : extractions) {
      if (record.attribute == attr.name) ++domain.phrases[record.phrase];
    }
    if (!domain.phrases.empty()) domains.push_back(std::move(domain));
  }
  return domains;
}

SubjectiveModel::SubjectiveModel(const SchemaDef &schema,
                                 std::span<const ExtractionRecord> extractions,
                                 const Lexicon &lexicon)
    : assigned_(AssignMarkers(extractions, schema, lexicon)),
      summaries_(BuildSummaries(std::span<const AssignedExtraction>(assigned_), schema)),
      domains_(BuildDomains(extractions, schema)) {
  BuildIndex();
}

SubjectiveModel::SubjectiveModel(std::vector<AssignedExtraction> assigned,
                                 std::vector<MarkerSummary> summaries,
                                 std::vector<LinguisticDomain> domains)
    : assigned_(std::move(assigned)),
      summaries_(std::move(summaries)),
      domains_(std::move(domains)) {
  BuildIndex();
}

void SubjectiveModel::BuildIndex() {
  for (size_t i = 0; i < summaries_.size(); ++i) {
    summary_index_[Key(summaries_[i].entity_id, summaries_[i].attribute)] = i;
  }
  for (size_t i = 0; i < assigned_.size(); ++i) {
    const auto &r = assigned_[i].record;
    extraction_index_[Key(r.entity_id, r.attribute)].push_back(i);
  }
}

const MarkerSummary *SubjectiveModel::FindSummary(std::string_view entity_id,
                                                  std::string_view attribute) const {
  auto it = summary_index_.find(Key(entity_id, attribute));
  return it == summary_index_.end() ? nullptr : &summaries_[it->second];
}

const std::vector<size_t> &SubjectiveModel::ExtractionsFor(std::string_view entity_id,
                                                           std::string_view attribute) const {
  auto it = extraction_index_.find(Key(entity_id, attribute));
  return it == extraction_index_.end() ? kNone : it->second;
}

}  // namespace xps
