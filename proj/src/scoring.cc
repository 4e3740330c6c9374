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

#include "xps/scoring.h"

#include <algorithm>
#include <cmath>

#include "xps/error.h"

namespace xps {

double MarkerDegree(int ordinal, int target, double delta) {
  return std::max(0.0, 1.0 - std::abs(ordinal - target) / delta);
}

MembershipScore Membership(const MarkerSummary *summary, int target_ordinal, double delta) {
  MembershipScore score;
  if (summary == nullptr || summary->total <= 0) return score;
  double weighted = 0;
  for (size_t m = 0; m < summary->counts.size(); ++m) {
    weighted += MarkerDegree(static_cast<int>(m), target_ordinal, delta) * summary->counts[m].count;
  }
  score.entity_id = summary->entity_id;
  score.value = std::clamp(weighted / summary->total, 0.0, 1.0);
  score.evidence_total = summary->total;
  return score;
}

MembershipScore PredicateMembership(const std::string &entity_id,
                                    const Interpretation &interpretation,
                                    const SubjectiveModel &model, double delta) {
  MembershipScore out;
  out.entity_id = entity_id;
  out.predicate = interpretation.predicate;
  out.value = 0;
  for (const auto &c : interpretation.components) {
    MembershipScore m =
        Membership(model.FindSummary(entity_id, c.attribute), c.target_ordinal, delta);
    out.value += c.weight * m.value;
    out.evidence_total += m.evidence_total;
  }
  if (interpretation.components.empty()) out.value = kNeutralMembership;
  out.value = std::clamp(out.value, 0.0, 1.0);
  return out;
}

double CombineConjunction(std::span<const double> values, TNorm tnorm) {
  double result = 1.0;
  for (double v : values) result = tnorm == TNorm::kMin ? std::min(result, v) : result * v;
  return result;
}

bool Satisfies(const EntityRecord &entity, const Comparison &comparison) {
  auto it = entity.objective_attrs.find(comparison.attribute);
  if (it == entity.objective_attrs.end()) return false;
  const double *value = std::get_if<double>(&it->second);
  if (value == nullptr) return false;
  switch (comparison.op) {
    case CompareOp::kLess: return *value < comparison.value;
    case CompareOp::kLessEqual: return *value <= comparison.value;
    case CompareOp::kGreater: return *value > comparison.value;
    case CompareOp::kGreaterEqual: return *value >= comparison.value;
    case CompareOp::kEqual: return *value == comparison.value;
  }
  return false;
}

std::vector<SearchResult> Search(const Query &query,
                                 std::span<const Interpretation> interpretations,
                                 const Corpus &corpus, const SubjectiveModel &model,
                                 const Config &config) {
  if (interpretations.size() != query.subjective.size()) {
    throw Error(ErrorCode::kInternal, "one interpretation per subjective predicate required");
  }
  std::vector<SearchResult> results;
  std::vector<double> values(interpretations.size());
  for (size_t index : corpus.EntitiesIn(query.relation)) {
    const EntityRecord &entity = corpus.entities()[index];
    bool pass = std::all_of(query.objective.begin(), query.objective.end(),
                            [&](const Comparison &c) { return Satisfies(entity, c); });
    if (!pass) continue;
    SearchResult result;
    result.entity_id = entity.id;
    for (size_t p = 0; p < interpretations.size(); ++p) {
      result.memberships.push_back(
          PredicateMembership(entity.id, interpretations[p], model, config.delta));
      values[p] = result.memberships.back().value;
      result.evidence_total += result.memberships.back().evidence_total;
    }
    result.score = CombineConjunction(values, config.tnorm);
    results.push_back(std::move(result));
  }
  std::sort(results.begin(), results.end(), [](const SearchResult &a, const SearchResult &b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.evidence_total != b.evidence_total) return a.evidence_total > b.evidence_total;
    return a.entity_id < b.entity_id;
  });
  if (query.limit && results.size() > static_cast<size_t>(*query.limit)) {
    results.resize(*query.limit);
  }
  for (size_t i = 0; i < results.size(); ++i) results[i].rank = static_cast<int>(i + 1);
  return results;
}

}  // namespace xps
