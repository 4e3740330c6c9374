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

#ifndef XPS_SCORING_H_
#define XPS_SCORING_H_

#include <span>
#include <string>
#include <vector>

#include "xps/config.h"
#include "xps/corpus.h"
#include "xps/interpretation.h"
#include "xps/model.h"
#include "xps/query.h"

namespace xps {

// Membership assumed when an entity has no evidence for an attribute.
inline constexpr double kNeutralMembership = 0.5;

// max(0, 1 - |ordinal - target| / delta)
double MarkerDegree(int ordinal, int target, double delta = 2.0);

struct MembershipScore {
  std::string entity_id;
  std::string predicate;
  double value = kNeutralMembership;
  int evidence_total = 0;

  bool operator==(const MembershipScore &) const = default;
};

// sum_m degree(m, target) * count(m) / total. A null or empty summary gives
// kNeutralMembership with zero evidence.
MembershipScore Membership(const MarkerSummary *summary, int target_ordinal, double delta = 2.0);

// Weighted sum of component memberships; evidence adds up.
MembershipScore PredicateMembership(const std::string &entity_id,
                                    const Interpretation &interpretation,
                                    const SubjectiveModel &model, double delta = 2.0);

// Product or min t-norm; 1 for no inputs.
double CombineConjunction(std::span<const double> values, TNorm tnorm = TNorm::kProduct);

// False when the entity lacks the attribute or holds a non-numeric value.
bool Satisfies(const EntityRecord &entity, const Comparison &comparison);

struct SearchResult {
  std::string entity_id;
  double score = 1;
  std::vector<MembershipScore> memberships;  // one per subjective predicate
  int evidence_total = 0;
  int rank = 0;  // 1-based

  bool operator==(const SearchResult &) const = default;
};

// Ranks the entities of query.relation that pass every objective comparison.
// `interpretations` pairs with query.subjective. Sorted by score descending,
// then evidence_total descending, then entity id; truncated to query.limit.
std::vector<SearchResult> Search(const Query &query,
                                 std::span<const Interpretation> interpretations,
                                 const Corpus &corpus, const SubjectiveModel &model,
                                 const Config &config = {});

}  // namespace xps

#endif  // XPS_SCORING_H_
