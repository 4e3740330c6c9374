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

#ifndef XPS_SUMMARIZATION_H_
#define XPS_SUMMARIZATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xps/interpretation.h"
#include "xps/model.h"

namespace xps {

// A marker within this degree of the target counts as agreeing with it.
inline constexpr double kAgreementDegree = 0.5;

struct Snippet {
  std::string review_id;
  int sentence_index = 0;
  std::string text;

  bool operator==(const Snippet &) const = default;
};

// "75% of 200 reviews say it is very quiet", for one entity and one
// interpretation component.
struct ReviewSummary {
  std::string entity_id;
  std::string predicate;
  std::string attribute;
  std::string target_marker;
  // Absent when no review mentions the attribute.
  std::optional<std::string> statement;
  int percentage = 0;
  int review_count = 0;  // reviews with at least one phrase for the attribute
  int agreeing_reviews = 0;
  std::vector<Snippet> snippets;

  bool operator==(const ReviewSummary &) const = default;
};

// Counts reviews, not phrases. Each review votes with its dominant marker
// (most phrases; ties toward the lower ordinal) and agrees when that marker
// is within kAgreementDegree of the target.
ReviewSummary StatisticalStatement(const std::string &entity_id,
                                   const InterpretationComponent &component,
                                   const SubjectiveModel &model, double delta = 2.0);

// Up to k phrases whose marker agrees with the target, drawn uniformly
// without replacement. The draw depends only on (seed, entity, attribute,
// target), so repeated calls return identical snippets.
std::vector<Snippet> SampleSnippets(const std::string &entity_id,
                                    const InterpretationComponent &component,
                                    const SubjectiveModel &model, int k, uint64_t seed,
                                    double delta = 2.0);

// Statement plus snippets for the heaviest component of the interpretation.
ReviewSummary Summarize(const std::string &entity_id, const Interpretation &interpretation,
                        const SubjectiveModel &model, int k, uint64_t seed, double delta = 2.0);

}  // namespace xps

#endif  // XPS_SUMMARIZATION_H_
