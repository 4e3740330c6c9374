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

#include "xps/summarization.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "xps/error.h"
#include "xps/scoring.h"
#include "xps/strings.h"

namespace xps {

namespace {

// Uniform integer in [0, bound) by rejection; stable across standard
// library implementations, unlike std::uniform_int_distribution.
uint64_t UniformBelow(std::mt19937_64 &rng, uint64_t bound) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

}  // namespace

ReviewSummary StatisticalStatement(const std::string &entity_id,
                                   const InterpretationComponent &component,
                                   const SubjectiveModel &model, double delta) {
  ReviewSummary summary;
  summary.entity_id = entity_id;
  summary.attribute = component.attribute;
  summary.target_marker = component.target_marker;

  // review -> marker ordinal -> phrase count
  std::map<std::string, std::map<int, int>> votes;
  for (size_t i : model.ExtractionsFor(entity_id, component.attribute)) {
    const auto &a = model.assigned()[i];
    ++votes[a.record.review_id][a.marker];
  }
  for (const auto &[review, counts] : votes) {
    int dominant = counts.begin()->first;
    int most = 0;
    for (const auto &[marker, count] : counts) {
      if (count > most) {
        most = count;
        dominant = marker;
      }
    }
    ++summary.review_count;
    if (MarkerDegree(dominant, component.target_ordinal, delta) >= kAgreementDegree) {
      ++summary.agreeing_reviews;
    }
  }
  if (summary.review_count == 0) return summary;
  summary.percentage =
      static_cast<int>(std::lround(100.0 * summary.agreeing_reviews / summary.review_count));
  summary.statement = std::to_string(summary.percentage) + "% of " +
                      std::to_string(summary.review_count) + " reviews say it is " +
                      Humanize(component.target_marker);
  return summary;
}

std::vector<Snippet> SampleSnippets(const std::string &entity_id,
                                    const InterpretationComponent &component,
                                    const SubjectiveModel &model, int k, uint64_t seed,
                                    double delta) {
  std::vector<size_t> pool;
  for (size_t i : model.ExtractionsFor(entity_id, component.attribute)) {
    if (MarkerDegree(model.assigned()[i].marker, component.target_ordinal, delta) >=
        kAgreementDegree) {
      pool.push_back(i);
    }
  }
  const size_t take = std::min(pool.size(), static_cast<size_t>(std::max(k, 0)));
  uint64_t stream = Fnv1a64(entity_id);
  stream = Fnv1a64(std::string(1, '\0') + component.attribute, stream);
  stream = Fnv1a64(std::string(1, '\0') + component.target_marker, stream);
  std::mt19937_64 rng(seed ^ stream);
  // Partial Fisher-Yates.
  for (size_t i = 0; i < take; ++i) {
    size_t j = i + UniformBelow(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(take);
  std::sort(pool.begin(), pool.end());

  std::vector<Snippet> out;
  for (size_t i : pool) {
    const auto &r = model.assigned()[i].record;
    out.push_back({r.review_id, r.sentence_index, r.phrase});
  }
  return out;
}

ReviewSummary Summarize(const std::string &entity_id, const Interpretation &interpretation,
                        const SubjectiveModel &model, int k, uint64_t seed, double delta) {
  if (interpretation.components.empty()) {
    throw Error(ErrorCode::kInternal, "interpretation without components");
  }
  const InterpretationComponent *main = &interpretation.components.front();
  for (const auto &c : interpretation.components) {
    if (c.weight > main->weight) main = &c;
  }
  ReviewSummary summary = StatisticalStatement(entity_id, *main, model, delta);
  summary.predicate = interpretation.predicate;
  summary.snippets = SampleSnippets(entity_id, *main, model, k, seed, delta);
  return summary;
}

}  // namespace xps
