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

#include "xps/api.h"

#include <charconv>

#include "xps/query.h"
#include "xps/scoring.h"
#include "xps/strings.h"
#include "xps/summarization.h"

namespace xps {

using nlohmann::json;

namespace {

Response Ok(const json &body) { return {200, body.dump()}; }

json EntityJson(const EntityRecord &e) {
  json attrs = json::object();
  for (const auto &[key, value] : e.objective_attrs) attrs[key] = AttrValueToJson(value);
  return {{"id", e.id},
          {"name", e.name},
          {"category", CategoryName(e.category)},
          {"lat", e.location.latitude},
          {"lon", e.location.longitude},
          {"attrs", attrs}};
}

json InterpretationJson(const Interpretation &interpretation) {
  json components = json::array();
  for (const auto &c : interpretation.components) {
    components.push_back(
        {{"attribute", c.attribute}, {"target_marker", c.target_marker}, {"weight", c.weight}});
  }
  return {{"predicate", interpretation.predicate},
          {"matched_directly", interpretation.matched_directly},
          {"components", components}};
}

json ReviewSummaryJson(const ReviewSummary &s) {
  json snippets = json::array();
  for (const auto &snippet : s.snippets) {
    snippets.push_back({{"review_id", snippet.review_id},
                        {"sentence_index", snippet.sentence_index},
                        {"text", snippet.text}});
  }
  json out = {{"entity_id", s.entity_id},
              {"predicate", s.predicate},
              {"attribute", s.attribute},
              {"target_marker", s.target_marker},
              {"percentage", s.percentage},
              {"review_count", s.review_count},
              {"agreeing_reviews", s.agreeing_reviews},
              {"snippets", snippets}};
  if (s.statement) out["statement"] = *s.statement;
  return out;
}

json CandidateList(const std::vector<Candidate> &ranked, size_t n) {
  json out = json::array();
  for (size_t i = 0; i < ranked.size() && i < n; ++i)
    out.push_back(CandidateToJson(ranked[i], true));
  return out;
}

template <typename Fn>
Response Guard(Fn fn) {
  try {
    return fn();
  } catch (const Error &e) {
    return ErrorResponse(e);
  } catch (const std::exception &e) {
    return ErrorResponse(Error(ErrorCode::kInternal, e.what()));
  }
}

std::vector<Interpretation> InterpretAll(const IndexSnapshot &s,
                                         const std::vector<std::string> &predicates,
                                         const Config &config) {
  std::vector<Interpretation> out;
  for (const auto &p : predicates) {
    out.push_back(InterpretPredicate(p, s.documents, s.schema, s.aliases, config.tau));
  }
  return out;
}

// Facts and tips ranked against the predicates. Uninterpretable predicates
// still match literally and through aliases.
std::pair<std::vector<Candidate>, std::vector<Candidate>> RankedCandidates(
    const IndexSnapshot &s, const std::string &entity_id,
    const std::vector<std::string> &predicates, const std::vector<Interpretation> *interpreted,
    const Config &config) {
  std::vector<PredicateExpansion> expansions;
  for (size_t i = 0; i < predicates.size(); ++i) {
    std::optional<Interpretation> local;
    const Interpretation *interpretation = nullptr;
    if (interpreted != nullptr) {
      interpretation = &(*interpreted)[i];
    } else {
      try {
        local = InterpretPredicate(predicates[i], s.documents, s.schema, s.aliases, config.tau);
        interpretation = &*local;
      } catch (const Error &e) {
        if (e.code() != ErrorCode::kUninterpretablePredicate) throw;
      }
    }
    expansions.push_back(ExpandPredicate(predicates[i], interpretation, s.documents, s.aliases));
  }
  auto it = s.candidates.find(entity_id);
  if (it == s.candidates.end()) return {};
  return {RankCandidates(it->second.facts, expansions, s.aliases, config.alpha),
          RankCandidates(it->second.tips, expansions, s.aliases, config.alpha)};
}

}  // namespace

int HttpStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadQuery: return 400;
    case ErrorCode::kBadInput: return 400;
    case ErrorCode::kUnknownEntity: return 404;
    case ErrorCode::kUninterpretablePredicate: return 422;
    case ErrorCode::kInternal: return 500;
  }
  return 500;
}

Response ErrorResponse(const Error &error) {
  ErrorCode code = error.code() == ErrorCode::kBadInput ? ErrorCode::kBadQuery : error.code();
  json body = {{"code", ErrorCodeName(code)}, {"message", *error.what() ? error.what() : "error"}};
  if (error.position()) body["position"] = *error.position();
  return {HttpStatus(code), json{{"error", body}}.dump()};
}

std::vector<std::string> PredicatesFromParameter(std::string_view q) {
  std::string_view trimmed = Trim(q);
  if (trimmed.empty()) return {};
  if (ToLower(trimmed.substr(0, 7)) == "select " || ToLower(trimmed) == "select") {
    return ParseQuery(trimmed).subjective;
  }
  return {std::string(trimmed)};
}

Response Api::Search(std::string_view q, std::optional<std::string_view> limit) const {
  return Guard([&] {
    auto snapshot = holder_.Get();
    const IndexSnapshot &s = *snapshot;
    Query query = ParseQuery(q);
    if (limit && !Trim(*limit).empty()) {
      std::string_view text = Trim(*limit);
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size() || value <= 0) {
        throw Error(ErrorCode::kBadQuery, "limit must be a positive integer");
      }
      query.limit = value;
    }
    auto interpretations = InterpretAll(s, query.subjective, config_);
    auto results = xps::Search(query, interpretations, s.corpus, s.model, config_);

    json interpretation_json = json::array();
    for (const auto &i : interpretations) interpretation_json.push_back(InterpretationJson(i));

    json results_json = json::array();
    for (const auto &r : results) {
      const EntityRecord *entity = s.corpus.FindEntity(r.entity_id);
      json memberships = json::array();
      for (const auto &m : r.memberships) {
        memberships.push_back(
            {{"predicate", m.predicate}, {"value", m.value}, {"evidence", m.evidence_total}});
      }
      json summaries = json::array();
      for (const auto &i : interpretations) {
        summaries.push_back(ReviewSummaryJson(
            Summarize(r.entity_id, i, s.model, config_.snippet_k, config_.seed, config_.delta)));
      }
      auto [facts, tips] =
          RankedCandidates(s, r.entity_id, query.subjective, &interpretations, config_);
      results_json.push_back({{"entity", EntityJson(*entity)},
                              {"score", r.score},
                              {"rank", r.rank},
                              {"evidence", r.evidence_total},
                              {"memberships", memberships},
                              {"summary", summaries},
                              {"facts", CandidateList(facts, kResultCandidates)},
                              {"tips", CandidateList(tips, kResultCandidates)}});
    }
    return Ok({{"query", RenderQuery(query)},
               {"interpretation", interpretation_json},
               {"results", results_json},
               {"version", s.version}});
  });
}

Response Api::Entity(std::string_view id) const {
  return Guard([&] {
    auto snapshot = holder_.Get();
    const IndexSnapshot &s = *snapshot;
    const EntityRecord *entity = s.corpus.FindEntity(id);
    if (entity == nullptr) {
      throw Error(ErrorCode::kUnknownEntity, "unknown entity " + std::string(id));
    }
    json summaries = json::array();
    for (const auto &attr : s.schema.attributes) {
      if (const MarkerSummary *m = s.model.FindSummary(entity->id, attr.name)) {
        summaries.push_back(SummaryToJson(*m));
      }
    }
    return Ok({{"entity", EntityJson(*entity)},
               {"review_count", s.corpus.ReviewsOf(entity->id).size()},
               {"marker_summaries", summaries},
               {"version", s.version}});
  });
}

Response Api::Facts(std::string_view id, std::optional<std::string_view> q) const {
  return Guard([&] {
    auto snapshot = holder_.Get();
    const IndexSnapshot &s = *snapshot;
    const EntityRecord *entity = s.corpus.FindEntity(id);
    if (entity == nullptr) {
      throw Error(ErrorCode::kUnknownEntity, "unknown entity " + std::string(id));
    }
    std::vector<std::string> predicates =
        q ? PredicatesFromParameter(*q) : std::vector<std::string>{};
    auto [facts, tips] = RankedCandidates(s, entity->id, predicates, nullptr, config_);
    return Ok({{"entity_id", entity->id},
               {"predicates", predicates},
               {"facts", CandidateList(facts, kEntityCandidates)},
               {"tips", CandidateList(tips, kEntityCandidates)},
               {"version", s.version}});
  });
}

Response Api::Summary(std::string_view id, std::optional<std::string_view> q) const {
  return Guard([&] {
    auto snapshot = holder_.Get();
    const IndexSnapshot &s = *snapshot;
    const EntityRecord *entity = s.corpus.FindEntity(id);
    if (entity == nullptr) {
      throw Error(ErrorCode::kUnknownEntity, "unknown entity " + std::string(id));
    }
    std::vector<std::string> predicates =
        q ? PredicatesFromParameter(*q) : std::vector<std::string>{};
    if (predicates.empty()) {
      throw Error(ErrorCode::kBadQuery,
                  "summary needs a q parameter naming at least one predicate");
    }
    auto interpretations = InterpretAll(s, predicates, config_);
    json summaries = json::array();
    json interpretation_json = json::array();
    for (const auto &i : interpretations) {
      interpretation_json.push_back(InterpretationJson(i));
      summaries.push_back(ReviewSummaryJson(
          Summarize(entity->id, i, s.model, config_.snippet_k, config_.seed, config_.delta)));
    }
    return Ok({{"entity_id", entity->id},
               {"interpretation", interpretation_json},
               {"summaries", summaries},
               {"version", s.version}});
  });
}

Response Api::Health() const {
  auto snapshot = holder_.Get();
  return Ok({{"status", "ok"}, {"version", snapshot->version}});
}

}  // namespace xps
