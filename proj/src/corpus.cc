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

#include "xps/corpus.h"

#include <fstream>
#include <string>
#include <unordered_set>

#include "xps/error.h"
#include "xps/strings.h"

namespace xps {

using nlohmann::json;

namespace {

Error LineError(const std::string &source, int line, const std::string &message) {
  return Error(ErrorCode::kBadInput, source + ": line " + std::to_string(line) + ": " + message);
}

// Calls fn(json, line_number) for each non-blank line.
template <typename Fn>
void ForEachJsonLine(std::istream &in, const std::string &source, Fn fn) {
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (Trim(line).empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error &e) {
      throw LineError(source, line_number, std::string("malformed JSON: ") + e.what());
    }
    if (!record.is_object()) throw LineError(source, line_number, "expected a JSON object");
    fn(record, line_number);
  }
}

std::string RequireString(const json &record, const char *key, const std::string &source,
                          int line) {
  auto it = record.find(key);
  if (it == record.end() || !it->is_string()) {
    throw LineError(source, line, std::string("missing string field '") + key + "'");
  }
  return it->get<std::string>();
}

double RequireNumber(const json &record, const char *key, const std::string &source, int line) {
  auto it = record.find(key);
  if (it == record.end() || !it->is_number()) {
    throw LineError(source, line, std::string("missing numeric field '") + key + "'");
  }
  return it->get<double>();
}

json ExtraFields(const json &record, std::initializer_list<const char *> known) {
  json extra = json::object();
  for (auto it = record.begin(); it != record.end(); ++it) {
    bool is_known = false;
    for (const char *k : known) is_known |= it.key() == k;
    if (!is_known) extra[it.key()] = it.value();
  }
  return extra;
}

std::ifstream OpenOrThrow(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kBadInput, "cannot open " + path.string());
  return in;
}

const std::vector<size_t> kNoIndices;

}  // namespace

std::string_view CategoryName(Category category) {
  switch (category) {
    case Category::kHotel: return "hotel";
    case Category::kAttraction: return "attraction";
    case Category::kRestaurant: return "restaurant";
  }
  return "hotel";
}

std::string_view RelationName(Category category) {
  switch (category) {
    case Category::kHotel: return "Hotels";
    case Category::kAttraction: return "Attractions";
    case Category::kRestaurant: return "Restaurants";
  }
  return "Hotels";
}

std::optional<Category> ParseCategory(std::string_view name) {
  std::string lower = ToLower(name);
  if (lower == "hotel" || lower == "hotels") return Category::kHotel;
  if (lower == "attraction" || lower == "attractions") return Category::kAttraction;
  if (lower == "restaurant" || lower == "restaurants") return Category::kRestaurant;
  return std::nullopt;
}

const Marker *SubjectiveAttributeDef::FindMarker(std::string_view label) const {
  for (const Marker &m : markers) {
    if (m.label == label) return &m;
  }
  return nullptr;
}

const SubjectiveAttributeDef *SchemaDef::Find(std::string_view name) const {
  for (const auto &attr : attributes) {
    if (attr.name == name) return &attr;
  }
  return nullptr;
}

std::vector<EntityRecord> ParseEntities(std::istream &in, const std::string &source) {
  std::vector<EntityRecord> entities;
  std::unordered_set<std::string> seen;
  ForEachJsonLine(in, source, [&](const json &record, int line) {
    EntityRecord entity;
    entity.id = RequireString(record, "id", source, line);
    if (entity.id.empty()) throw LineError(source, line, "empty id");
    entity.name = RequireString(record, "name", source, line);
    std::string category = RequireString(record, "category", source, line);
    auto parsed = ParseCategory(category);
    if (!parsed) throw LineError(source, line, "unknown category '" + category + "'");
    entity.category = *parsed;
    entity.location.latitude = RequireNumber(record, "lat", source, line);
    entity.location.longitude = RequireNumber(record, "lon", source, line);
    if (entity.location.latitude < -90 || entity.location.latitude > 90) {
      throw LineError(source, line, "latitude out of range");
    }
    if (entity.location.longitude < -180 || entity.location.longitude > 180) {
      throw LineError(source, line, "longitude out of range");
    }
    if (auto attrs = record.find("attrs"); attrs != record.end()) {
      if (!attrs->is_object()) throw LineError(source, line, "attrs must be an object");
      for (auto it = attrs->begin(); it != attrs->end(); ++it) {
        if (it->is_number()) {
          entity.objective_attrs[it.key()] = it->get<double>();
        } else if (it->is_string()) {
          entity.objective_attrs[it.key()] = it->get<std::string>();
        } else {
          throw LineError(source, line, "attribute '" + it.key() + "' must be a number or string");
        }
      }
    }
    if (auto price = entity.objective_attrs.find("price_pn");
        price != entity.objective_attrs.end()) {
      const double *value = std::get_if<double>(&price->second);
      if (value == nullptr || *value <= 0) {
        throw LineError(source, line, "price_pn must be a positive number");
      }
    }
    entity.extra = ExtraFields(record, {"id", "name", "category", "lat", "lon", "attrs"});
    if (!seen.insert(entity.id).second) {
      throw LineError(source, line, "duplicate id " + entity.id);
    }
    entities.push_back(std::move(entity));
  });
  return entities;
}

std::vector<ReviewRecord> ParseReviews(std::istream &in, const std::vector<EntityRecord> &entities,
                                       const std::string &source) {
  std::unordered_set<std::string> entity_ids;
  for (const auto &e : entities) entity_ids.insert(e.id);

  std::vector<ReviewRecord> reviews;
  std::unordered_set<std::string> seen;
  ForEachJsonLine(in, source, [&](const json &record, int line) {
    ReviewRecord review;
    review.review_id = RequireString(record, "review_id", source, line);
    if (review.review_id.empty()) throw LineError(source, line, "empty review_id");
    review.entity_id = RequireString(record, "entity_id", source, line);
    review.text = RequireString(record, "text", source, line);
    if (Trim(review.text).empty()) {
      throw LineError(source, line, "review " + review.review_id + " has empty text");
    }
    if (auto rating = record.find("rating"); rating != record.end() && !rating->is_null()) {
      if (!rating->is_number_integer()) throw LineError(source, line, "rating must be an integer");
      int value = rating->get<int>();
      if (value < 1 || value > 5) throw LineError(source, line, "rating must lie in [1, 5]");
      review.rating = value;
    }
    review.extra = ExtraFields(record, {"review_id", "entity_id", "text", "rating"});
    if (!entity_ids.contains(review.entity_id)) {
      throw LineError(
          source, line,
          "review " + review.review_id + " references unknown entity " + review.entity_id);
    }
    if (!seen.insert(review.review_id).second) {
      throw LineError(source, line, "duplicate review_id " + review.review_id);
    }
    reviews.push_back(std::move(review));
  });
  return reviews;
}

SchemaDef ParseSchema(const json &doc) {
  auto fail = [](const std::string &message) {
    return Error(ErrorCode::kBadInput, "schema: " + message);
  };
  if (!doc.is_object() || !doc.contains("attributes") || !doc["attributes"].is_array()) {
    throw fail("expected an object with an 'attributes' array");
  }
  SchemaDef schema;
  std::unordered_set<std::string> names;
  for (const json &attr : doc["attributes"]) {
    if (!attr.is_object() || !attr.contains("name") || !attr["name"].is_string()) {
      throw fail("attribute without a name");
    }
    SubjectiveAttributeDef def;
    def.name = attr["name"].get<std::string>();
    if (def.name.empty()) throw fail("attribute with an empty name");
    if (!names.insert(def.name).second) throw fail("duplicate attribute " + def.name);

    if (attr.contains("aspect_terms")) {
      for (const json &term : attr["aspect_terms"]) {
        if (!term.is_string()) throw fail(def.name + ": aspect terms must be strings");
        std::string lower = ToLower(Trim(term.get<std::string>()));
        if (!lower.empty()) def.seed_aspect_terms.insert(lower);
      }
    }
    if (!attr.contains("markers") || !attr["markers"].is_array()) {
      throw fail(def.name + ": missing markers");
    }
    std::unordered_set<std::string> labels;
    for (const json &m : attr["markers"]) {
      if (!m.is_object() || !m.contains("label") || !m["label"].is_string()) {
        throw fail(def.name + ": marker without a label");
      }
      Marker marker;
      marker.label = m["label"].get<std::string>();
      marker.ordinal = static_cast<int>(def.markers.size());
      if (!labels.insert(marker.label).second) {
        throw fail(def.name + ": duplicate marker " + marker.label);
      }
      if (m.contains("phrases")) {
        for (const json &p : m["phrases"]) {
          if (!p.is_string()) throw fail(def.name + ": marker phrases must be strings");
          marker.seed_phrases.push_back(ToLower(Trim(p.get<std::string>())));
        }
      }
      def.markers.push_back(std::move(marker));
    }
    if (def.markers.size() < 2) {
      throw fail("attribute " + def.name + " needs at least 2 markers");
    }
    schema.attributes.push_back(std::move(def));
  }
  return schema;
}

AliasTable ParseAliases(std::istream &in, const std::string &source) {
  AliasTable table;
  ForEachJsonLine(in, source, [&](const json &record, int line) {
    std::string token = ToLower(Trim(RequireString(record, "token", source, line)));
    if (token.empty()) throw LineError(source, line, "empty token");
    auto concepts = record.find("concepts");
    if (concepts == record.end() || !concepts->is_array()) {
      throw LineError(source, line, "missing 'concepts' array");
    }
    for (const json &c : *concepts) {
      if (!c.is_string()) throw LineError(source, line, "concepts must be strings");
      std::string lower = ToLower(Trim(c.get<std::string>()));
      if (!lower.empty()) table[token].insert(lower);
    }
    if (!table.contains(token))
      throw LineError(source, line, "alias " + token + " has no concepts");
  });
  return table;
}

std::vector<EntityRecord> LoadEntities(const std::filesystem::path &path) {
  auto in = OpenOrThrow(path);
  return ParseEntities(in, path.string());
}

std::vector<ReviewRecord> LoadReviews(const std::filesystem::path &path,
                                      const std::vector<EntityRecord> &entities) {
  auto in = OpenOrThrow(path);
  return ParseReviews(in, entities, path.string());
}

SchemaDef LoadSchema(const std::filesystem::path &path) {
  auto in = OpenOrThrow(path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error &e) {
    throw Error(ErrorCode::kBadInput, path.string() + ": malformed JSON: " + e.what());
  }
  return ParseSchema(doc);
}

AliasTable LoadAliases(const std::filesystem::path &path) {
  auto in = OpenOrThrow(path);
  return ParseAliases(in, path.string());
}

json AttrValueToJson(const AttrValue &value) {
  if (const double *d = std::get_if<double>(&value)) return *d;
  return std::get<std::string>(value);
}

json EntityToJson(const EntityRecord &entity) {
  json out = entity.extra;
  out["id"] = entity.id;
  out["name"] = entity.name;
  out["category"] = CategoryName(entity.category);
  out["lat"] = entity.location.latitude;
  out["lon"] = entity.location.longitude;
  json attrs = json::object();
  for (const auto &[key, value] : entity.objective_attrs) attrs[key] = AttrValueToJson(value);
  out["attrs"] = attrs;
  return out;
}

json ReviewToJson(const ReviewRecord &review) {
  json out = review.extra;
  out["review_id"] = review.review_id;
  out["entity_id"] = review.entity_id;
  out["text"] = review.text;
  if (review.rating) out["rating"] = *review.rating;
  return out;
}

json SchemaToJson(const SchemaDef &schema) {
  json attributes = json::array();
  for (const auto &attr : schema.attributes) {
    json markers = json::array();
    for (const auto &m : attr.markers) {
      markers.push_back({{"label", m.label}, {"phrases", m.seed_phrases}});
    }
    attributes.push_back(
        {{"name", attr.name}, {"aspect_terms", attr.seed_aspect_terms}, {"markers", markers}});
  }
  return {{"attributes", attributes}};
}

Corpus::Corpus(std::vector<EntityRecord> entities, std::vector<ReviewRecord> reviews)
    : entities_(std::move(entities)), reviews_(std::move(reviews)) {
  for (size_t i = 0; i < entities_.size(); ++i) {
    const auto &e = entities_[i];
    if (!entity_index_.emplace(e.id, i).second) {
      throw Error(ErrorCode::kBadInput, "duplicate id " + e.id);
    }
    entities_by_category_[e.category].push_back(i);
  }
  for (size_t i = 0; i < reviews_.size(); ++i) {
    const auto &r = reviews_[i];
    if (!entity_index_.contains(r.entity_id)) {
      throw Error(ErrorCode::kBadInput,
                  "review " + r.review_id + " references unknown entity " + r.entity_id);
    }
    if (!review_index_.emplace(r.review_id, i).second) {
      throw Error(ErrorCode::kBadInput, "duplicate review_id " + r.review_id);
    }
    reviews_by_entity_[r.entity_id].push_back(i);
  }
}

const EntityRecord *Corpus::FindEntity(std::string_view id) const {
  auto it = entity_index_.find(std::string(id));
  return it == entity_index_.end() ? nullptr : &entities_[it->second];
}

const ReviewRecord *Corpus::FindReview(std::string_view id) const {
  auto it = review_index_.find(std::string(id));
  return it == review_index_.end() ? nullptr : &reviews_[it->second];
}

const std::vector<size_t> &Corpus::ReviewsOf(std::string_view entity_id) const {
  auto it = reviews_by_entity_.find(std::string(entity_id));
  return it == reviews_by_entity_.end() ? kNoIndices : it->second;
}

const std::vector<size_t> &Corpus::EntitiesIn(Category category) const {
  auto it = entities_by_category_.find(category);
  return it == entities_by_category_.end() ? kNoIndices : it->second;
}

}  // namespace xps
