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

#ifndef XPS_CORPUS_H_
#define XPS_CORPUS_H_

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "json.hpp"

namespace xps {

enum class Category { kHotel, kAttraction, kRestaurant };

// Singular lowercase name: "hotel", "attraction", "restaurant".
std::string_view CategoryName(Category category);

// Relation name as written in queries: "Hotels", "Attractions", "Restaurants".
std::string_view RelationName(Category category);

// Accepts singular or plural, any case.
std::optional<Category> ParseCategory(std::string_view name);

using AttrValue = std::variant<double, std::string>;

struct GeoPoint {
  double latitude = 0;
  double longitude = 0;
  bool operator==(const GeoPoint &) const = default;
};

struct EntityRecord {
  std::string id;
  std::string name;
  Category category = Category::kHotel;
  GeoPoint location;
  std::map<std::string, AttrValue> objective_attrs;
  // Keys of the input record this library does not interpret. Written back
  // out unchanged by the snapshot writer.
  nlohmann::json extra = nlohmann::json::object();

  bool operator==(const EntityRecord &) const = default;
};

struct ReviewRecord {
  std::string review_id;
  std::string entity_id;
  std::string text;
  std::optional<int> rating;
  nlohmann::json extra = nlohmann::json::object();

  bool operator==(const ReviewRecord &) const = default;
};

// One point on an attribute's quality spectrum. Ordinal 0 is the most
// positive pole.
struct Marker {
  std::string label;
  int ordinal = 0;
  std::vector<std::string> seed_phrases;

  bool operator==(const Marker &) const = default;
};

struct SubjectiveAttributeDef {
  std::string name;
  std::set<std::string> seed_aspect_terms;
  std::vector<Marker> markers;

  int marker_count() const { return static_cast<int>(markers.size()); }
  const Marker *FindMarker(std::string_view label) const;

  bool operator==(const SubjectiveAttributeDef &) const = default;
};

struct SchemaDef {
  std::vector<SubjectiveAttributeDef> attributes;

  const SubjectiveAttributeDef *Find(std::string_view name) const;

  bool operator==(const SchemaDef &) const = default;
};

// Surface token -> concept tokens, e.g. presidio -> {park}.
using AliasTable = std::map<std::string, std::set<std::string>>;

// Parsing from streams. `source` names the input in error messages.
std::vector<EntityRecord> ParseEntities(std::istream &in, const std::string &source = "entities");
std::vector<ReviewRecord> ParseReviews(std::istream &in, const std::vector<EntityRecord> &entities,
                                       const std::string &source = "reviews");
SchemaDef ParseSchema(const nlohmann::json &doc);
AliasTable ParseAliases(std::istream &in, const std::string &source = "aliases");

std::vector<EntityRecord> LoadEntities(const std::filesystem::path &path);
std::vector<ReviewRecord> LoadReviews(const std::filesystem::path &path,
                                      const std::vector<EntityRecord> &entities);
SchemaDef LoadSchema(const std::filesystem::path &path);
AliasTable LoadAliases(const std::filesystem::path &path);

// Serialization mirroring the input formats.
nlohmann::json EntityToJson(const EntityRecord &entity);
nlohmann::json ReviewToJson(const ReviewRecord &review);
nlohmann::json SchemaToJson(const SchemaDef &schema);
nlohmann::json AttrValueToJson(const AttrValue &value);

// Immutable, indexed view over the loaded entities and reviews. Safe for
// concurrent readers once constructed.
class Corpus {
 public:
  Corpus() = default;
  // Validates referential integrity and id uniqueness.
  Corpus(std::vector<EntityRecord> entities, std::vector<ReviewRecord> reviews);

  const std::vector<EntityRecord> &entities() const { return entities_; }
  const std::vector<ReviewRecord> &reviews() const { return reviews_; }

  const EntityRecord *FindEntity(std::string_view id) const;
  const ReviewRecord *FindReview(std::string_view id) const;

  // Indices into reviews(), in file order.
  const std::vector<size_t> &ReviewsOf(std::string_view entity_id) const;

  // Indices into entities(), in file order.
  const std::vector<size_t> &EntitiesIn(Category category) const;

 private:
  std::vector<EntityRecord> entities_;
  std::vector<ReviewRecord> reviews_;
  std::unordered_map<std::string, size_t> entity_index_;
  std::unordered_map<std::string, size_t> review_index_;
  std::unordered_map<std::string, std::vector<size_t>> reviews_by_entity_;
  std::map<Category, std::vector<size_t>> entities_by_category_;
};

}  // namespace xps

#endif  // XPS_CORPUS_H_
