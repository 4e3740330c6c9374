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

#include "xps/synth.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "xps/error.h"

namespace xps {
namespace fixture_data {
extern const char kSchemaJson[];
extern const char kAliasesJsonl[];
}  // namespace fixture_data

namespace synth {

namespace {

constexpr std::string_view kHotelNames[] = {
    "Monte Cristo", "Drisco",  "Marina Inn", "Golden Gate", "Nob Hill", "Union Square",
    "Bay Breeze",   "Cypress", "Fog Harbor", "Lombard",     "Mission",  "Hayes Valley",
    "Pacific",      "Sutter",  "Telegraph",  "Alamo",       "Presidio", "Seacliff",
    "Twin Peaks",   "Ferry",   "Potrero",    "Bernal",      "Russian",  "Cow Hollow",
};

std::string Capitalize(std::string_view s) {
  std::string out(s);
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z')
    out[0] = static_cast<char>(out[0] - 'a' + 'A');
  return out;
}

std::string Format(std::string_view pattern, std::string_view value) {
  std::string out(pattern);
  auto pos = out.find("{}");
  if (pos != std::string::npos) out.replace(pos, 2, value);
  return Capitalize(out);
}

template <typename T>
const T &Pick(Rng &rng, const std::vector<T> &items) {
  return items[rng.Below(items.size())];
}

}  // namespace

const std::vector<MarkerTemplate> &MarkerTemplates() {
  static const std::vector<MarkerTemplate> templates = {
      {"room_quietness", "very_quiet", "The room was very quiet at night."},
      {"room_quietness", "very_quiet", "Quiet and peaceful location."},
      {"room_quietness", "very_quiet", "The neighborhood seems very quiet at night."},
      {"room_quietness", "average", "The room was fairly quiet."},
      {"room_quietness", "average", "Fairly quiet for a city hotel."},
      {"room_quietness", "noisy", "We heard traffic noise from the street."},
      {"room_quietness", "noisy", "The street was noisy."},
      {"room_quietness", "very_noisy", "The street was extremely loud."},
      {"room_quietness", "very_noisy", "Very noisy at night."},

      {"staff_friendliness", "very_friendly", "The staff were extremely helpful."},
      {"staff_friendliness", "very_friendly", "Very friendly staff at reception."},
      {"staff_friendliness", "friendly", "Friendly staff at the front desk."},
      {"staff_friendliness", "friendly", "The receptionist was polite."},
      {"staff_friendliness", "unfriendly", "The receptionist was unfriendly."},
      {"staff_friendliness", "unfriendly", "Staff at the desk seemed unfriendly."},
      {"staff_friendliness", "rude", "The staff were very rude."},
      {"staff_friendliness", "rude", "The receptionist was rude to us."},

      {"service_quality", "exceptional", "The concierge service was exceptional."},
      {"service_quality", "exceptional", "Exceptional service from the concierge."},
      {"service_quality", "good", "Housekeeping service was good."},
      {"service_quality", "good", "Good service at breakfast."},
      {"service_quality", "poor", "Room service was poor."},
      {"service_quality", "poor", "Poor service at the bar."},
      {"service_quality", "terrible", "The service was terrible."},
      {"service_quality", "terrible", "Awful service at breakfast."},

      {"bathroom_luxury", "luxurious", "The bathroom was luxurious with a marble tub."},
      {"bathroom_luxury", "luxurious", "Luxurious bathroom with a big tub."},
      {"bathroom_luxury", "comfortable", "The shower was nice and comfortable."},
      {"bathroom_luxury", "comfortable", "Comfortable bathroom and nice towels."},
      {"bathroom_luxury", "basic", "The bathroom was a bit cramped."},
      {"bathroom_luxury", "basic", "Cramped shower but it worked."},
      {"bathroom_luxury", "shabby", "The tub was dirty and moldy."},
      {"bathroom_luxury", "shabby", "Shabby bathroom overall."},

      {"room_cleanliness", "spotless", "The sheets were spotless."},
      {"room_cleanliness", "spotless", "Spotless carpet and floors."},
      {"room_cleanliness", "clean", "Clean linens every day."},
      {"room_cleanliness", "clean", "The sheets were clean."},
      {"room_cleanliness", "dirty", "The carpet was stained."},
      {"room_cleanliness", "dirty", "Stained sheets on the bed."},
      {"room_cleanliness", "filthy", "The carpet was filthy."},
      {"room_cleanliness", "filthy", "Filthy floors in the hallway."},
  };
  return templates;
}

std::vector<std::string_view> TemplatesFor(std::string_view attribute, std::string_view marker) {
  std::vector<std::string_view> out;
  for (const MarkerTemplate &t : MarkerTemplates()) {
    if (t.attribute == attribute && t.marker == marker) out.push_back(t.sentence);
  }
  return out;
}

const std::vector<std::string_view> &FillerSentences() {
  static const std::vector<std::string_view> sentences = {
      "We stayed for three nights.",    "The hotel is close to the airport shuttle.",
      "Parking costs extra.",           "Our flight landed late in the evening.",
      "We came for a conference.",      "The elevator is next to the lobby.",
      "Breakfast is served until ten.", "We booked through the website.",
  };
  return sentences;
}

const std::vector<std::string_view> &TipSentences() {
  static const std::vector<std::string_view> sentences = {
      "Make sure to book the parking in advance.",
      "Ask for a room away from the elevator.",
      "Bring earplugs if you are a light sleeper.",
      "Book ahead for weekends.",
      "Try the cafe on the corner.",
      "Don't forget to check the rooftop bar.",
  };
  return sentences;
}

const std::vector<std::string_view> &FactTemplates() {
  static const std::vector<std::string_view> sentences = {
      "10 min walk to {}.",
      "The hotel is a short walk from {}.",
      "We could see {} from the window.",
      "{} is five blocks away.",
  };
  return sentences;
}

const std::vector<std::string_view> &Landmarks() {
  static const std::vector<std::string_view> names = {
      "Presidio", "Embarcadero", "Fillmore", "Chinatown", "Castro",      "Haight",
      "Dogpatch", "Coit Tower",  "Alcatraz", "Japantown", "Ghirardelli", "Yerba Buena",
  };
  return names;
}

std::string_view FixtureSchemaJson() { return fixture_data::kSchemaJson; }
std::string_view FixtureAliasesJsonl() { return fixture_data::kAliasesJsonl; }

SchemaDef FixtureSchema() { return ParseSchema(nlohmann::json::parse(FixtureSchemaJson())); }

AliasTable FixtureAliases() {
  std::istringstream in{std::string(FixtureAliasesJsonl())};
  return ParseAliases(in, "fixture aliases");
}

// splitmix64
Rng::Rng(uint64_t seed) : state_(seed) {}

uint64_t Rng::Next() {
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t Rng::Below(uint64_t bound) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t draw;
  do {
    draw = Next();
  } while (draw >= limit);
  return draw % bound;
}

double Rng::Unit() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

EntityRecord MakeHotel(const std::string &id, const std::string &name, double price_pn,
                       double latitude, double longitude) {
  EntityRecord e;
  e.id = id;
  e.name = name;
  e.category = Category::kHotel;
  e.location = {latitude, longitude};
  e.objective_attrs["price_pn"] = price_pn;
  return e;
}

GeneratedCorpus Generate(const Options &options) {
  if (options.entities < 1 || options.reviews_per_entity < 0) {
    throw Error(ErrorCode::kBadInput, "synth: need at least one entity");
  }
  const SchemaDef schema = FixtureSchema();
  Rng rng(options.seed);
  GeneratedCorpus out;
  out.entities.reserve(options.entities);
  out.reviews.reserve(static_cast<size_t>(options.entities) * options.reviews_per_entity);
  std::vector<std::string_view> names(std::begin(kHotelNames), std::end(kHotelNames));

  for (int e = 0; e < options.entities; ++e) {
    char id[16];
    std::snprintf(id, sizeof id, "h%04d", e);
    std::string name = "Hotel " + std::string(names[e % names.size()]);
    if (e >= static_cast<int>(names.size())) name += " " + std::to_string(e / names.size() + 1);
    EntityRecord hotel = MakeHotel(id, name, static_cast<double>(90 + rng.Below(391)),
                                   37.70 + 0.11 * rng.Unit(), -122.51 + 0.12 * rng.Unit());
    hotel.objective_attrs["stars"] = static_cast<double>(2 + rng.Below(4));
    std::string_view landmark = Landmarks()[e % Landmarks().size()];

    // Latent spectrum position per attribute, in ordinal units.
    std::vector<double> center;
    for (const SubjectiveAttributeDef &attr : schema.attributes) {
      center.push_back(rng.Unit() * (attr.marker_count() - 1));
    }

    for (int r = 0; r < options.reviews_per_entity; ++r) {
      std::vector<std::string> sentences;
      double pole_sum = 0;
      int expressed = 1 + static_cast<int>(rng.Below(3));
      std::vector<size_t> order(schema.attributes.size());
      for (size_t i = 0; i < order.size(); ++i) order[i] = i;
      for (int k = 0; k < expressed; ++k) {
        size_t j = k + rng.Below(order.size() - k);
        std::swap(order[k], order[j]);
        const SubjectiveAttributeDef &attr = schema.attributes[order[k]];
        double noise = static_cast<double>(rng.Below(3)) - 1.0;
        int K = attr.marker_count();
        int ordinal = std::clamp(static_cast<int>(std::lround(center[order[k]] + noise)), 0, K - 1);
        const Marker &marker = attr.markers[ordinal];
        auto options_for = TemplatesFor(attr.name, marker.label);
        sentences.emplace_back(options_for[rng.Below(options_for.size())]);
        pole_sum += 1.0 - 2.0 * ordinal / (K - 1);
      }
      if (rng.Chance(0.5)) sentences.emplace_back(Pick(rng, FillerSentences()));
      if (rng.Chance(0.3)) sentences.emplace_back(Pick(rng, TipSentences()));
      if (rng.Chance(0.3)) sentences.push_back(Format(Pick(rng, FactTemplates()), landmark));
      for (size_t i = sentences.size(); i > 1; --i) {
        std::swap(sentences[i - 1], sentences[rng.Below(i)]);
      }

      ReviewRecord review;
      char rid[24];
      std::snprintf(rid, sizeof rid, "r%04d-%03d", e, r);
      review.review_id = rid;
      review.entity_id = hotel.id;
      for (size_t i = 0; i < sentences.size(); ++i) {
        if (i) review.text += ' ';
        review.text += sentences[i];
      }
      review.rating = std::clamp(static_cast<int>(std::lround(3 + 2 * pole_sum / expressed)), 1, 5);
      out.reviews.push_back(std::move(review));
    }
    out.entities.push_back(std::move(hotel));
  }
  return out;
}

std::vector<ReviewRecord> PlantReviews(const std::string &entity_id, std::string_view attribute,
                                       const std::vector<int> &counts, const std::string &prefix) {
  const SchemaDef schema = FixtureSchema();
  const SubjectiveAttributeDef *attr = schema.Find(attribute);
  if (attr == nullptr) {
    throw Error(ErrorCode::kBadInput, "synth: unknown attribute " + std::string(attribute));
  }
  if (counts.size() != attr->markers.size()) {
    throw Error(ErrorCode::kBadInput, "synth: expected one count per marker of " + attr->name);
  }
  std::vector<ReviewRecord> out;
  int n = 0;
  for (size_t k = 0; k < counts.size(); ++k) {
    auto sentences = TemplatesFor(attr->name, attr->markers[k].label);
    for (int i = 0; i < counts[k]; ++i) {
      ReviewRecord review;
      review.review_id = prefix + "-" + std::to_string(n++);
      review.entity_id = entity_id;
      review.text = std::string(sentences[i % sentences.size()]);
      out.push_back(std::move(review));
    }
  }
  return out;
}

}  // namespace synth
}  // namespace xps
