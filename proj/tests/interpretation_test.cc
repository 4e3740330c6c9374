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

#include <cmath>

#include "doctest.h"
#include "oracles.h"
#include "xps/error.h"
#include "xps/extraction.h"
#include "xps/synth.h"

namespace xps {
namespace {

using nlohmann::json;

// Cosine scores recomputed from scratch: bags of words per attribute,
// tf * ln(N / df), predicate words plus alias concepts as the query.
std::map<std::string, double> OracleScores(const std::string &predicate, const SchemaDef &schema,
                                           const std::vector<LinguisticDomain> &domains,
                                           const AliasTable &aliases) {
  const auto &stop = oracle::Stopwords();
  std::vector<std::map<std::string, double>> bags;
  for (const auto &attr : schema.attributes) {
    std::map<std::string, double> bag;
    auto add = [&](const std::string &text, double times) {
      for (const auto &w : oracle::ContentWordList(text, stop)) bag[w] += times;
    };
    add(attr.name, 1);
    for (const auto &m : attr.markers) {
      add(m.label, 1);
      for (const auto &seed : m.seed_phrases) add(seed, 1);
    }
    for (const auto &d : domains) {
      if (d.attribute != attr.name) continue;
      for (const auto &[phrase, count] : d.phrases) add(phrase, count);
    }
    bags.push_back(bag);
  }
  std::map<std::string, int> df;
  for (const auto &bag : bags) {
    for (const auto &[w, tf] : bag) df[w] += 1;
  }
  auto iaf = [&](const std::string &w) {
    return df.contains(w) ? std::log(static_cast<double>(bags.size()) / df[w]) : 0.0;
  };
  std::map<std::string, double> query;
  for (const auto &w : oracle::ContentWordList(predicate, stop)) {
    query[w] += iaf(w);
    if (aliases.contains(w)) {
      for (const auto &c : aliases.at(w)) query[c] += iaf(c);
    }
  }
  std::map<std::string, double> scores;
  for (size_t i = 0; i < bags.size(); ++i) {
    double dot = 0, qn = 0, dn = 0;
    for (const auto &[w, q] : query) {
      qn += q * q;
      if (bags[i].contains(w)) dot += q * bags[i][w] * iaf(w);
    }
    for (const auto &[w, tf] : bags[i]) dn += std::pow(tf * iaf(w), 2);
    scores[schema.attributes[i].name] = (qn == 0 || dn == 0) ? 0 : dot / std::sqrt(qn * dn);
  }
  return scores;
}

struct Fixture {
  SchemaDef schema = synth::FixtureSchema();
  AliasTable aliases = synth::FixtureAliases();
  std::vector<LinguisticDomain> domains;
  AttributeDocuments documents;

  explicit Fixture(bool with_corpus) {
    if (with_corpus) {
      auto g = synth::Generate({.entities = 10, .reviews_per_entity = 50, .seed = 1});
      domains = BuildDomains(ExtractCorpus(Corpus(g.entities, g.reviews), schema), schema);
    }
    documents = BuildAttributeDocuments(domains, schema);
  }
};

TEST_CASE("tf-iaf by hand on a two-attribute schema") {
  SchemaDef schema = ParseSchema(json::parse(R"({"attributes":[
    {"name":"room_quietness","markers":[{"label":"quiet","phrases":["very quiet"]},{"label":"loud"}]},
    {"name":"staff","markers":[{"label":"friendly"},{"label":"rude","phrases":["the rude"]}]}]})"));
  auto docs = BuildAttributeDocuments({}, schema);
  REQUIRE(docs.documents.size() == 2);
  const double ln2 = std::log(2.0);
  const auto &quiet = docs.documents[0];
  CHECK(quiet.attribute == "room_quietness");
  CHECK(quiet.weights.at("quiet") == doctest::Approx(2 * ln2));
  CHECK(quiet.weights.at("very") == doctest::Approx(ln2));
  CHECK(quiet.weights.at("room") == doctest::Approx(ln2));
  CHECK(quiet.weights.size() == 5);
  CHECK(quiet.norm == doctest::Approx(std::sqrt(8.0) * ln2));
  // Stopwords never enter a document.
  CHECK_FALSE(docs.documents[1].weights.contains("the"));
  CHECK(docs.documents[1].weights.at("rude") == doctest::Approx(2 * ln2));

  // Domain phrases add their corpus counts.
  std::vector<LinguisticDomain> domains = {{"room_quietness", {{"quiet at night", 3}}}};
  auto with = BuildAttributeDocuments(domains, schema);
  CHECK(with.documents[0].weights.at("quiet") == doctest::Approx(5 * ln2));
  CHECK(with.documents[0].weights.at("night") == doctest::Approx(3 * ln2));
  CHECK(with.Find("staff") == &with.documents[1]);
  CHECK(with.Find("pool") == nullptr);
}

TEST_CASE("a token in every document weighs nothing") {
  SchemaDef schema = ParseSchema(json::parse(R"({"attributes":[
    {"name":"alpha_room","markers":[{"label":"x"},{"label":"y"}]},
    {"name":"b_room","markers":[{"label":"z"},{"label":"w"}]}]})"));
  auto docs = BuildAttributeDocuments({}, schema);
  CHECK(docs.iaf.at("room") == 0.0);
  CHECK_FALSE(docs.documents[0].weights.contains("room"));
  CHECK(docs.documents[0].TopTerms(10) == std::vector<std::string>{"alpha", "x", "y"});
}

TEST_CASE("scores match the oracle on the fixture schema") {
  for (bool with_corpus : {false, true}) {
    Fixture f(with_corpus);
    for (const char *p : {"quiet", "romantic", "friendly staff", "clean sheets", "noisy street",
                          "helpful concierge", "near park", "zzzz", "luxurious bathroom",
                          "quietest room", "very very quiet"}) {
      auto expected = OracleScores(p, f.schema, f.domains, f.aliases);
      auto actual = ScoreAttributes(p, f.documents, f.aliases);
      REQUIRE(actual.size() == expected.size());
      for (const auto &[attr, score] : actual) {
        INFO(p << " / " << attr);
        CHECK(score == doctest::Approx(expected[attr]).epsilon(1e-12));
      }
      for (size_t i = 1; i < actual.size(); ++i) {
        bool ordered =
            actual[i - 1].second > actual[i].second ||
            (actual[i - 1].second == actual[i].second && actual[i - 1].first < actual[i].first);
        CHECK(ordered);
      }
    }
  }
}

TEST_CASE("quiet is a direct match on quietness") {
  for (bool with_corpus : {false, true}) {
    Fixture f(with_corpus);
    Interpretation i = InterpretPredicate("quiet", f.documents, f.schema, f.aliases, 0.35);
    CHECK(i.matched_directly);
    REQUIRE(i.components.size() == 1);
    CHECK(i.components[0] == InterpretationComponent{"room_quietness", "very_quiet", 0, 1.0});
    // The oracle agrees that quietness is the argmax and clears the threshold.
    auto scores = OracleScores("quiet", f.schema, f.domains, f.aliases);
    for (const auto &[attr, s] : scores) {
      if (attr != "room_quietness") CHECK(s < scores["room_quietness"]);
    }
    CHECK(scores["room_quietness"] >= 0.35);
  }
}

TEST_CASE("romantic reformulates to service and bathroom") {
  for (bool with_corpus : {false, true}) {
    Fixture f(with_corpus);
    for (const char *p : {"romantic", "romantic hotels"}) {
      Interpretation i = InterpretPredicate(p, f.documents, f.schema, f.aliases, 0.35);
      CHECK_FALSE(i.matched_directly);
      REQUIRE(i.components.size() == 2);
      std::set<std::string> attrs = {i.components[0].attribute, i.components[1].attribute};
      CHECK(attrs == std::set<std::string>{"service_quality", "bathroom_luxury"});
      CHECK(i.components[0].weight + i.components[1].weight == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(i.components[0].weight >= i.components[1].weight);
      for (const auto &c : i.components) {
        CHECK(c.target_ordinal == 0);
        CHECK((c.target_marker == "exceptional" || c.target_marker == "luxurious"));
      }
    }
  }
}

TEST_CASE("uninterpretable predicates") {
  Fixture f(true);
  try {
    InterpretPredicate("zzzz", f.documents, f.schema, f.aliases, 0.35);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kUninterpretablePredicate);
    CHECK(std::string(e.what()) == "uninterpretable predicate \"zzzz\"");
  }
  CHECK_THROWS_AS(InterpretPredicate("near park", f.documents, f.schema, f.aliases, 0.35), Error);
  CHECK_THROWS_AS(InterpretPredicate("", f.documents, f.schema, f.aliases, 0.35), Error);
}

TEST_CASE("naming an attribute is always direct") {
  Fixture f(true);
  for (const auto &attr : f.schema.attributes) {
    std::string spaced = attr.name;
    std::replace(spaced.begin(), spaced.end(), '_', ' ');
    for (const std::string &p : {attr.name, spaced}) {
      Interpretation i = InterpretPredicate(p, f.documents, f.schema, f.aliases, 0.99);
      CHECK(i.matched_directly);
      REQUIRE(i.components.size() == 1);
      CHECK(i.components[0].attribute == attr.name);
    }
  }
}

TEST_CASE("interpretation invariants over many predicates") {
  Fixture f(true);
  synth::Rng rng(8);
  std::vector<std::string> vocab = {"quiet", "staff", "romantic", "clean", "tub",  "service",
                                    "night", "rude",  "nice",     "view",  "park", "the"};
  int interpreted = 0;
  for (int n = 0; n < 500; ++n) {
    std::string p;
    for (int k = 0, len = 1 + static_cast<int>(rng.Below(3)); k < len; ++k) {
      p += (k ? " " : "") + vocab[rng.Below(vocab.size())];
    }
    Interpretation a;
    try {
      a = InterpretPredicate(p, f.documents, f.schema, f.aliases, 0.35);
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::kUninterpretablePredicate);
      continue;
    }
    ++interpreted;
    INFO(p);
    REQUIRE_FALSE(a.components.empty());
    CHECK(a.components.size() <= 2);
    double sum = 0;
    for (const auto &c : a.components) {
      CHECK(c.weight > 0);
      CHECK(c.weight <= 1);
      sum += c.weight;
      const auto *attr = f.schema.Find(c.attribute);
      REQUIRE(attr != nullptr);
      CHECK(attr->markers[c.target_ordinal].label == c.target_marker);
    }
    CHECK(std::abs(sum - 1.0) <= 1e-9);
    if (a.components.size() == 2) CHECK(a.components[0].attribute != a.components[1].attribute);
    CHECK(InterpretPredicate(p, f.documents, f.schema, f.aliases, 0.35) == a);
  }
  CHECK(interpreted > 100);
}

TEST_CASE("target markers") {
  SchemaDef schema = synth::FixtureSchema();
  const auto &quiet = *schema.Find("room_quietness");
  CHECK(TargetMarker({"quiet"}, quiet).label == "very_quiet");
  CHECK(TargetMarker({"noisy"}, quiet).label == "noisy");
  CHECK(TargetMarker({"very", "noisy"}, quiet).label == "very_noisy");
  CHECK(TargetMarker({"zzz"}, quiet).label == "very_quiet");
  const auto &staff = *schema.Find("staff_friendliness");
  CHECK(TargetMarker({"friendly", "staff"}, staff).label == "friendly");
  CHECK(TargetMarker({"rude"}, staff).label == "rude");
}

TEST_CASE("alias expansion") {
  AliasTable aliases = synth::FixtureAliases();
  CHECK(ExpandTokens("Near the Presidio", aliases) ==
        std::vector<std::string>{"near", "presidio", "park"});
  CHECK(ExpandTokens("the", aliases).size() <= 1);
}

}  // namespace
}  // namespace xps
