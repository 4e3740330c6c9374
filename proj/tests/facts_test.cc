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

#include "xps/facts.h"

#include <cmath>
#include <numeric>

#include "doctest.h"
#include "oracles.h"
#include "xps/extraction.h"
#include "xps/synth.h"

namespace xps {
namespace {

Candidate MakeCandidate(const std::string &text, const std::string &review_id, int index = 0,
                        const std::string &entity = "h1") {
  Candidate c;
  c.entity_id = entity;
  c.review_id = review_id;
  c.index = index;
  c.text = text;
  c.tokens = Tokenize(text);
  return c;
}

// Hotel "p" has 20 reviews, 5 of which mention the Presidio. Two other
// hotels never do.
struct PresidioCorpus {
  std::vector<EntityRecord> entities = {synth::MakeHotel("p", "P", 200),
                                        synth::MakeHotel("q", "Q", 200),
                                        synth::MakeHotel("r", "R", 200)};
  std::vector<ReviewRecord> reviews;

  PresidioCorpus() {
    const auto &filler = synth::FillerSentences();
    int n = 0;
    for (const auto &e : entities) {
      for (int i = 0; i < 20; ++i, ++n) {
        ReviewRecord r;
        r.review_id = e.id + "-" + std::to_string(i);
        r.entity_id = e.id;
        r.text = std::string(filler[n % filler.size()]) + " " +
                 std::string(filler[(n + 3) % filler.size()]);
        if (e.id == "p" && i % 4 == 0) r.text += " 10 min walk to Presidio.";
        reviews.push_back(r);
      }
    }
  }
};

TEST_CASE("tip filter") {
  CHECK(IsTip(MakeSentence("Make sure to book the parking in advance")));
  CHECK(IsTip(MakeSentence("Ask for a room away from the elevator")));
  CHECK(IsTip(MakeSentence("We were told to ask for a late checkout, do it.")));
  CHECK(IsTip(MakeSentence("Don't forget your charger")));
  CHECK_FALSE(IsTip(MakeSentence("The room was nice")));
  CHECK_FALSE(IsTip(MakeSentence("10 min walk to Presidio")));
  CHECK_FALSE(IsTip(MakeSentence("")));
  for (auto s : synth::TipSentences()) CHECK(IsTip(MakeSentence(s)));
  for (auto s : synth::FillerSentences()) CHECK_FALSE(IsTip(MakeSentence(s)));
}

TEST_CASE("informative tokens agree with raw counting") {
  PresidioCorpus fixture;
  Corpus corpus(fixture.entities, fixture.reviews);
  Config config;
  for (const auto &e : fixture.entities) {
    TokenCounts own, background;
    for (const auto &r : fixture.reviews) {
      for (const auto &s : SplitSentences(r))
        (r.entity_id == e.id ? own : background).Add(s.tokens);
    }
    auto set = InformativeTokens(e.id, own, background, config.rho, config.c_min);
    for (const auto &[token, info] : set.tokens) {
      CHECK(info.ratio >= config.rho);
      CHECK(info.count >= config.c_min);
    }
    for (const auto &token : {"presidio", "min", "walk", "room", "the", "hotel", "stayed"}) {
      auto verdict = oracle::Informative(token, e.id, fixture.entities, fixture.reviews, config.rho,
                                         config.c_min);
      CAPTURE(token);
      CHECK(set.Contains(token) == verdict.qualifies);
      if (set.Contains(token)) CHECK(set.tokens.at(token).ratio == doctest::Approx(verdict.ratio));
    }
  }

  TokenCounts own, background;
  for (const auto &r : fixture.reviews) {
    for (const auto &s : SplitSentences(r)) (r.entity_id == "p" ? own : background).Add(s.tokens);
  }
  auto set = InformativeTokens("p", own, background, config.rho, config.c_min);
  CHECK(set.Contains("presidio"));
  CHECK(set.tokens.at("presidio").count == 5);
  CHECK_FALSE(set.Contains("the"));
  // A token seen once fails c_min however rare it is.
  TokenCounts once;
  once.Add({"zeppelin", "ride"});
  CHECK(InformativeTokens("p", once, background, config.rho, config.c_min).tokens.empty());
}

TEST_CASE("fact filter") {
  InformativeTokenSet informative;
  informative.tokens["presidio"] = {};
  Sentence walk = MakeSentence("10 min walk to Presidio");
  CHECK(IsFact(walk, informative, SentimentScore(walk)));
  Sentence vintage = MakeSentence("beautiful vintage building and furnishings");
  CHECK(SentimentScore(vintage) >= kExtremeSentiment);
  CHECK(IsFact(vintage, {}, SentimentScore(vintage)));
  Sentence stayed = MakeSentence("We stayed two nights");
  CHECK_FALSE(IsFact(stayed, informative, SentimentScore(stayed)));
  CHECK(IsFact(stayed, informative, -0.5));
}

TEST_CASE("mined candidates on the presidio corpus") {
  PresidioCorpus fixture;
  auto mined = MineCandidates(Corpus(fixture.entities, fixture.reviews), Config{});
  const auto &p = mined.at("p");
  // The five identical sentences collapse to one.
  int walks = 0;
  for (const auto &c : p.facts) walks += c.text == "10 min walk to Presidio.";
  CHECK(walks == 1);
  for (const auto &[id, entry] : mined) {
    for (const auto &c : entry.tips) {
      CHECK(c.kind == CandidateKind::kTip);
      CHECK(IsTip(MakeSentence(c.text)));
    }
    for (const auto &c : entry.facts) {
      CHECK(c.kind == CandidateKind::kFact);
      CHECK_FALSE(IsTip(MakeSentence(c.text)));
      CHECK(c.significance >= 0.0);
      CHECK(c.significance <= 1.0);
    }
  }
}

std::vector<std::vector<double>> OracleWeights(const std::vector<std::set<std::string>> &sets) {
  size_t n = sets.size();
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i == j || sets[i].empty() || sets[j].empty()) continue;
      double shared = 0;
      for (const auto &t : sets[i]) shared += sets[j].count(t);
      w[i][j] = shared / (std::log(1.0 + sets[i].size()) + std::log(1.0 + sets[j].size()));
    }
  }
  return w;
}

TEST_CASE("textrank matches dense power iteration") {
  std::vector<std::set<std::string>> toy = {
      {"quiet", "room", "view"}, {"room", "view", "bay"}, {"bay", "walk"}};
  auto scores = TextRankScores(toy);
  auto expected = oracle::PowerIteration(OracleWeights(toy));
  REQUIRE(scores.size() == 3);
  for (size_t i = 0; i < 3; ++i) CHECK(std::abs(scores[i] - expected[i]) <= 1e-6);
  CHECK(std::accumulate(scores.begin(), scores.end(), 0.0) == doctest::Approx(1.0));
  CHECK(scores[1] > scores[0]);

  synth::Rng rng(8);
  static const char *kWords[] = {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"};
  for (int round = 0; round < 200; ++round) {
    std::vector<std::set<std::string>> sets(1 + rng.Below(12));
    for (auto &s : sets) {
      for (int k = 0, m = static_cast<int>(rng.Below(5)); k < m; ++k)
        s.insert(kWords[rng.Below(10)]);
    }
    auto got = TextRankScores(sets);
    auto want = oracle::PowerIteration(OracleWeights(sets));
    for (size_t i = 0; i < sets.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= 1e-6);
    CHECK(std::accumulate(got.begin(), got.end(), 0.0) == doctest::Approx(1.0));
  }
  CHECK(TextRankScores({}).empty());
}

TEST_CASE("dedup") {
  auto single = TextRankDedup({MakeCandidate("Lovely rooftop bar.", "r1")}, 0.5);
  REQUIRE(single.size() == 1);
  CHECK(single[0].significance == 1.0);

  std::vector<Candidate> pair = {MakeCandidate("Great rooftop bar with views.", "r1"),
                                 MakeCandidate("Great rooftop bar with views!", "r2"),
                                 MakeCandidate("Cable car stops outside.", "r3")};
  CHECK(SentenceSimilarity({"great", "rooftop", "bar", "views"},
                           {"great", "rooftop", "bar", "views"}) > 0.5);
  auto once = TextRankDedup(pair, 0.5);
  CHECK(once.size() == 2);
  int bars = 0;
  for (const auto &c : once) bars += c.text.starts_with("Great rooftop");
  CHECK(bars == 1);
  CHECK(TextRankDedup(once, 0.5) == once);

  auto generated = synth::Generate({.entities = 4, .reviews_per_entity = 15, .seed = 4});
  auto mined = MineCandidates(Corpus(generated.entities, generated.reviews), Config{});
  for (const auto &[id, entry] : mined) {
    for (const auto *list : {&entry.tips, &entry.facts}) {
      CHECK(TextRankDedup(*list, 0.5) == *list);
      for (size_t i = 0; i < list->size(); ++i) {
        for (size_t j = i + 1; j < list->size(); ++j) {
          std::set<std::string> a, b;
          for (const auto &t : (*list)[i].tokens) {
            if (!Lexicon::Default().IsStopword(t)) a.insert(t);
          }
          for (const auto &t : (*list)[j].tokens) {
            if (!Lexicon::Default().IsStopword(t)) b.insert(t);
          }
          CHECK(SentenceSimilarity(a, b) <= 0.5);
        }
      }
    }
  }
}

TEST_CASE("near park ranks the presidio sentence first") {
  AliasTable aliases = synth::FixtureAliases();
  Candidate walk = MakeCandidate("10 min walk to Presidio.", "r2");
  Candidate other = MakeCandidate("Breakfast is served until ten.", "r1");
  walk.significance = other.significance = 1.0;
  std::vector<PredicateExpansion> near_park = {
      ExpandPredicate("near park", nullptr, AttributeDocuments{}, aliases)};
  CHECK(Relevance(walk, near_park, aliases) > 0.0);
  CHECK(Relevance(other, near_park, aliases) == 0.0);
  auto ranked = RankCandidates({other, walk}, near_park, aliases, 0.5);
  CHECK(ranked[0].review_id == "r2");
  CHECK(ranked[0].score > ranked[1].score);

  // Without the alias there is no overlap and the reference order wins.
  auto plain = RankCandidates({walk, other}, near_park, {}, 0.5);
  CHECK(plain[0].review_id == "r1");
  CHECK(plain[0].score == plain[1].score);

  // Empty query: significance alone.
  other.significance = 0.4;
  auto bare = RankCandidates({other, walk}, {}, aliases, 0.5);
  CHECK(bare[0].review_id == "r2");
  CHECK(bare[0].relevance == 0.0);

  Candidate exact = MakeCandidate("park", "r3");
  CHECK(Relevance(exact, near_park, {}) < 1.0);
  std::vector<PredicateExpansion> park = {
      ExpandPredicate("park", nullptr, AttributeDocuments{}, {})};
  CHECK(Relevance(exact, park, {}) == doctest::Approx(1.0));
}

}  // namespace
}  // namespace xps
