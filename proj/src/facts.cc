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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "xps/extraction.h"
#include "xps/model.h"

namespace xps {

namespace {

std::set<std::string> ContentSet(const std::vector<std::string> &tokens, const Lexicon &lexicon) {
  std::set<std::string> out;
  for (const auto &t : tokens) {
    if (!lexicon.IsStopword(t)) out.insert(t);
  }
  return out;
}

void MinMaxNormalize(std::vector<double> &scores) {
  if (scores.empty()) return;
  auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
  double min = *lo, range = *hi - *lo;
  for (double &s : scores) s = range < 1e-12 ? 1.0 : (s - min) / range;
}

bool RefLess(const Candidate &a, const Candidate &b) {
  return std::tie(a.entity_id, a.review_id, a.index) < std::tie(b.entity_id, b.review_id, b.index);
}

}  // namespace

std::string_view CandidateKindName(CandidateKind kind) {
  return kind == CandidateKind::kTip ? "tip" : "fact";
}

bool IsTip(const Sentence &sentence, const Lexicon &lexicon) {
  const auto &tokens = sentence.tokens;
  if (tokens.empty()) return false;
  if (lexicon.IsImperativeVerb(tokens.front())) return true;
  for (const auto &pattern : lexicon.tip_patterns()) {
    auto it = std::search(tokens.begin(), tokens.end(), pattern.begin(), pattern.end());
    if (it != tokens.end()) return true;
  }
  return false;
}

void TokenCounts::Add(const std::vector<std::string> &tokens) {
  for (const auto &t : tokens) ++counts[t];
  total += static_cast<long>(tokens.size());
}

long TokenCounts::Count(const std::string &token) const {
  auto it = counts.find(token);
  return it == counts.end() ? 0 : it->second;
}

InformativeTokenSet InformativeTokens(const std::string &entity_id, const TokenCounts &entity,
                                      const TokenCounts &background, double rho, int c_min,
                                      const Lexicon &lexicon) {
  InformativeTokenSet out;
  out.entity_id = entity_id;
  if (entity.total == 0) return out;
  for (const auto &[token, count] : entity.counts) {
    if (count < c_min || lexicon.IsStopword(token)) continue;
    InformativeToken info;
    info.count = count;
    info.entity_frequency = static_cast<double>(count) / entity.total;
    info.background_frequency =
        static_cast<double>(background.Count(token) + 1) / (background.total + 1);
    info.ratio = info.entity_frequency / info.background_frequency;
    if (info.ratio >= rho) out.tokens.emplace(token, info);
  }
  return out;
}

bool IsFact(const Sentence &sentence, const InformativeTokenSet &informative, double sentiment) {
  if (std::abs(sentiment) >= kExtremeSentiment) return true;
  return std::any_of(sentence.tokens.begin(), sentence.tokens.end(),
                     [&](const std::string &t) { return informative.Contains(t); });
}

double SentenceSimilarity(const std::set<std::string> &a, const std::set<std::string> &b) {
  if (a.empty() || b.empty()) return 0.0;
  size_t shared = 0;
  for (const auto &t : a) shared += b.count(t);
  if (shared == 0) return 0.0;
  return shared / (std::log(1.0 + a.size()) + std::log(1.0 + b.size()));
}

std::vector<double> TextRankScores(std::span<const std::set<std::string>> sentences) {
  const size_t n = sentences.size();
  if (n == 0) return {};
  // Sparse adjacency: neighbours[i] = (j, w_ij).
  std::vector<std::vector<std::pair<size_t, double>>> neighbours(n);
  std::vector<double> out_weight(n, 0.0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      double w = SentenceSimilarity(sentences[i], sentences[j]);
      if (w <= 0) continue;
      neighbours[i].emplace_back(j, w);
      neighbours[j].emplace_back(i, w);
      out_weight[i] += w;
      out_weight[j] += w;
    }
  }
  std::vector<double> scores(n, 1.0 / n), next(n);
  for (int iteration = 0; iteration < kTextRankMaxIterations; ++iteration) {
    double dangling = 0;
    for (size_t j = 0; j < n; ++j) {
      if (out_weight[j] == 0) dangling += scores[j];
    }
    for (size_t i = 0; i < n; ++i) {
      double incoming = 0;
      for (const auto &[j, w] : neighbours[i]) incoming += w / out_weight[j] * scores[j];
      next[i] = (1.0 - kTextRankDamping) / n + kTextRankDamping * (incoming + dangling / n);
    }
    double max_delta = 0;
    for (size_t i = 0; i < n; ++i) max_delta = std::max(max_delta, std::abs(next[i] - scores[i]));
    scores.swap(next);
    if (max_delta < kTextRankTolerance) break;
  }
  return scores;
}

std::vector<Candidate> TextRankDedup(std::vector<Candidate> candidates, double theta,
                                     const Lexicon &lexicon) {
  if (candidates.empty()) return candidates;
  std::sort(candidates.begin(), candidates.end(), RefLess);

  auto rank = [&](const std::vector<Candidate> &cs, std::vector<std::set<std::string>> &sets) {
    sets.clear();
    for (const auto &c : cs) sets.push_back(ContentSet(c.tokens, lexicon));
    auto scores = TextRankScores(sets);
    MinMaxNormalize(scores);
    return scores;
  };

  std::vector<std::set<std::string>> sets;
  std::vector<double> significance = rank(candidates, sets);
  std::vector<size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return significance[a] > significance[b]; });

  std::vector<size_t> kept;
  for (size_t i : order) {
    bool duplicate = std::any_of(kept.begin(), kept.end(), [&](size_t k) {
      return SentenceSimilarity(sets[i], sets[k]) > theta;
    });
    if (!duplicate) kept.push_back(i);
  }
  std::sort(kept.begin(), kept.end());
  std::vector<Candidate> survivors;
  for (size_t i : kept) survivors.push_back(std::move(candidates[i]));

  significance = rank(survivors, sets);
  for (size_t i = 0; i < survivors.size(); ++i) survivors[i].significance = significance[i];
  std::stable_sort(survivors.begin(), survivors.end(), [](const Candidate &a, const Candidate &b) {
    return a.significance > b.significance;
  });
  return survivors;
}

PredicateExpansion ExpandPredicate(std::string_view predicate, const Interpretation *interpretation,
                                   const AttributeDocuments &documents, const AliasTable &aliases,
                                   const Lexicon &lexicon) {
  PredicateExpansion out;
  out.predicate = std::string(predicate);
  out.literal = ContentSet(Tokenize(predicate), lexicon);
  auto expanded = ExpandTokens(predicate, aliases, lexicon);
  out.expanded.insert(expanded.begin(), expanded.end());
  out.expanded.insert(out.literal.begin(), out.literal.end());
  if (interpretation != nullptr) {
    for (const auto &c : interpretation->components) {
      if (const AttributeDocument *doc = documents.Find(c.attribute)) {
        for (auto &term : doc->TopTerms(kExpansionTerms)) out.expanded.insert(std::move(term));
      }
    }
  }
  return out;
}

double Relevance(const Candidate &candidate, std::span<const PredicateExpansion> predicates,
                 const AliasTable &aliases, const Lexicon &lexicon) {
  if (predicates.empty()) return 0.0;
  std::set<std::string> sentence = ContentSet(candidate.tokens, lexicon);
  std::set<std::string> concepts;
  for (const auto &t : sentence) {
    if (auto it = aliases.find(t); it != aliases.end()) {
      concepts.insert(it->second.begin(), it->second.end());
    }
  }
  sentence.merge(concepts);
  double best = 0;
  for (const auto &p : predicates) {
    best = std::max({best, SetCosine(p.literal, sentence), SetCosine(p.expanded, sentence)});
  }
  return std::min(best, 1.0);
}

std::vector<Candidate> RankCandidates(std::vector<Candidate> candidates,
                                      std::span<const PredicateExpansion> predicates,
                                      const AliasTable &aliases, double alpha,
                                      const Lexicon &lexicon) {
  for (auto &c : candidates) {
    c.relevance = Relevance(c, predicates, aliases, lexicon);
    c.score = alpha * c.significance + (1.0 - alpha) * c.relevance;
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate &a, const Candidate &b) {
    if (a.score != b.score) return a.score > b.score;
    return RefLess(a, b);
  });
  return candidates;
}

std::map<std::string, EntityCandidates> MineCandidates(const Corpus &corpus, const Config &config,
                                                       const Lexicon &lexicon) {
  std::map<std::string, std::vector<Sentence>> sentences;
  std::map<std::string, TokenCounts> entity_counts;
  std::map<Category, TokenCounts> category_counts;
  for (const auto &entity : corpus.entities()) {
    auto &bucket = sentences[entity.id];
    auto &counts = entity_counts[entity.id];
    for (size_t r : corpus.ReviewsOf(entity.id)) {
      for (auto &s : SplitSentences(corpus.reviews()[r], lexicon)) {
        counts.Add(s.tokens);
        category_counts[entity.category].Add(s.tokens);
        bucket.push_back(std::move(s));
      }
    }
  }

  std::map<std::string, EntityCandidates> out;
  for (const auto &entity : corpus.entities()) {
    const TokenCounts &own = entity_counts[entity.id];
    TokenCounts background;
    const TokenCounts &category = category_counts[entity.category];
    background.total = category.total - own.total;
    for (const auto &[token, count] : category.counts) {
      long rest = count - own.Count(token);
      if (rest > 0) background.counts.emplace(token, rest);
    }
    InformativeTokenSet informative =
        InformativeTokens(entity.id, own, background, config.rho, config.c_min, lexicon);

    std::vector<Candidate> tips, facts;
    for (const auto &s : sentences[entity.id]) {
      Candidate c{.entity_id = s.entity_id,
                  .review_id = s.review_id,
                  .index = s.index,
                  .text = s.text,
                  .tokens = s.tokens};
      if (IsTip(s, lexicon)) {
        c.kind = CandidateKind::kTip;
        tips.push_back(std::move(c));
      } else if (IsFact(s, informative, SentimentScore(s, lexicon))) {
        c.kind = CandidateKind::kFact;
        facts.push_back(std::move(c));
      }
    }
    auto &entry = out[entity.id];
    entry.tips = TextRankDedup(std::move(tips), config.theta, lexicon);
    entry.facts = TextRankDedup(std::move(facts), config.theta, lexicon);
  }
  return out;
}

}  // namespace xps
