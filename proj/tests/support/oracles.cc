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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "xps/text.h"

namespace xps::oracle {

std::set<std::string> LoadWordList(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    words.insert(line.substr(0, line.find('\t')));
  }
  return words;
}

const std::set<std::string> &Stopwords() {
  static const auto *words =
      new std::set<std::string>(LoadWordList(std::string(XPS_LEXICON_DIR) + "/stopwords.tsv"));
  return *words;
}

std::vector<std::string> ContentWordList(const std::string &text,
                                         const std::set<std::string> &stopwords) {
  std::vector<std::string> words;
  std::string current;
  auto flush = [&] {
    while (!current.empty() && (current.back() == '\'' || current.back() == '-'))
      current.pop_back();
    size_t lead = current.find_first_not_of("'-");
    if (lead != std::string::npos && !stopwords.contains(current.substr(lead))) {
      words.push_back(current.substr(lead));
    }
    current.clear();
  };
  for (char c : text) {
    char l = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if ((l >= 'a' && l <= 'z') || (l >= '0' && l <= '9') || l == '\'' || l == '-') {
      current.push_back(l);
    } else {
      flush();
    }
  }
  flush();
  return words;
}

std::set<std::string> ContentWords(const std::string &text,
                                   const std::set<std::string> &stopwords) {
  auto list = ContentWordList(text, stopwords);
  return {list.begin(), list.end()};
}

double WordSetCosine(const std::set<std::string> &a, const std::set<std::string> &b) {
  if (a.empty() || b.empty()) return 0;
  int shared = 0;
  for (const auto &w : a) shared += b.count(w);
  return shared / std::sqrt(static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

double MarkerSimilarity(const std::set<std::string> &phrase_words, double polarity,
                        const std::set<std::string> &marker_words, int ordinal, int marker_count) {
  double pole = 1.0 - 2.0 * ordinal / (marker_count - 1);
  return 0.5 * WordSetCosine(phrase_words, marker_words) +
         0.5 * (1.0 - std::fabs(polarity - pole) / 2.0);
}

std::vector<double> PowerIteration(const std::vector<std::vector<double>> &weights, double damping,
                                   double tol, int max_iter) {
  const size_t n = weights.size();
  // Column-stochastic transition matrix.
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (size_t j = 0; j < n; ++j) {
    double out = 0;
    for (size_t i = 0; i < n; ++i) out += weights[j][i];
    for (size_t i = 0; i < n; ++i) {
      m[i][j] = out > 0 ? weights[j][i] / out : 1.0 / n;
    }
  }
  std::vector<double> s(n, 1.0 / n);
  for (int iter = 0; iter < max_iter; ++iter) {
    std::vector<double> next(n, (1.0 - damping) / n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) next[i] += damping * m[i][j] * s[j];
    }
    double moved = 0;
    for (size_t i = 0; i < n; ++i) moved = std::max(moved, std::fabs(next[i] - s[i]));
    s = next;
    if (moved < tol) break;
  }
  return s;
}

InformativeVerdict Informative(const std::string &token, const std::string &entity_id,
                               const std::vector<EntityRecord> &entities,
                               const std::vector<ReviewRecord> &reviews, double rho, int c_min) {
  std::map<std::string, Category> category;
  for (const auto &e : entities) category[e.id] = e.category;
  const Category own = category.at(entity_id);
  long entity_count = 0, entity_total = 0, bg_count = 0, bg_total = 0;
  for (const auto &r : reviews) {
    bool mine = r.entity_id == entity_id;
    if (!mine && category.at(r.entity_id) != own) continue;
    for (const auto &t : Tokenize(r.text)) {
      (mine ? entity_total : bg_total) += 1;
      if (t == token) (mine ? entity_count : bg_count) += 1;
    }
  }
  InformativeVerdict v;
  v.count = entity_count;
  if (entity_total == 0) return v;
  double entity_freq = static_cast<double>(entity_count) / entity_total;
  double bg_freq = static_cast<double>(bg_count + 1) / (bg_total + 1);
  v.ratio = entity_freq / bg_freq;
  v.qualifies = entity_count >= c_min && v.ratio >= rho;
  return v;
}

std::vector<OracleResult> BruteForceSearch(const Query &query,
                                           const std::vector<Interpretation> &interpretations,
                                           const std::vector<EntityRecord> &entities,
                                           const std::vector<AssignedExtraction> &assigned,
                                           const SchemaDef &schema, const Config &config) {
  std::vector<OracleResult> results;
  for (const EntityRecord &e : entities) {
    if (e.category != query.relation) continue;
    bool pass = true;
    for (const Comparison &c : query.objective) {
      auto it = e.objective_attrs.find(c.attribute);
      if (it == e.objective_attrs.end() || !std::holds_alternative<double>(it->second)) {
        pass = false;
        break;
      }
      double v = std::get<double>(it->second);
      switch (c.op) {
        case CompareOp::kLess: pass = v < c.value; break;
        case CompareOp::kLessEqual: pass = v <= c.value; break;
        case CompareOp::kGreater: pass = v > c.value; break;
        case CompareOp::kGreaterEqual: pass = v >= c.value; break;
        case CompareOp::kEqual: pass = v == c.value; break;
      }
      if (!pass) break;
    }
    if (!pass) continue;

    OracleResult r{e.id, 1.0, 0};
    for (const Interpretation &interp : interpretations) {
      double membership = 0;
      int evidence = 0;
      for (const InterpretationComponent &comp : interp.components) {
        int k = schema.Find(comp.attribute)->marker_count();
        std::vector<int> counts(k, 0);
        int total = 0;
        for (const AssignedExtraction &a : assigned) {
          if (a.record.entity_id == e.id && a.record.attribute == comp.attribute) {
            counts[a.marker] += 1;
            total += 1;
          }
        }
        double value = 0.5;
        if (total > 0) {
          double sum = 0;
          for (int m = 0; m < k; ++m) {
            double degree = std::max(0.0, 1.0 - std::abs(m - comp.target_ordinal) / config.delta);
            sum += degree * counts[m];
          }
          value = sum / total;
        }
        membership += comp.weight * value;
        evidence += total;
      }
      r.score = config.tnorm == TNorm::kMin ? std::min(r.score, membership) : r.score * membership;
      r.evidence += evidence;
    }
    results.push_back(r);
  }
  std::sort(results.begin(), results.end(), [](const OracleResult &a, const OracleResult &b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.evidence != b.evidence) return a.evidence > b.evidence;
    return a.entity_id < b.entity_id;
  });
  if (query.limit && static_cast<int>(results.size()) > *query.limit) results.resize(*query.limit);
  return results;
}

std::string RandomPredicate(synth::Rng &rng) {
  static const std::string alphabet =
      "abcdefghijklmnopqrstuvwxyz ABCXYZ0123456789\"\\'-_.,!?<>=*()";
  std::string out;
  size_t len = 1 + rng.Below(16);
  while (out.size() < len) out += alphabet[rng.Below(alphabet.size())];
  // Parsed predicates are trimmed and non-empty.
  size_t b = out.find_first_not_of(' ');
  if (b == std::string::npos) return "x";
  size_t e = out.find_last_not_of(' ');
  return out.substr(b, e - b + 1);
}

Query RandomQuery(synth::Rng &rng, const std::vector<std::string> &attributes,
                  const std::vector<std::string> &predicates, bool allow_limit) {
  static const Category kCategories[] = {Category::kHotel, Category::kAttraction,
                                         Category::kRestaurant};
  static const CompareOp kOps[] = {CompareOp::kLess, CompareOp::kLessEqual, CompareOp::kGreater,
                                   CompareOp::kGreaterEqual, CompareOp::kEqual};
  Query q;
  q.relation = kCategories[rng.Below(3)];
  int n_obj = static_cast<int>(rng.Below(3));
  for (int i = 0; i < n_obj; ++i) {
    Comparison c;
    c.attribute = attributes[rng.Below(attributes.size())];
    c.op = kOps[rng.Below(5)];
    // Mix of integers, halves and arbitrary doubles.
    switch (rng.Below(3)) {
      case 0: c.value = static_cast<double>(rng.Below(600)); break;
      case 1: c.value = static_cast<double>(rng.Below(2000)) / 2.0 - 100; break;
      default: c.value = (rng.Unit() - 0.5) * 1e4; break;
    }
    q.objective.push_back(c);
  }
  int n_subj = static_cast<int>(rng.Below(4));
  for (int i = 0; i < n_subj; ++i) {
    q.subjective.push_back(rng.Chance(0.7) ? predicates[rng.Below(predicates.size())]
                                           : RandomPredicate(rng));
  }
  if (allow_limit && rng.Chance(0.3)) q.limit = 1 + static_cast<int>(rng.Below(50));
  return q;
}

Query RandomSearchQuery(synth::Rng &rng, const std::vector<std::string> &predicates) {
  static const CompareOp kOps[] = {CompareOp::kLess, CompareOp::kLessEqual, CompareOp::kGreater,
                                   CompareOp::kGreaterEqual};
  Query q;
  for (int i = 0, n = static_cast<int>(rng.Below(3)); i < n; ++i) {
    if (rng.Chance(0.7)) {
      q.objective.push_back(
          {"price_pn", kOps[rng.Below(4)], static_cast<double>(80 + rng.Below(420))});
    } else {
      q.objective.push_back({"stars", kOps[rng.Below(4)], static_cast<double>(1 + rng.Below(5))});
    }
  }
  for (int i = 0, n = 1 + static_cast<int>(rng.Below(3)); i < n; ++i) {
    q.subjective.push_back(predicates[rng.Below(predicates.size())]);
  }
  if (rng.Chance(0.3)) q.limit = 1 + static_cast<int>(rng.Below(10));
  return q;
}

}  // namespace xps::oracle
