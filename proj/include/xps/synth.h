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

#ifndef XPS_SYNTH_H_
#define XPS_SYNTH_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "xps/corpus.h"

// Synthetic hotel corpora written against the bundled fixture schema. Used by
// tests, benchmarks and the `xps synth` command.
namespace xps::synth {

// A sentence that extracts to exactly one phrase of `attribute`, assigned to
// `marker` under the fixture schema.
struct MarkerTemplate {
  std::string_view attribute;
  std::string_view marker;
  std::string_view sentence;
};

const std::vector<MarkerTemplate> &MarkerTemplates();
std::vector<std::string_view> TemplatesFor(std::string_view attribute, std::string_view marker);

// Sentences with no aspect term.
const std::vector<std::string_view> &FillerSentences();
const std::vector<std::string_view> &TipSentences();
// Fact templates; "{}" is replaced by a landmark name.
const std::vector<std::string_view> &FactTemplates();
const std::vector<std::string_view> &Landmarks();

// Fixture files, embedded at build time.
std::string_view FixtureSchemaJson();
std::string_view FixtureAliasesJsonl();
SchemaDef FixtureSchema();
AliasTable FixtureAliases();

// Stable integer draws, independent of the standard library's distributions.
class Rng {
 public:
  explicit Rng(uint64_t seed);
  uint64_t Next();
  // Uniform in [0, bound); bound > 0.
  uint64_t Below(uint64_t bound);
  double Unit();  // [0, 1)
  bool Chance(double p) { return Unit() < p; }

 private:
  uint64_t state_;
};

struct Options {
  int entities = 10;
  int reviews_per_entity = 5;
  uint64_t seed = 1;
};

struct GeneratedCorpus {
  std::vector<EntityRecord> entities;
  std::vector<ReviewRecord> reviews;
};

// Hotels "h0000".. around San Francisco. Each hotel has a latent position on
// every attribute's spectrum; each review expresses one to three attributes,
// drawn around those positions, plus optional filler, tip and landmark fact
// sentences. Entity i's landmark is Landmarks()[i % size].
GeneratedCorpus Generate(const Options &options);

// counts[k] single-sentence reviews expressing marker k of `attribute` for
// one entity. Review ids are "<prefix>-<n>".
std::vector<ReviewRecord> PlantReviews(const std::string &entity_id, std::string_view attribute,
                                       const std::vector<int> &counts, const std::string &prefix);

// A hotel record with the given id, name and nightly price.
EntityRecord MakeHotel(const std::string &id, const std::string &name, double price_pn,
                       double latitude = 37.7749, double longitude = -122.4194);

}  // namespace xps::synth

#endif  // XPS_SYNTH_H_
