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

#include "xps/snapshot.h"

#include <fstream>
#include <sstream>

#include "xps/error.h"
#include "xps/extraction.h"
#include "xps/strings.h"

namespace xps {

using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

const char *const kFiles[] = {
    "entities.jsonl",  "reviews.jsonl", "schema.json",    "aliases.jsonl",    "extractions.jsonl",
    "summaries.jsonl", "domains.jsonl", "documents.json", "candidates.jsonl",
};

std::string JsonLines(const std::vector<json> &records) {
  std::string out;
  for (const auto &r : records) {
    out.append(r.dump());
    out.push_back('\n');
  }
  return out;
}

Error SnapshotError(const std::string &message) {
  return Error(ErrorCode::kBadInput, "index: " + message);
}

// Calls fn(record) for every line of a JSON-lines blob.
template <typename Fn>
void ForEachLine(const std::string &content, const std::string &file, Fn fn) {
  int line_number = 0;
  for (std::string_view line : SplitLines(content)) {
    ++line_number;
    if (Trim(line).empty()) continue;
    try {
      fn(json::parse(line));
    } catch (const json::exception &e) {
      throw SnapshotError(file + " line " + std::to_string(line_number) + ": " + e.what());
    }
  }
}

}  // namespace

json ExtractionToJson(const AssignedExtraction &a, const SchemaDef &schema) {
  const auto &r = a.record;
  json out = {{"entity_id", r.entity_id},
              {"review_id", r.review_id},
              {"sentence_index", r.sentence_index},
              {"span_start", r.span_start},
              {"span_end", r.span_end},
              {"attribute", r.attribute},
              {"phrase", r.phrase},
              {"polarity", r.polarity},
              {"marker_ordinal", a.marker}};
  if (const auto *attr = schema.Find(r.attribute); attr && a.marker < attr->marker_count()) {
    out["marker"] = attr->markers[a.marker].label;
  }
  return out;
}

json SummaryToJson(const MarkerSummary &summary) {
  json counts = json::array();
  for (const auto &c : summary.counts) counts.push_back({{"label", c.label}, {"count", c.count}});
  return {{"entity_id", summary.entity_id},
          {"attribute", summary.attribute},
          {"counts", counts},
          {"total", summary.total}};
}

json CandidateToJson(const Candidate &c, bool with_query_scores) {
  json out = {{"entity_id", c.entity_id},
              {"review_id", c.review_id},
              {"index", c.index},
              {"text", c.text},
              {"kind", CandidateKindName(c.kind)},
              {"significance", c.significance}};
  if (with_query_scores) {
    out["relevance"] = c.relevance;
    out["score"] = c.score;
  }
  return out;
}

IndexSnapshot BuildSnapshot(Corpus corpus, SchemaDef schema, AliasTable aliases,
                            const Config &config) {
  IndexSnapshot snapshot;
  const Lexicon &lexicon = Lexicon::Default();
  auto extractions = ExtractCorpus(corpus, schema, lexicon);
  snapshot.model = SubjectiveModel(schema, extractions, lexicon);
  snapshot.documents = BuildAttributeDocuments(snapshot.model.domains(), schema, lexicon);
  snapshot.candidates = MineCandidates(corpus, config, lexicon);
  snapshot.corpus = std::move(corpus);
  snapshot.schema = std::move(schema);
  snapshot.aliases = std::move(aliases);
  snapshot.version = SnapshotVersion(SerializeSnapshot(snapshot));
  return snapshot;
}

std::vector<std::pair<std::string, std::string>> SerializeSnapshot(const IndexSnapshot &s) {
  std::vector<std::pair<std::string, std::string>> files;

  std::vector<json> lines;
  for (const auto &e : s.corpus.entities()) lines.push_back(EntityToJson(e));
  files.emplace_back(kFiles[0], JsonLines(lines));

  lines.clear();
  for (const auto &r : s.corpus.reviews()) lines.push_back(ReviewToJson(r));
  files.emplace_back(kFiles[1], JsonLines(lines));

  files.emplace_back(kFiles[2], SchemaToJson(s.schema).dump(2) + "\n");

  lines.clear();
  for (const auto &[token, concepts] : s.aliases) {
    lines.push_back({{"token", token}, {"concepts", concepts}});
  }
  files.emplace_back(kFiles[3], JsonLines(lines));

  lines.clear();
  for (const auto &a : s.model.assigned()) lines.push_back(ExtractionToJson(a, s.schema));
  files.emplace_back(kFiles[4], JsonLines(lines));

  lines.clear();
  for (const auto &summary : s.model.summaries()) lines.push_back(SummaryToJson(summary));
  files.emplace_back(kFiles[5], JsonLines(lines));

  lines.clear();
  for (const auto &d : s.model.domains()) {
    lines.push_back({{"attribute", d.attribute}, {"phrases", d.phrases}});
  }
  files.emplace_back(kFiles[6], JsonLines(lines));

  json docs = json::array();
  for (const auto &d : s.documents.documents) {
    docs.push_back({{"attribute", d.attribute}, {"norm", d.norm}, {"weights", d.weights}});
  }
  files.emplace_back(kFiles[7], json{{"iaf", s.documents.iaf}, {"documents", docs}}.dump() + "\n");

  lines.clear();
  for (const auto &[entity, cs] : s.candidates) {
    for (const auto &c : cs.tips) lines.push_back(CandidateToJson(c, false));
    for (const auto &c : cs.facts) lines.push_back(CandidateToJson(c, false));
  }
  files.emplace_back(kFiles[8], JsonLines(lines));
  return files;
}

std::string SnapshotVersion(const std::vector<std::pair<std::string, std::string>> &files) {
  uint64_t h = Fnv1a64("xps-index-" + std::to_string(kFormatVersion));
  for (const auto &[name, content] : files) {
    h = Fnv1a64(name, h);
    h = Fnv1a64(std::string_view("\0", 1), h);
    h = Fnv1a64(std::to_string(content.size()), h);
    h = Fnv1a64(std::string_view("\0", 1), h);
    h = Fnv1a64(content, h);
  }
  return HexDigest(h);
}

void WriteSnapshot(const IndexSnapshot &snapshot, const std::filesystem::path &dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kBadInput, "cannot create " + dir.string() + ": " + ec.message());
  auto files = SerializeSnapshot(snapshot);
  json manifest = {{"format", kFormatVersion}, {"version", SnapshotVersion(files)}};
  json sizes = json::object();
  for (const auto &[name, content] : files) {
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kBadInput, "cannot write " + (dir / name).string());
    out << content;
    sizes[name] = content.size();
  }
  manifest["files"] = sizes;
  manifest["counts"] = {{"entities", snapshot.corpus.entities().size()},
                        {"reviews", snapshot.corpus.reviews().size()},
                        {"extractions", snapshot.model.assigned().size()},
                        {"summaries", snapshot.model.summaries().size()}};
  // Manifest last: a reader never sees a manifest for half-written files.
  std::ofstream out(dir / "manifest.json", std::ios::trunc);
  if (!out) throw Error(ErrorCode::kBadInput, "cannot write manifest in " + dir.string());
  out << manifest.dump(2) << "\n";
}

IndexSnapshot LoadSnapshot(const std::filesystem::path &dir) {
  json manifest;
  try {
    manifest = json::parse(ReadFile(dir / "manifest.json"));
  } catch (const json::exception &e) {
    throw SnapshotError("malformed manifest: " + std::string(e.what()));
  }
  if (manifest.value("format", 0) != kFormatVersion) {
    throw SnapshotError("unsupported index format in " + dir.string());
  }

  std::vector<std::pair<std::string, std::string>> files;
  for (const char *name : kFiles) files.emplace_back(name, ReadFile(dir / name));
  std::string version = SnapshotVersion(files);
  if (version != manifest.value("version", "")) {
    throw SnapshotError("content hash " + version + " does not match manifest in " + dir.string());
  }
  auto content = [&](int i) -> const std::string & { return files[i].second; };

  IndexSnapshot s;
  std::istringstream entities_in(content(0));
  auto entities = ParseEntities(entities_in, kFiles[0]);
  std::istringstream reviews_in(content(1));
  auto reviews = ParseReviews(reviews_in, entities, kFiles[1]);
  s.corpus = Corpus(std::move(entities), std::move(reviews));
  try {
    s.schema = ParseSchema(json::parse(content(2)));
  } catch (const json::exception &e) {
    throw SnapshotError(std::string("schema.json: ") + e.what());
  }
  std::istringstream aliases_in(content(3));
  s.aliases = ParseAliases(aliases_in, kFiles[3]);

  std::vector<AssignedExtraction> assigned;
  ForEachLine(content(4), kFiles[4], [&](const json &j) {
    AssignedExtraction a;
    a.record.entity_id = j.at("entity_id").get<std::string>();
    a.record.review_id = j.at("review_id").get<std::string>();
    a.record.sentence_index = j.at("sentence_index").get<int>();
    a.record.span_start = j.at("span_start").get<int>();
    a.record.span_end = j.at("span_end").get<int>();
    a.record.attribute = j.at("attribute").get<std::string>();
    a.record.phrase = j.at("phrase").get<std::string>();
    a.record.polarity = j.at("polarity").get<double>();
    a.marker = j.at("marker_ordinal").get<int>();
    assigned.push_back(std::move(a));
  });
  std::vector<MarkerSummary> summaries;
  ForEachLine(content(5), kFiles[5], [&](const json &j) {
    MarkerSummary m;
    m.entity_id = j.at("entity_id").get<std::string>();
    m.attribute = j.at("attribute").get<std::string>();
    m.total = j.at("total").get<int>();
    for (const auto &c : j.at("counts")) {
      m.counts.push_back({c.at("label").get<std::string>(), c.at("count").get<int>()});
    }
    summaries.push_back(std::move(m));
  });
  std::vector<LinguisticDomain> domains;
  ForEachLine(content(6), kFiles[6], [&](const json &j) {
    domains.push_back(
        {j.at("attribute").get<std::string>(), j.at("phrases").get<std::map<std::string, int>>()});
  });
  s.model = SubjectiveModel(std::move(assigned), std::move(summaries), std::move(domains));

  try {
    json docs = json::parse(content(7));
    s.documents.iaf = docs.at("iaf").get<std::map<std::string, double>>();
    for (const auto &d : docs.at("documents")) {
      s.documents.documents.push_back({d.at("attribute").get<std::string>(),
                                       d.at("weights").get<std::map<std::string, double>>(),
                                       d.at("norm").get<double>()});
    }
  } catch (const json::exception &e) {
    throw SnapshotError(std::string("documents.json: ") + e.what());
  }

  ForEachLine(content(8), kFiles[8], [&](const json &j) {
    Candidate c;
    c.entity_id = j.at("entity_id").get<std::string>();
    c.review_id = j.at("review_id").get<std::string>();
    c.index = j.at("index").get<int>();
    c.text = j.at("text").get<std::string>();
    c.tokens = Tokenize(c.text);
    c.kind = j.at("kind").get<std::string>() == "tip" ? CandidateKind::kTip : CandidateKind::kFact;
    c.significance = j.at("significance").get<double>();
    auto &bucket = s.candidates[c.entity_id];
    (c.kind == CandidateKind::kTip ? bucket.tips : bucket.facts).push_back(std::move(c));
  });
  s.version = version;
  return s;
}

IndexSnapshot Ingest(const IngestInputs &inputs, const std::filesystem::path &out_dir,
                     const Config &config) {
  for (const auto *path : {&inputs.entities, &inputs.reviews, &inputs.schema}) {
    if (!std::filesystem::exists(*path)) {
      throw Error(ErrorCode::kBadInput, "input file not found: " + path->string());
    }
  }
  if (inputs.aliases && !std::filesystem::exists(*inputs.aliases)) {
    throw Error(ErrorCode::kBadInput, "input file not found: " + inputs.aliases->string());
  }
  SchemaDef schema = LoadSchema(inputs.schema);
  auto entities = LoadEntities(inputs.entities);
  auto reviews = LoadReviews(inputs.reviews, entities);
  AliasTable aliases = inputs.aliases ? LoadAliases(*inputs.aliases) : AliasTable{};
  IndexSnapshot snapshot = BuildSnapshot(Corpus(std::move(entities), std::move(reviews)),
                                         std::move(schema), std::move(aliases), config);
  WriteSnapshot(snapshot, out_dir);
  return snapshot;
}

}  // namespace xps
