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

#ifndef XPS_SNAPSHOT_H_
#define XPS_SNAPSHOT_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "xps/config.h"
#include "xps/corpus.h"
#include "xps/facts.h"
#include "xps/interpretation.h"
#include "xps/model.h"

namespace xps {

// Everything the service reads, built by one ingest run. Immutable once
// published.
struct IndexSnapshot {
  Corpus corpus;
  SchemaDef schema;
  AliasTable aliases;
  SubjectiveModel model;
  AttributeDocuments documents;
  std::map<std::string, EntityCandidates> candidates;
  // Content hash of the serialized files.
  std::string version;
};

// Runs extraction, aggregation, document building and candidate mining.
IndexSnapshot BuildSnapshot(Corpus corpus, SchemaDef schema, AliasTable aliases,
                            const Config &config = {});

// The index directory contents as (file name, bytes), in manifest order,
// excluding manifest.json.
std::vector<std::pair<std::string, std::string>> SerializeSnapshot(const IndexSnapshot &snapshot);

// Hex FNV-1a over the serialized files, names included.
std::string SnapshotVersion(const std::vector<std::pair<std::string, std::string>> &files);

// Writes every file plus manifest.json into `dir`, creating it if needed.
void WriteSnapshot(const IndexSnapshot &snapshot, const std::filesystem::path &dir);

// Reads an index directory without re-running extraction. Throws
// Error(kBadInput) when a file is missing or the content hash disagrees with
// the manifest.
IndexSnapshot LoadSnapshot(const std::filesystem::path &dir);

struct IngestInputs {
  std::filesystem::path entities;
  std::filesystem::path reviews;
  std::filesystem::path schema;
  std::optional<std::filesystem::path> aliases;
};

// Load, build and write. Re-running on identical inputs yields the same
// version.
IndexSnapshot Ingest(const IngestInputs &inputs, const std::filesystem::path &out_dir,
                     const Config &config = {});

// JSON forms shared by the snapshot files and the HTTP API.
nlohmann::json ExtractionToJson(const AssignedExtraction &a, const SchemaDef &schema);
nlohmann::json SummaryToJson(const MarkerSummary &summary);
nlohmann::json CandidateToJson(const Candidate &candidate, bool with_query_scores);

}  // namespace xps

#endif  // XPS_SNAPSHOT_H_
