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

// Command-line entry point: ingest corpora, serve an index, run one query
// against an index, or write a synthetic corpus.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "xps/api.h"
#include "xps/config.h"
#include "xps/error.h"
#include "xps/server.h"
#include "xps/snapshot.h"
#include "xps/synth.h"

namespace {

namespace fs = std::filesystem;

xps::Config ConfigFrom(const std::string &path) {
  return path.empty() ? xps::Config{} : xps::LoadConfig(path);
}

void WriteText(const fs::path &path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw xps::Error(xps::ErrorCode::kBadInput, "cannot write " + path.string());
  out << text;
}

int RunIngest(const xps::IngestInputs &inputs, const fs::path &out_dir,
              const std::string &config_path) {
  auto start = std::chrono::steady_clock::now();
  xps::IndexSnapshot snapshot = xps::Ingest(inputs, out_dir, ConfigFrom(config_path));
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "indexed " << snapshot.corpus.entities().size() << " entities, "
            << snapshot.corpus.reviews().size() << " reviews, " << snapshot.model.assigned().size()
            << " phrases in " << seconds << " s\n";
  std::cout << snapshot.version << "\n";
  return 0;
}

int RunQuery(const fs::path &index, const std::string &query, const std::string &config_path) {
  auto snapshot = std::make_shared<const xps::IndexSnapshot>(xps::LoadSnapshot(index));
  xps::SnapshotHolder holder(snapshot);
  xps::Api api(holder, ConfigFrom(config_path));
  xps::Response response = api.Search(query, std::nullopt);
  std::cout << response.body << "\n";
  return response.status == 200 ? 0 : 1;
}

int RunSynth(const xps::synth::Options &options, const fs::path &out_dir) {
  fs::create_directories(out_dir);
  xps::synth::GeneratedCorpus corpus = xps::synth::Generate(options);
  std::string entities, reviews;
  for (const auto &e : corpus.entities) entities += xps::EntityToJson(e).dump() + "\n";
  for (const auto &r : corpus.reviews) reviews += xps::ReviewToJson(r).dump() + "\n";
  WriteText(out_dir / "entities.jsonl", entities);
  WriteText(out_dir / "reviews.jsonl", reviews);
  WriteText(out_dir / "schema.json", xps::synth::FixtureSchemaJson());
  WriteText(out_dir / "aliases.jsonl", xps::synth::FixtureAliasesJsonl());
  std::cerr << "wrote " << corpus.entities.size() << " entities and " << corpus.reviews.size()
            << " reviews to " << out_dir.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Experiential search over review corpora"};
  app.require_subcommand(1);

  xps::IngestInputs inputs;
  std::string aliases, ingest_out, ingest_config;
  auto *ingest = app.add_subcommand("ingest", "Build an index directory from corpus files");
  ingest->add_option("--entities", inputs.entities, "Entities JSONL")->required();
  ingest->add_option("--reviews", inputs.reviews, "Reviews JSONL")->required();
  ingest->add_option("--schema", inputs.schema, "Subjective schema JSON")->required();
  ingest->add_option("--aliases", aliases, "Alias table JSONL");
  ingest->add_option("--out", ingest_out, "Index output directory")->required();
  ingest->add_option("--config", ingest_config, "Config file");

  xps::ServeOptions serve_options;
  std::string serve_config;
  auto *serve = app.add_subcommand("serve", "Serve an index over HTTP");
  serve->add_option("--index", serve_options.index_dir, "Index directory")->required();
  serve->add_option("--port", serve_options.port, "Port")->check(CLI::Range(0, 65535));
  serve->add_option("--host", serve_options.host, "Bind address");
  serve->add_option("--config", serve_config, "Config file");

  std::string query_index, query_text, query_config;
  auto *query = app.add_subcommand("query", "Run one search against an index and print JSON");
  query->add_option("--index", query_index, "Index directory")->required();
  query->add_option("query", query_text, "Query text")->required();
  query->add_option("--config", query_config, "Config file");

  xps::synth::Options synth_options;
  std::string synth_out;
  auto *synth = app.add_subcommand("synth", "Write a synthetic hotel corpus and fixture schema");
  synth->add_option("--entities", synth_options.entities, "Number of hotels")
      ->check(CLI::PositiveNumber);
  synth->add_option("--reviews-per-entity", synth_options.reviews_per_entity, "Reviews per hotel")
      ->check(CLI::NonNegativeNumber);
  synth->add_option("--seed", synth_options.seed, "Generator seed");
  synth->add_option("--out", synth_out, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ingest) {
      if (!aliases.empty()) inputs.aliases = aliases;
      return RunIngest(inputs, ingest_out, ingest_config);
    }
    if (*serve) {
      serve_options.config = ConfigFrom(serve_config);
      return xps::RunServer(serve_options);
    }
    if (*query) return RunQuery(query_index, query_text, query_config);
    if (*synth) return RunSynth(synth_options, synth_out);
  } catch (const xps::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
