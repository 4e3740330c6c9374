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

#ifndef XPS_API_H_
#define XPS_API_H_

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "xps/config.h"
#include "xps/error.h"
#include "xps/snapshot.h"

namespace xps {

// Facts and tips attached to each search result.
inline constexpr size_t kResultCandidates = 3;
// Facts and tips returned by the per-entity endpoint.
inline constexpr size_t kEntityCandidates = 10;

struct Response {
  int status = 200;
  std::string body;  // JSON, keys sorted
};

// The published snapshot. Readers take a reference once per request, so a
// request sees either the old or the new snapshot in full.
class SnapshotHolder {
 public:
  explicit SnapshotHolder(std::shared_ptr<const IndexSnapshot> snapshot)
      : snapshot_(std::move(snapshot)) {}

  std::shared_ptr<const IndexSnapshot> Get() const {
    std::lock_guard<std::mutex> lock(mu_);
    return snapshot_;
  }

  void Swap(std::shared_ptr<const IndexSnapshot> snapshot) {
    std::lock_guard<std::mutex> lock(mu_);
    snapshot_ = std::move(snapshot);
  }

 private:
  mutable std::mutex mu_;
  std::shared_ptr<const IndexSnapshot> snapshot_;
};

int HttpStatus(ErrorCode code);
Response ErrorResponse(const Error &error);

// Request handlers behind the HTTP routes. Stateless: identical requests
// against one snapshot produce byte-identical bodies.
class Api {
 public:
  Api(const SnapshotHolder &holder, Config config) : holder_(holder), config_(config) {}

  // GET /api/search?q=&limit=
  Response Search(std::string_view q, std::optional<std::string_view> limit) const;
  // GET /api/entities/{id}
  Response Entity(std::string_view id) const;
  // GET /api/entities/{id}/facts?q=
  Response Facts(std::string_view id, std::optional<std::string_view> q) const;
  // GET /api/entities/{id}/summary?q=
  Response Summary(std::string_view id, std::optional<std::string_view> q) const;
  // GET /api/health
  Response Health() const;

  const Config &config() const { return config_; }

 private:
  const SnapshotHolder &holder_;
  Config config_;
};

// `q` for the entity endpoints: a full query ("select ...") contributes its
// quoted predicates; anything else is one predicate. Blank gives none.
std::vector<std::string> PredicatesFromParameter(std::string_view q);

}  // namespace xps

#endif  // XPS_API_H_
