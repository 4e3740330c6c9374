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

#ifndef XPS_SERVER_H_
#define XPS_SERVER_H_

#include <filesystem>
#include <string>

#include "xps/api.h"
#include "xps/config.h"

namespace httplib {
class Server;
}

namespace xps {

// Registers the /api routes on `server`. `api` must outlive it.
void MountRoutes(httplib::Server &server, const Api &api);

struct ServeOptions {
  std::filesystem::path index_dir;
  std::string host = "0.0.0.0";
  int port = 8080;
  Config config;
};

// Loads the index and serves until SIGINT or SIGTERM. SIGHUP reloads the
// index directory and swaps it in; a failed reload keeps the old snapshot.
// Returns a process exit status.
int RunServer(const ServeOptions &options);

}  // namespace xps

#endif  // XPS_SERVER_H_
