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

#include "xps/server.h"

#include <atomic>
#include <chrono>
#include <csignal>
#include <iostream>
#include <thread>

#include "httplib.h"
#include "xps/snapshot.h"

namespace xps {

namespace {

std::atomic<bool> reload_requested{false};
std::atomic<bool> stop_requested{false};

extern "C" void OnSignal(int signal) {
  if (signal == SIGHUP) {
    reload_requested = true;
  } else {
    stop_requested = true;
  }
}

void Send(httplib::Response &res, const Response &response) {
  res.status = response.status;
  res.set_header("Access-Control-Allow-Origin", "*");
  res.set_content(response.body, "application/json");
}

}  // namespace

void MountRoutes(httplib::Server &server, const Api &api) {
  server.Get("/api/health",
             [&api](const httplib::Request &, httplib::Response &res) { Send(res, api.Health()); });
  server.Get("/api/search", [&api](const httplib::Request &req, httplib::Response &res) {
    std::string q = req.has_param("q") ? req.get_param_value("q") : "";
    std::string limit = req.has_param("limit") ? req.get_param_value("limit") : "";
    Send(res, api.Search(q, req.has_param("limit") ? std::optional<std::string_view>(limit)
                                                   : std::nullopt));
  });
  server.Get(R"(/api/entities/([^/]+))",
             [&api](const httplib::Request &req, httplib::Response &res) {
               Send(res, api.Entity(req.matches[1].str()));
             });
  server.Get(R"(/api/entities/([^/]+)/facts)", [&api](const httplib::Request &req,
                                                      httplib::Response &res) {
    std::string q = req.has_param("q") ? req.get_param_value("q") : "";
    Send(res, api.Facts(req.matches[1].str(),
                        req.has_param("q") ? std::optional<std::string_view>(q) : std::nullopt));
  });
  server.Get(R"(/api/entities/([^/]+)/summary)", [&api](const httplib::Request &req,
                                                        httplib::Response &res) {
    std::string q = req.has_param("q") ? req.get_param_value("q") : "";
    Send(res, api.Summary(req.matches[1].str(),
                          req.has_param("q") ? std::optional<std::string_view>(q) : std::nullopt));
  });
}

int RunServer(const ServeOptions &options) {
  std::shared_ptr<const IndexSnapshot> initial;
  try {
    initial = std::make_shared<const IndexSnapshot>(LoadSnapshot(options.index_dir));
  } catch (const std::exception &e) {
    std::cerr << "serve: " << e.what() << "\n";
    return 1;
  }
  SnapshotHolder holder(initial);
  Api api(holder, options.config);
  httplib::Server server;
  MountRoutes(server, api);

  std::signal(SIGHUP, OnSignal);
  std::signal(SIGINT, OnSignal);
  std::signal(SIGTERM, OnSignal);

  std::thread watcher([&] {
    while (!stop_requested) {
      std::this_thread::sleep_for(std::chrono::milliseconds(100));
      if (reload_requested.exchange(false)) {
        try {
          holder.Swap(std::make_shared<const IndexSnapshot>(LoadSnapshot(options.index_dir)));
          std::cerr << "serve: reloaded index " << holder.Get()->version << "\n";
        } catch (const std::exception &e) {
          std::cerr << "serve: reload failed, keeping " << holder.Get()->version << ": " << e.what()
                    << "\n";
        }
      }
    }
    server.stop();
  });

  std::cerr << "serve: index " << initial->version << " on " << options.host << ":" << options.port
            << "\n";
  bool ok = server.listen(options.host, options.port);
  bool stopped_by_signal = stop_requested.exchange(true);
  watcher.join();
  if (!ok && !stopped_by_signal) {
    std::cerr << "serve: cannot listen on " << options.host << ":" << options.port << "\n";
    return 1;
  }
  return 0;
}

}  // namespace xps
