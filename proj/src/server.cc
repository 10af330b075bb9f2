// Copyright 2026 The kbmatrix Authors.
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

#include "kbmatrix/server.h"

#include <exception>
#include <functional>

#include "httplib.h"
#include "json.hpp"

namespace kbmatrix {

namespace {

constexpr char kJson[] = "application/json";

void SendError(httplib::Response &res, const std::string &code,
               const std::string &message) {
  nlohmann::ordered_json body;
  body["error"]["code"] = code;
  body["error"]["message"] = message;
  res.status = code == "SessionNotFound" ? 404 : 400;
  res.set_content(body.dump(), kJson);
}

// Runs a handler, mapping library errors onto JSON error responses.
void Guarded(httplib::Response &res, const std::function<void()> &body) {
  try {
    body();
  } catch (const ParseError &e) {
    SendError(res, e.code(), e.Located());
  } catch (const Error &e) {
    SendError(res, e.code(), e.what());
  } catch (const std::exception &e) {
    nlohmann::ordered_json err;
    err["error"]["code"] = "InternalError";
    err["error"]["message"] = e.what();
    res.status = 500;
    res.set_content(err.dump(), kJson);
  }
}

}  // namespace

void InstallRoutes(httplib::Server &server, SessionStore &store,
                   const ServeOptions &options) {
  server.Get("/healthz", [](const httplib::Request &, httplib::Response &res) {
    res.set_content(R"({"ok":true})", kJson);
  });

  server.Get("/preloaded",
             [&options](const httplib::Request &, httplib::Response &res) {
               if (!options.preloaded_session) {
                 SendError(res, "SessionNotFound", "no preloaded session");
                 return;
               }
               nlohmann::ordered_json body;
               body["sessionId"] = *options.preloaded_session;
               res.set_content(body.dump(), kJson);
             });

  server.Post("/session",
              [&store](const httplib::Request &req, httplib::Response &res) {
                Guarded(res, [&] {
                  SessionStore::Created created = store.Create(req.body);
                  std::string body = "{\"sessionId\":" +
                                     nlohmann::json(created.session_id).dump() +
                                     ",\"snapshot\":" +
                                     EncodeSnapshot(created.snapshot) + "}";
                  res.status = 201;
                  res.set_content(body, kJson);
                });
              });

  server.Get(R"(/session/([^/]+)/snapshot)",
             [&store](const httplib::Request &req, httplib::Response &res) {
               Guarded(res, [&] {
                 res.set_content(EncodeSnapshot(store.Get(req.matches[1])),
                                 kJson);
               });
             });

  server.Post(R"(/session/([^/]+)/command)",
              [&store](const httplib::Request &req, httplib::Response &res) {
                Guarded(res, [&] {
                  Command command = ParseCommand(req.body);
                  res.set_content(
                      EncodeSnapshot(store.Apply(req.matches[1], command)),
                      kJson);
                });
              });

  server.Delete(R"(/session/([^/]+))",
                [&store](const httplib::Request &req, httplib::Response &res) {
                  Guarded(res, [&] {
                    store.Remove(req.matches[1]);
                    res.set_content(R"({"ok":true})", kJson);
                  });
                });

  if (options.static_dir) server.set_mount_point("/", *options.static_dir);
}

bool Serve(SessionStore &store, const ServeOptions &options) {
  httplib::Server server;
  InstallRoutes(server, store, options);
  return server.listen(options.address, options.port);
}

}  // namespace kbmatrix
