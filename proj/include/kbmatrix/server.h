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

// HTTP front end of the session store.
//
//   POST   /session               body: KB text -> {"sessionId","snapshot"}
//   GET    /session/{id}/snapshot                -> snapshot
//   POST   /session/{id}/command  body: command  -> snapshot
//   DELETE /session/{id}                         -> {"ok":true}
//   GET    /preloaded                            -> {"sessionId"} or 404
//   GET    /healthz                              -> {"ok":true}
//
// Failures answer {"error":{"code":...,"message":...}} with status 404 for
// SessionNotFound and 400 otherwise.

#ifndef KBMATRIX_SERVER_H_
#define KBMATRIX_SERVER_H_

#include <optional>
#include <string>

#include "kbmatrix/session.h"

namespace httplib {
class Server;
}

namespace kbmatrix {

struct ServeOptions {
  std::string address = "127.0.0.1";
  int port = 7421;
  // Directory of static frontend assets served at "/", if set.
  std::optional<std::string> static_dir;
  // Session created at startup from a KB file, reported by /preloaded.
  std::optional<std::string> preloaded_session;
};

// Registers the endpoints on an existing server.
void InstallRoutes(httplib::Server &server, SessionStore &store,
                   const ServeOptions &options);

// Binds and serves until the process is stopped. Returns false if the
// address cannot be bound.
bool Serve(SessionStore &store, const ServeOptions &options);

}  // namespace kbmatrix

#endif  // KBMATRIX_SERVER_H_
