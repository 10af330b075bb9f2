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

#include "kbmatrix/session.h"

#include <cstdio>
#include <random>
#include <utility>

#include "json.hpp"
#include "kbmatrix/parser.h"

namespace kbmatrix {

std::shared_ptr<const ViewModel> LoadModel(std::string_view kb_text,
                                           std::size_t max_occurrences) {
  KnowledgeBase kb = ParseKb(kb_text);
  for (const Diagnostic &d : Validate(kb)) {
    if (d.severity != Severity::kError) continue;
    std::string message = d.message;
    if (auto loc = kb.location(d.fact_index)) {
      message = std::to_string(loc->line) + ":" + std::to_string(loc->column) +
                ": " + message;
    }
    throw Error("ValidationError", message);
  }
  Forest forest = UnfoldForest(kb, max_occurrences);
  return MakeViewModel(std::move(kb), std::move(forest));
}

namespace {

[[noreturn]] void BadCommand(const std::string &message) {
  throw Error("BadCommand", message);
}

std::string Field(const nlohmann::json &doc, const char *name) {
  auto it = doc.find(name);
  if (it == doc.end() || !it->is_string()) {
    BadCommand(std::string("missing string field '") + name + "'");
  }
  return it->get<std::string>();
}

}  // namespace

Command ParseCommand(std::string_view json) {
  nlohmann::json doc = nlohmann::json::parse(json, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    BadCommand("command must be a JSON object");
  }
  const std::string type = Field(doc, "type");
  Command cmd{};
  if (type == "expand" || type == "collapse") {
    cmd.type = type == "expand" ? Command::Type::kExpand
                                : Command::Type::kCollapse;
    std::optional<Axis> axis = ParseAxis(Field(doc, "axis"));
    if (!axis) BadCommand("axis must be \"rows\" or \"cols\"");
    cmd.axis = *axis;
    cmd.occurrence = Field(doc, "occurrence");
  } else if (type == "reveal" || type == "collapsePair") {
    cmd.type = type == "reveal" ? Command::Type::kReveal
                                : Command::Type::kCollapsePair;
    cmd.row = Field(doc, "row");
    cmd.col = Field(doc, "col");
  } else if (type == "select") {
    cmd.type = Command::Type::kSelect;
    const std::string node = Field(doc, "node");
    if (!IsIdentifier(node)) BadCommand("invalid node id '" + node + "'");
    cmd.node = NodeId(node);
  } else if (type == "deselect") {
    cmd.type = Command::Type::kDeselect;
  } else {
    BadCommand("unknown command type '" + type + "'");
  }
  return cmd;
}

MatrixView ApplyCommand(const MatrixView &view, const Command &command) {
  switch (command.type) {
    case Command::Type::kExpand:
      return Expand(view, command.axis, command.occurrence);
    case Command::Type::kCollapse:
      return Collapse(view, command.axis, command.occurrence);
    case Command::Type::kReveal:
      return Reveal(view, command.row, command.col);
    case Command::Type::kCollapsePair:
      return CollapsePair(view, command.row, command.col);
    case Command::Type::kSelect:
      return Select(view, *command.node);
    case Command::Type::kDeselect:
      return Deselect(view);
  }
  BadCommand("unknown command");
}

std::string NewSessionToken() {
  static std::mutex mu;
  static std::random_device device;
  std::uint64_t words[2];
  {
    std::lock_guard<std::mutex> lock(mu);
    for (std::uint64_t &w : words) {
      w = (static_cast<std::uint64_t>(device()) << 32) | device();
    }
  }
  char buf[33];
  std::snprintf(buf, sizeof(buf), "%016llx%016llx",
                static_cast<unsigned long long>(words[0]),
                static_cast<unsigned long long>(words[1]));
  return buf;
}

SessionStore::SessionStore(std::chrono::seconds idle_timeout,
                           std::function<Clock::time_point()> now)
    : idle_timeout_(idle_timeout), now_(std::move(now)) {}

SessionStore::Created SessionStore::Create(std::string_view kb_text) {
  auto session = std::make_shared<Session>();
  session->view = NewView(LoadModel(kb_text), {}, {});
  Snapshot snapshot = MakeSnapshot(session->view, 0);

  EvictIdle();
  std::lock_guard<std::mutex> lock(mu_);
  std::string id;
  do {
    id = NewSessionToken();
  } while (sessions_.count(id));
  session->last_used = now_();
  sessions_.emplace(id, std::move(session));
  return {id, std::move(snapshot)};
}

std::shared_ptr<SessionStore::Session> SessionStore::Find(
    const std::string &session_id) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = sessions_.find(session_id);
  const Clock::time_point now = now_();
  if (it != sessions_.end() && it->second->last_used < now - idle_timeout_) {
    sessions_.erase(it);
    it = sessions_.end();
  }
  if (it == sessions_.end()) {
    throw Error("SessionNotFound", "no session '" + session_id + "'");
  }
  it->second->last_used = now;
  return it->second;
}

Snapshot SessionStore::Apply(const std::string &session_id,
                             const Command &command) {
  std::shared_ptr<Session> session = Find(session_id);
  std::lock_guard<std::mutex> lock(session->mu);
  session->view = ApplyCommand(session->view, command);
  ++session->revision;
  return MakeSnapshot(session->view, session->revision);
}

Snapshot SessionStore::Get(const std::string &session_id) {
  std::shared_ptr<Session> session = Find(session_id);
  std::lock_guard<std::mutex> lock(session->mu);
  return MakeSnapshot(session->view, session->revision);
}

void SessionStore::Remove(const std::string &session_id) {
  std::lock_guard<std::mutex> lock(mu_);
  if (sessions_.erase(session_id) == 0) {
    throw Error("SessionNotFound", "no session '" + session_id + "'");
  }
}

std::size_t SessionStore::EvictIdle() {
  std::lock_guard<std::mutex> lock(mu_);
  const Clock::time_point cutoff = now_() - idle_timeout_;
  return std::erase_if(sessions_, [&](const auto &entry) {
    return entry.second->last_used < cutoff;
  });
}

std::size_t SessionStore::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return sessions_.size();
}

}  // namespace kbmatrix
