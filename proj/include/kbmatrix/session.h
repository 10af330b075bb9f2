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

// In-memory exploration sessions. Each session owns one loaded knowledge
// base and its current view; commands on a session are applied one at a time
// and bump its revision by one.

#ifndef KBMATRIX_SESSION_H_
#define KBMATRIX_SESSION_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "kbmatrix/matrix.h"
#include "kbmatrix/snapshot.h"

namespace kbmatrix {

// Parses, validates and unfolds a knowledge base. Throws ParseError,
// Error "ValidationError" (message prefixed with "line:col: " when known)
// or OverflowError.
std::shared_ptr<const ViewModel> LoadModel(
    std::string_view kb_text,
    std::size_t max_occurrences = kDefaultMaxOccurrences);

struct Command {
  enum class Type { kExpand, kCollapse, kReveal, kCollapsePair, kSelect,
                    kDeselect };
  Type type;
  Axis axis = Axis::kRows;
  OccurrenceId occurrence;  // expand, collapse
  OccurrenceId row;         // reveal, collapsePair
  OccurrenceId col;
  std::optional<NodeId> node;  // select
};

// Decodes a command object such as
//   {"type":"expand","axis":"rows","occurrence":"a"}
//   {"type":"reveal","row":"a","col":"a"}
//   {"type":"collapsePair","row":"a","col":"a"}
//   {"type":"select","node":"x"}   {"type":"deselect"}
// Throws Error "BadCommand".
Command ParseCommand(std::string_view json);

// Applies a command through the matrix engine; engine errors propagate.
MatrixView ApplyCommand(const MatrixView &view, const Command &command);

class SessionStore {
 public:
  using Clock = std::chrono::steady_clock;

  explicit SessionStore(
      std::chrono::seconds idle_timeout = std::chrono::seconds(3600),
      std::function<Clock::time_point()> now = Clock::now);

  struct Created {
    std::string session_id;
    Snapshot snapshot;
  };

  // Loads a knowledge base into a new session at revision 0 with all roots
  // on both axes. Errors as for LoadModel.
  Created Create(std::string_view kb_text);

  // The following throw Error "SessionNotFound" for unknown or evicted ids.
  Snapshot Apply(const std::string &session_id, const Command &command);
  Snapshot Get(const std::string &session_id);
  void Remove(const std::string &session_id);

  // Drops sessions idle for longer than the timeout; returns how many.
  std::size_t EvictIdle();

  std::size_t size() const;

 private:
  struct Session {
    std::mutex mu;
    MatrixView view;
    std::uint64_t revision = 0;
    Clock::time_point last_used;
  };

  std::shared_ptr<Session> Find(const std::string &session_id);

  const std::chrono::seconds idle_timeout_;
  const std::function<Clock::time_point()> now_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

// 128 random bits as 32 lowercase hex digits.
std::string NewSessionToken();

}  // namespace kbmatrix

#endif  // KBMATRIX_SESSION_H_
