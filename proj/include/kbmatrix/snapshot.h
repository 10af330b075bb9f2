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

// Wire form of a matrix view.
//
// EncodeSnapshot writes compact UTF-8 JSON with keys in this order:
//
//   {"revision":N,
//    "rows":[{"occurrence","node","depth","expanded","hasChildren","tooltip"}],
//    "cols":[...same...],
//    "cells":[{"row","col","kind","visibility",
//              "relations":[{"name","direction","origin","meta"}],
//              "tooltip"}],
//    "selected":node|null,
//    "neighborhood":{"center","neighbors":[{"relation","other","direction"}]}|null}
//
// "row" and "col" of a cell index into "rows" and "cols".

#ifndef KBMATRIX_SNAPSHOT_H_
#define KBMATRIX_SNAPSHOT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kbmatrix/matrix.h"

namespace kbmatrix {

struct AxisEntry {
  OccurrenceId occurrence;
  NodeId node;
  int depth;
  bool expanded;
  bool has_children;
  std::string tooltip;
  friend bool operator==(const AxisEntry &, const AxisEntry &) = default;
};

struct SnapshotCell {
  int row;
  int col;
  MarkKind kind;
  Visibility visibility;
  std::vector<CellRelation> relations;
  std::string tooltip;
  friend bool operator==(const SnapshotCell &, const SnapshotCell &) = default;
};

struct Snapshot {
  std::uint64_t revision = 0;
  std::vector<AxisEntry> rows;
  std::vector<AxisEntry> cols;
  std::vector<SnapshotCell> cells;
  std::optional<NodeId> selected;
  std::optional<NeighborhoodGraph> neighborhood;
};

Snapshot MakeSnapshot(const MatrixView &view, std::uint64_t revision);

std::string EncodeSnapshot(const Snapshot &snapshot);

// Plain-text grid for terminals.
std::string RenderSnapshotText(const Snapshot &snapshot);

}  // namespace kbmatrix

#endif  // KBMATRIX_SNAPSHOT_H_
