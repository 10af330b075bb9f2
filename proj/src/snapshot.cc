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

#include "kbmatrix/snapshot.h"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace kbmatrix {

namespace {

using nlohmann::ordered_json;

std::vector<AxisEntry> Entries(const ViewModel &model, const AxisState &axis) {
  std::vector<AxisEntry> entries;
  for (const OccurrenceId &id : VisibleOccurrences(model, axis)) {
    const Occurrence &occ = model.forest.at(id);
    entries.push_back({id, occ.node, occ.depth, axis.expanded.count(id) > 0,
                       !occ.children.empty(), NodeTooltip(model, id)});
  }
  return entries;
}

ordered_json AxisJson(const std::vector<AxisEntry> &entries) {
  ordered_json out = ordered_json::array();
  for (const AxisEntry &e : entries) {
    ordered_json o;
    o["occurrence"] = e.occurrence;
    o["node"] = e.node.str();
    o["depth"] = e.depth;
    o["expanded"] = e.expanded;
    o["hasChildren"] = e.has_children;
    o["tooltip"] = e.tooltip;
    out.push_back(std::move(o));
  }
  return out;
}

// Symbol of a cell in the text grid.
std::string Glyph(const SnapshotCell &cell) {
  switch (cell.visibility) {
    case Visibility::kHiddenBelow:
      return "⊞";
    case Visibility::kRevealedBelow:
      return "⊟";
    case Visibility::kDirect:
      break;
  }
  bool forward = false;
  bool backward = false;
  for (const CellRelation &r : cell.relations) {
    (r.direction == Direction::kRowToCol ? forward : backward) = true;
  }
  if (cell.kind == MarkKind::kImplicit) return forward && backward ? "◇" : "□";
  if (forward && backward) return "↔";
  return forward ? "→" : "←";
}

}  // namespace

Snapshot MakeSnapshot(const MatrixView &view, std::uint64_t revision) {
  const ViewModel &model = *view.model;
  Snapshot snap;
  snap.revision = revision;
  snap.rows = Entries(model, view.rows);
  snap.cols = Entries(model, view.cols);

  std::map<OccurrenceId, int> row_index;
  std::map<OccurrenceId, int> col_index;
  for (std::size_t i = 0; i < snap.rows.size(); ++i) {
    row_index.emplace(snap.rows[i].occurrence, static_cast<int>(i));
  }
  for (std::size_t i = 0; i < snap.cols.size(); ++i) {
    col_index.emplace(snap.cols[i].occurrence, static_cast<int>(i));
  }
  for (const CellMark &mark : view.cells) {
    snap.cells.push_back({row_index.at(mark.row), col_index.at(mark.col),
                          mark.kind, mark.visibility, mark.relations,
                          mark.tooltip});
  }
  if (view.selected) {
    snap.selected = view.selected;
    snap.neighborhood = Neighborhood(model.kb, *view.selected);
  }
  return snap;
}

std::string EncodeSnapshot(const Snapshot &snapshot) {
  ordered_json cells = ordered_json::array();
  for (const SnapshotCell &cell : snapshot.cells) {
    ordered_json relations = ordered_json::array();
    for (const CellRelation &r : cell.relations) {
      ordered_json rel;
      rel["name"] = r.name;
      rel["direction"] = DirectionName(r.direction);
      rel["origin"] = OriginName(r.origin);
      rel["meta"] = r.meta;
      relations.push_back(std::move(rel));
    }
    ordered_json o;
    o["row"] = cell.row;
    o["col"] = cell.col;
    o["kind"] = MarkKindName(cell.kind);
    o["visibility"] = VisibilityName(cell.visibility);
    o["relations"] = std::move(relations);
    o["tooltip"] = cell.tooltip;
    cells.push_back(std::move(o));
  }

  ordered_json doc;
  doc["revision"] = snapshot.revision;
  doc["rows"] = AxisJson(snapshot.rows);
  doc["cols"] = AxisJson(snapshot.cols);
  doc["cells"] = std::move(cells);
  doc["selected"] =
      snapshot.selected ? ordered_json(snapshot.selected->str()) : nullptr;
  if (snapshot.neighborhood) {
    ordered_json neighbors = ordered_json::array();
    for (const Neighbor &n : snapshot.neighborhood->neighbors) {
      ordered_json o;
      o["relation"] = n.relation;
      o["other"] = n.other.str();
      o["direction"] = n.direction == NeighborDirection::kOut ? "out" : "in";
      neighbors.push_back(std::move(o));
    }
    ordered_json hood;
    hood["center"] = snapshot.neighborhood->center.str();
    hood["neighbors"] = std::move(neighbors);
    doc["neighborhood"] = std::move(hood);
  } else {
    doc["neighborhood"] = nullptr;
  }
  return doc.dump();
}

std::string RenderSnapshotText(const Snapshot &snapshot) {
  auto label = [](const AxisEntry &e) {
    std::string marker = e.has_children ? (e.expanded ? "- " : "+ ") : "  ";
    return std::string(2 * e.depth, ' ') + marker + e.node.str();
  };
  std::size_t width = 0;
  for (const AxisEntry &e : snapshot.rows) {
    width = std::max(width, label(e).size());
  }

  std::string out = "columns:\n";
  for (std::size_t c = 0; c < snapshot.cols.size(); ++c) {
    out += "  " + std::to_string(c) + "  " + label(snapshot.cols[c]) + "\n";
  }
  std::map<std::pair<int, int>, const SnapshotCell *> at;
  for (const SnapshotCell &cell : snapshot.cells) at[{cell.row, cell.col}] = &cell;

  out += "rows:\n";
  for (std::size_t r = 0; r < snapshot.rows.size(); ++r) {
    std::string line = label(snapshot.rows[r]);
    line.resize(width, ' ');
    out += "  " + line + " |";
    for (std::size_t c = 0; c < snapshot.cols.size(); ++c) {
      auto it = at.find({static_cast<int>(r), static_cast<int>(c)});
      out += " " + (it == at.end() ? std::string("·") : Glyph(*it->second));
    }
    out += "\n";
  }
  if (snapshot.neighborhood) {
    out += "neighborhood of " + snapshot.neighborhood->center.str() + ":\n";
    for (const Neighbor &n : snapshot.neighborhood->neighbors) {
      out += "  " + n.relation +
             (n.direction == NeighborDirection::kOut ? " -> " : " <- ") +
             n.other.str() + "\n";
    }
  }
  return out;
}

}  // namespace kbmatrix
