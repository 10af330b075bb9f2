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

// Two-axis adjacency matrix over a forest with expand/collapse state.
//
// Both axes draw from the same forest. Node-level relation edges are lifted
// to occurrences: an edge u -> v is placed at every (row occurrence of u,
// column occurrence of v) as row-to-col, and mirrored at every (row
// occurrence of v, column occurrence of u) as col-to-row. Each pair of
// copies of one node gets an "identity" edge placed the same way.
//
// A visible cell (r, c) is marked
//   Direct         if some placement sits exactly at (r, c);
//   HiddenBelow    otherwise, if some edge placed below (r, c) is not shown
//                  by any visible pair below (r, c);
//   RevealedBelow  otherwise, if edges are placed below (r, c) at all.
// A cell is explicit if any contributing edge was declared in the knowledge
// base, implicit if all of them are inherited or identity edges.

#ifndef KBMATRIX_MATRIX_H_
#define KBMATRIX_MATRIX_H_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kbmatrix/errors.h"
#include "kbmatrix/hierarchy.h"
#include "kbmatrix/kb.h"

namespace kbmatrix {

inline constexpr std::string_view kIdentityRelation = "identity";

enum class Axis { kRows, kCols };
enum class Direction { kRowToCol, kColToRow };
enum class MarkKind { kExplicit, kImplicit };
enum class Visibility { kDirect, kHiddenBelow, kRevealedBelow };

std::string_view AxisName(Axis axis);
std::optional<Axis> ParseAxis(std::string_view name);
std::string_view DirectionName(Direction direction);
std::string_view MarkKindName(MarkKind kind);
std::string_view VisibilityName(Visibility visibility);

// An underlying edge of the view: a relation instance with a node target,
// or an identity link between two copies of a node.
struct ViewEdge {
  std::string relation;
  Origin origin;
  Multiplicity multiplicity;
};

// One placement of a ViewEdge at an occurrence pair. Occurrences are given
// as indices into ViewModel::order.
struct Placement {
  int row;
  int col;
  std::size_t edge;  // index into ViewModel::edges
  Direction direction;
};

// Immutable data shared by every view of one loaded knowledge base.
struct ViewModel {
  KnowledgeBase kb;
  Forest forest;
  std::vector<RelationInstance> relations;  // RelationEdges(kb)
  std::vector<TaxonomicEdge> taxonomy;      // TaxonomicEdges(kb)
  std::vector<ViewEdge> edges;
  std::vector<Placement> placements;

  // Occurrences in forest preorder, with parent index (-1 for roots).
  std::vector<OccurrenceId> order;
  std::vector<int> parent;
  std::map<OccurrenceId, int> index;
};

std::shared_ptr<const ViewModel> MakeViewModel(KnowledgeBase kb, Forest forest);

struct AxisState {
  std::vector<OccurrenceId> visible_roots;
  std::set<OccurrenceId> expanded;
  friend bool operator==(const AxisState &, const AxisState &) = default;
};

struct CellRelation {
  std::string name;
  Direction direction;
  Origin origin;
  bool meta = false;
  friend auto operator<=>(const CellRelation &,
                          const CellRelation &) = default;
};

struct CellMark {
  OccurrenceId row;
  OccurrenceId col;
  MarkKind kind;
  Visibility visibility;
  std::vector<CellRelation> relations;
  std::string tooltip;
  friend bool operator==(const CellMark &, const CellMark &) = default;
};

struct MatrixView {
  std::shared_ptr<const ViewModel> model;
  AxisState rows;
  AxisState cols;
  std::vector<CellMark> cells;  // row-major in visible order
  std::optional<NodeId> selected;

  const AxisState &axis(Axis a) const { return a == Axis::kRows ? rows : cols; }
  AxisState &axis(Axis a) { return a == Axis::kRows ? rows : cols; }

  // Mark at (row, col), or nullptr if the pair is unmarked or not visible.
  const CellMark *Cell(const OccurrenceId &row, const OccurrenceId &col) const;

  friend bool operator==(const MatrixView &a, const MatrixView &b) {
    return a.model == b.model && a.rows == b.rows && a.cols == b.cols &&
           a.cells == b.cells && a.selected == b.selected;
  }
};

// Initial view showing the given roots (all roots when a list is empty),
// nothing expanded. Throws Error "UnknownRoot".
MatrixView NewView(std::shared_ptr<const ViewModel> model,
                   const std::vector<NodeId> &row_roots,
                   const std::vector<NodeId> &col_roots);
MatrixView NewView(const KnowledgeBase &kb, const Forest &forest,
                   const std::vector<NodeId> &row_roots,
                   const std::vector<NodeId> &col_roots);

// Visible occurrences of an axis in depth-first order.
std::vector<OccurrenceId> VisibleOccurrences(const ViewModel &model,
                                             const AxisState &axis);
bool IsVisible(const ViewModel &model, const AxisState &axis,
               const OccurrenceId &occ);
bool IsAncestorOrSelf(const Forest &forest, const OccurrenceId &ancestor,
                      const OccurrenceId &occ);

// Throws "NotVisible" or "NotExpandable". Expanding an expanded occurrence
// returns the view unchanged.
MatrixView Expand(const MatrixView &view, Axis axis, const OccurrenceId &occ);

// Collapses occ and everything below it. Throws "NotVisible".
MatrixView Collapse(const MatrixView &view, Axis axis, const OccurrenceId &occ);

std::vector<CellMark> ComputeCells(const ViewModel &model,
                                   const AxisState &rows,
                                   const AxisState &cols);
inline std::vector<CellMark> ComputeCells(const MatrixView &view) {
  return ComputeCells(*view.model, view.rows, view.cols);
}

// Opens the shallowest edge still hidden below a HiddenBelow cell, ties
// broken by occurrence ids. Throws "NotHidden".
MatrixView Reveal(const MatrixView &view, const OccurrenceId &row,
                  const OccurrenceId &col);

// Collapses both sides of a RevealedBelow cell. Throws "NotRevealed".
MatrixView CollapsePair(const MatrixView &view, const OccurrenceId &row,
                        const OccurrenceId &col);

// Throws "UnknownNode".
MatrixView Select(const MatrixView &view, const NodeId &node);
MatrixView Deselect(const MatrixView &view);

enum class NeighborDirection { kOut, kIn };

struct Neighbor {
  std::string relation;
  NodeId other;
  NeighborDirection direction;
  friend auto operator<=>(const Neighbor &, const Neighbor &) = default;
};

struct NeighborhoodGraph {
  NodeId center;
  std::vector<Neighbor> neighbors;
};

// Taxonomic and node-valued relation edges touching a node, sorted by
// (relation, other). Throws "UnknownNode".
NeighborhoodGraph Neighborhood(const KnowledgeBase &kb, const NodeId &node);

// First line describes how the occurrence hangs in its tree ("subclass of
// b", "root", ...); one further line per attribute of the node whose value
// is a literal or a node outside the forest. Throws "UnknownOccurrence".
std::string NodeTooltip(const KnowledgeBase &kb, const Forest &forest,
                        const OccurrenceId &occ);
std::string NodeTooltip(const ViewModel &model, const OccurrenceId &occ);

}  // namespace kbmatrix

#endif  // KBMATRIX_MATRIX_H_
