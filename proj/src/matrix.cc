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

#include "kbmatrix/matrix.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace kbmatrix {

std::string_view AxisName(Axis axis) {
  return axis == Axis::kRows ? "rows" : "cols";
}

std::optional<Axis> ParseAxis(std::string_view name) {
  if (name == "rows") return Axis::kRows;
  if (name == "cols") return Axis::kCols;
  return std::nullopt;
}

std::string_view DirectionName(Direction direction) {
  return direction == Direction::kRowToCol ? "rowToCol" : "colToRow";
}

std::string_view MarkKindName(MarkKind kind) {
  return kind == MarkKind::kExplicit ? "explicit" : "implicit";
}

std::string_view VisibilityName(Visibility visibility) {
  switch (visibility) {
    case Visibility::kDirect:
      return "direct";
    case Visibility::kHiddenBelow:
      return "hiddenBelow";
    case Visibility::kRevealedBelow:
      return "revealedBelow";
  }
  return "unknown";
}

std::shared_ptr<const ViewModel> MakeViewModel(KnowledgeBase kb,
                                               Forest forest) {
  auto model = std::make_shared<ViewModel>();
  model->relations = RelationEdges(kb);
  model->taxonomy = TaxonomicEdges(kb);
  model->kb = std::move(kb);
  model->forest = std::move(forest);
  const Forest &f = model->forest;

  std::vector<std::pair<OccurrenceId, int>> stack;
  for (auto it = f.roots.rbegin(); it != f.roots.rend(); ++it) {
    stack.emplace_back(*it, -1);
  }
  while (!stack.empty()) {
    auto [id, parent] = std::move(stack.back());
    stack.pop_back();
    const int index = static_cast<int>(model->order.size());
    model->index.emplace(id, index);
    model->order.push_back(id);
    model->parent.push_back(parent);
    const Occurrence &occ = f.at(id);
    for (auto it = occ.children.rbegin(); it != occ.children.rend(); ++it) {
      stack.emplace_back(*it, index);
    }
  }

  auto occurrences_of = [&](const NodeId &node) {
    std::vector<int> out;
    if (auto it = f.identity.find(node); it != f.identity.end()) {
      for (const OccurrenceId &id : it->second) {
        out.push_back(model->index.at(id));
      }
    }
    return out;
  };
  auto place = [&](const std::vector<int> &from, const std::vector<int> &to,
                   std::size_t edge) {
    for (int u : from) {
      for (int v : to) {
        model->placements.push_back({u, v, edge, Direction::kRowToCol});
        model->placements.push_back({v, u, edge, Direction::kColToRow});
      }
    }
  };

  for (const RelationInstance &rel : model->relations) {
    const NodeId *target = AsNode(rel.target);
    if (target == nullptr) continue;
    const std::size_t edge = model->edges.size();
    model->edges.push_back({rel.relation, rel.origin, rel.multiplicity});
    place(occurrences_of(rel.source), occurrences_of(*target), edge);
  }
  for (const auto &[a, b] : IdentityPairs(f)) {
    const std::size_t edge = model->edges.size();
    model->edges.push_back(
        {std::string(kIdentityRelation), Origin::kIdentity,
         Multiplicity::kSingle});
    place({model->index.at(a)}, {model->index.at(b)}, edge);
  }
  return model;
}

const CellMark *MatrixView::Cell(const OccurrenceId &row,
                                 const OccurrenceId &col) const {
  for (const CellMark &cell : cells) {
    if (cell.row == row && cell.col == col) return &cell;
  }
  return nullptr;
}

namespace {

// Visibility flags of an axis, indexed like ViewModel::order.
std::vector<char> VisibleFlags(const ViewModel &model, const AxisState &axis) {
  std::vector<char> visible(model.order.size(), 0);
  for (std::size_t i = 0; i < model.order.size(); ++i) {
    const int parent = model.parent[i];
    if (parent < 0) {
      visible[i] = std::find(axis.visible_roots.begin(),
                             axis.visible_roots.end(),
                             model.order[i]) != axis.visible_roots.end();
    } else {
      visible[i] =
          visible[parent] && axis.expanded.count(model.order[parent]) > 0;
    }
  }
  return visible;
}

// Position of every visible occurrence in display order, -1 if hidden.
std::vector<int> DisplayPositions(const ViewModel &model,
                                  const AxisState &axis) {
  std::vector<int> position(model.order.size(), -1);
  int next = 0;
  for (const OccurrenceId &id : VisibleOccurrences(model, axis)) {
    position[model.index.at(id)] = next++;
  }
  return position;
}

// Visible ancestors-or-self of occurrence i.
std::vector<int> VisibleChain(const ViewModel &model,
                              const std::vector<char> &visible, int i) {
  std::vector<int> chain;
  for (; i >= 0; i = model.parent[i]) {
    if (visible[i]) chain.push_back(i);
  }
  return chain;
}

struct CellAccumulator {
  std::set<CellRelation> direct;
  std::set<CellRelation> covered;
  bool direct_declared = false;
  bool covered_declared = false;
  std::set<std::size_t> covered_edges;
  std::set<std::size_t> shown_edges;
};

CellRelation RelationOf(const ViewModel &model, const Placement &p) {
  const ViewEdge &edge = model.edges[p.edge];
  return {edge.relation, p.direction, edge.origin,
          edge.multiplicity == Multiplicity::kMeta};
}

std::string CellTooltip(const std::set<CellRelation> &relations) {
  std::vector<std::string> names;
  for (const CellRelation &r : relations) {
    std::string name = r.meta ? r.name + " (meta)" : r.name;
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      names.push_back(std::move(name));
    }
  }
  std::string out;
  for (const std::string &n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

[[noreturn]] void Fail(const char *code, const std::string &message) {
  throw Error(code, message);
}

MatrixView WithCells(MatrixView view) {
  view.cells = ComputeCells(view);
  return view;
}

}  // namespace

std::vector<OccurrenceId> VisibleOccurrences(const ViewModel &model,
                                             const AxisState &axis) {
  std::vector<OccurrenceId> out;
  std::vector<const OccurrenceId *> stack;
  for (auto it = axis.visible_roots.rbegin(); it != axis.visible_roots.rend();
       ++it) {
    stack.push_back(&*it);
  }
  while (!stack.empty()) {
    const OccurrenceId &id = *stack.back();
    stack.pop_back();
    out.push_back(id);
    if (!axis.expanded.count(id)) continue;
    const Occurrence &occ = model.forest.at(id);
    for (auto it = occ.children.rbegin(); it != occ.children.rend(); ++it) {
      stack.push_back(&*it);
    }
  }
  return out;
}

bool IsVisible(const ViewModel &model, const AxisState &axis,
               const OccurrenceId &occ) {
  const Occurrence *o = model.forest.Find(occ);
  if (o == nullptr) return false;
  while (o->parent) {
    if (!axis.expanded.count(*o->parent)) return false;
    o = &model.forest.at(*o->parent);
  }
  return std::find(axis.visible_roots.begin(), axis.visible_roots.end(),
                   o->id) != axis.visible_roots.end();
}

bool IsAncestorOrSelf(const Forest &forest, const OccurrenceId &ancestor,
                      const OccurrenceId &occ) {
  for (const Occurrence *o = forest.Find(occ); o != nullptr;
       o = o->parent ? forest.Find(*o->parent) : nullptr) {
    if (o->id == ancestor) return true;
  }
  return false;
}

std::vector<CellMark> ComputeCells(const ViewModel &model,
                                   const AxisState &rows,
                                   const AxisState &cols) {
  const std::vector<char> row_visible = VisibleFlags(model, rows);
  const std::vector<char> col_visible = VisibleFlags(model, cols);
  const std::vector<int> row_pos = DisplayPositions(model, rows);
  const std::vector<int> col_pos = DisplayPositions(model, cols);

  std::map<std::pair<int, int>, CellAccumulator> acc;
  for (const Placement &p : model.placements) {
    const std::vector<int> row_chain = VisibleChain(model, row_visible, p.row);
    if (row_chain.empty()) continue;
    const std::vector<int> col_chain = VisibleChain(model, col_visible, p.col);
    if (col_chain.empty()) continue;
    const bool shown = row_visible[p.row] && col_visible[p.col];
    const bool declared = model.edges[p.edge].origin == Origin::kDeclared;
    const CellRelation relation = RelationOf(model, p);
    for (int r : row_chain) {
      for (int c : col_chain) {
        CellAccumulator &cell = acc[{row_pos[r], col_pos[c]}];
        if (r == p.row && c == p.col) {
          cell.direct.insert(relation);
          cell.direct_declared |= declared;
        } else {
          cell.covered.insert(relation);
          cell.covered_declared |= declared;
          cell.covered_edges.insert(p.edge);
          if (shown) cell.shown_edges.insert(p.edge);
        }
      }
    }
  }

  const std::vector<OccurrenceId> row_ids = VisibleOccurrences(model, rows);
  const std::vector<OccurrenceId> col_ids = VisibleOccurrences(model, cols);
  std::vector<CellMark> cells;
  cells.reserve(acc.size());
  for (const auto &[pos, cell] : acc) {
    CellMark mark;
    mark.row = row_ids[pos.first];
    mark.col = col_ids[pos.second];
    const std::set<CellRelation> *relations;
    if (!cell.direct.empty()) {
      mark.visibility = Visibility::kDirect;
      mark.kind = cell.direct_declared ? MarkKind::kExplicit
                                       : MarkKind::kImplicit;
      relations = &cell.direct;
    } else {
      const bool all_shown = std::includes(
          cell.shown_edges.begin(), cell.shown_edges.end(),
          cell.covered_edges.begin(), cell.covered_edges.end());
      mark.visibility =
          all_shown ? Visibility::kRevealedBelow : Visibility::kHiddenBelow;
      mark.kind = cell.covered_declared ? MarkKind::kExplicit
                                        : MarkKind::kImplicit;
      relations = &cell.covered;
    }
    mark.relations.assign(relations->begin(), relations->end());
    mark.tooltip = CellTooltip(*relations);
    cells.push_back(std::move(mark));
  }
  return cells;
}

MatrixView NewView(std::shared_ptr<const ViewModel> model,
                   const std::vector<NodeId> &row_roots,
                   const std::vector<NodeId> &col_roots) {
  auto pick = [&](const std::vector<NodeId> &requested) {
    const std::vector<OccurrenceId> &all = model->forest.roots;
    if (requested.empty()) return all;
    std::vector<OccurrenceId> roots;
    for (const NodeId &id : requested) {
      if (std::find(all.begin(), all.end(), id.str()) == all.end()) {
        Fail("UnknownRoot", "'" + id.str() + "' is not a root");
      }
      if (std::find(roots.begin(), roots.end(), id.str()) == roots.end()) {
        roots.push_back(id.str());
      }
    }
    return roots;
  };
  MatrixView view;
  view.rows.visible_roots = pick(row_roots);
  view.cols.visible_roots = pick(col_roots);
  view.model = std::move(model);
  return WithCells(std::move(view));
}

MatrixView NewView(const KnowledgeBase &kb, const Forest &forest,
                   const std::vector<NodeId> &row_roots,
                   const std::vector<NodeId> &col_roots) {
  return NewView(MakeViewModel(kb, forest), row_roots, col_roots);
}

MatrixView Expand(const MatrixView &view, Axis axis, const OccurrenceId &occ) {
  if (!IsVisible(*view.model, view.axis(axis), occ)) {
    Fail("NotVisible", "'" + occ + "' is not visible on " +
                           std::string(AxisName(axis)));
  }
  if (view.model->forest.at(occ).children.empty()) {
    Fail("NotExpandable", "'" + occ + "' has no children");
  }
  if (view.axis(axis).expanded.count(occ)) return view;
  MatrixView next = view;
  next.axis(axis).expanded.insert(occ);
  return WithCells(std::move(next));
}

MatrixView Collapse(const MatrixView &view, Axis axis, const OccurrenceId &occ) {
  if (!IsVisible(*view.model, view.axis(axis), occ)) {
    Fail("NotVisible", "'" + occ + "' is not visible on " +
                           std::string(AxisName(axis)));
  }
  MatrixView next = view;
  std::set<OccurrenceId> &expanded = next.axis(axis).expanded;
  std::erase_if(expanded, [&](const OccurrenceId &id) {
    return IsAncestorOrSelf(view.model->forest, occ, id);
  });
  if (expanded == view.axis(axis).expanded) return view;
  return WithCells(std::move(next));
}

MatrixView Reveal(const MatrixView &view, const OccurrenceId &row,
                  const OccurrenceId &col) {
  const CellMark *cell = view.Cell(row, col);
  if (cell == nullptr || cell->visibility != Visibility::kHiddenBelow) {
    Fail("NotHidden", "cell (" + row + ", " + col + ") is not hidden");
  }
  const ViewModel &model = *view.model;
  const Forest &forest = model.forest;
  const std::vector<char> row_visible = VisibleFlags(model, view.rows);
  const std::vector<char> col_visible = VisibleFlags(model, view.cols);

  // Edges already shown by a visible pair below the cell.
  std::set<std::size_t> shown;
  std::vector<const Placement *> below;
  for (const Placement &p : model.placements) {
    if (!IsAncestorOrSelf(forest, row, model.order[p.row]) ||
        !IsAncestorOrSelf(forest, col, model.order[p.col])) {
      continue;
    }
    below.push_back(&p);
    if (row_visible[p.row] && col_visible[p.col]) shown.insert(p.edge);
  }

  const Placement *best = nullptr;
  auto key = [&](const Placement *p) {
    const OccurrenceId &r = model.order[p->row];
    const OccurrenceId &c = model.order[p->col];
    return std::tuple(forest.at(r).depth + forest.at(c).depth, r, c);
  };
  for (const Placement *p : below) {
    if (shown.count(p->edge)) continue;
    if (best == nullptr || key(p) < key(best)) best = p;
  }

  if (best == nullptr) throw std::logic_error("hidden cell without edges");

  MatrixView next = view;
  auto open_path = [&](AxisState &axis, const OccurrenceId &top, int target) {
    if (model.order[target] == top) return;
    for (int i = model.parent[target]; i >= 0; i = model.parent[i]) {
      axis.expanded.insert(model.order[i]);
      if (model.order[i] == top) break;
    }
  };
  open_path(next.rows, row, best->row);
  open_path(next.cols, col, best->col);
  return WithCells(std::move(next));
}

MatrixView CollapsePair(const MatrixView &view, const OccurrenceId &row,
                        const OccurrenceId &col) {
  const CellMark *cell = view.Cell(row, col);
  if (cell == nullptr || cell->visibility != Visibility::kRevealedBelow) {
    Fail("NotRevealed", "cell (" + row + ", " + col + ") is not revealed");
  }
  return Collapse(Collapse(view, Axis::kRows, row), Axis::kCols, col);
}

MatrixView Select(const MatrixView &view, const NodeId &node) {
  if (!view.model->kb.Contains(node)) {
    Fail("UnknownNode", "unknown node '" + node.str() + "'");
  }
  MatrixView next = view;
  next.selected = node;
  return next;
}

MatrixView Deselect(const MatrixView &view) {
  MatrixView next = view;
  next.selected.reset();
  return next;
}

NeighborhoodGraph Neighborhood(const KnowledgeBase &kb, const NodeId &node) {
  if (!kb.Contains(node)) {
    Fail("UnknownNode", "unknown node '" + node.str() + "'");
  }
  std::set<Neighbor> neighbors;
  for (const TaxonomicEdge &e : TaxonomicEdges(kb)) {
    const std::string name(TaxonomicKindName(e.kind));
    if (e.child == node) {
      neighbors.insert({name, e.parent, NeighborDirection::kOut});
    }
    if (e.parent == node) {
      neighbors.insert({name, e.child, NeighborDirection::kIn});
    }
  }
  for (const RelationInstance &rel : RelationEdges(kb)) {
    const NodeId *target = AsNode(rel.target);
    if (target == nullptr) continue;
    if (rel.source == node) {
      neighbors.insert({rel.relation, *target, NeighborDirection::kOut});
    }
    if (*target == node) {
      neighbors.insert({rel.relation, rel.source, NeighborDirection::kIn});
    }
  }
  return {node, {neighbors.begin(), neighbors.end()}};
}

namespace {

std::string PlacementPhrase(const Forest &forest, const Occurrence &occ) {
  if (!occ.parent) return "root";
  const Occurrence &parent = forest.at(*occ.parent);
  switch (occ.edge_kind) {
    case EdgeKind::kSubclassOf:
      return "subclass of " + parent.node.str();
    case EdgeKind::kInstanceOf:
      return "instance of " + parent.node.str();
    case EdgeKind::kPartOf:
      return "part of " + parent.node.str();
    case EdgeKind::kCycleCopy: {
      // Nodes from the earlier copy of this node down to the parent.
      std::vector<std::string> chain;
      for (const Occurrence *o = &parent;; o = &forest.at(*o->parent)) {
        chain.push_back(o->node.str());
        if (o->node == occ.node || !o->parent) break;
      }
      std::string out = "cycle copy of ";
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        if (it != chain.rbegin()) out += "/";
        out += *it;
      }
      return out;
    }
    case EdgeKind::kRoot:
      break;
  }
  return "root";
}

std::string Tooltip(const Forest &forest,
                    const std::vector<RelationInstance> &relations,
                    const OccurrenceId &id) {
  const Occurrence &occ = forest.at(id);
  std::set<std::string> attributes;
  for (const RelationInstance &rel : relations) {
    if (rel.source != occ.node) continue;
    const NodeId *target = AsNode(rel.target);
    if (target != nullptr && forest.identity.count(*target)) continue;
    std::string line = rel.relation + " = " + RenderValue(rel.target);
    if (rel.origin == Origin::kInherited) line += " (inherited)";
    attributes.insert(std::move(line));
  }
  std::string out = PlacementPhrase(forest, occ);
  for (const std::string &line : attributes) out += "\n" + line;
  return out;
}

}  // namespace

std::string NodeTooltip(const KnowledgeBase &kb, const Forest &forest,
                        const OccurrenceId &occ) {
  forest.at(occ);
  return Tooltip(forest, RelationEdges(kb), occ);
}

std::string NodeTooltip(const ViewModel &model, const OccurrenceId &occ) {
  return Tooltip(model.forest, model.relations, occ);
}

}  // namespace kbmatrix
