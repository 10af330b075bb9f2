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

#include "kbmatrix/hierarchy.h"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "json.hpp"

namespace kbmatrix {

namespace {

char KindLetter(TaxonomicKind kind) {
  switch (kind) {
    case TaxonomicKind::kSubclassOf:
      return 's';
    case TaxonomicKind::kInstanceOf:
      return 'i';
    case TaxonomicKind::kPartOf:
      return 'p';
  }
  return '?';
}

EdgeKind ToEdgeKind(TaxonomicKind kind) {
  switch (kind) {
    case TaxonomicKind::kSubclassOf:
      return EdgeKind::kSubclassOf;
    case TaxonomicKind::kInstanceOf:
      return EdgeKind::kInstanceOf;
    case TaxonomicKind::kPartOf:
      return EdgeKind::kPartOf;
  }
  return EdgeKind::kRoot;
}

using Adjacency = std::map<NodeId, std::vector<NodeId>>;

// Kosaraju over the subgraph induced by `nodes`. Returns the component index
// of every node.
std::map<NodeId, int> StrongComponents(const std::set<NodeId> &nodes,
                                       const Adjacency &down,
                                       const Adjacency &up) {
  auto neighbours = [&](const Adjacency &adj, const NodeId &n) {
    std::vector<NodeId> out;
    if (auto it = adj.find(n); it != adj.end()) {
      for (const NodeId &m : it->second) {
        if (nodes.count(m)) out.push_back(m);
      }
    }
    return out;
  };

  std::vector<NodeId> finished;
  std::set<NodeId> seen;
  for (const NodeId &start : nodes) {
    if (!seen.insert(start).second) continue;
    std::vector<std::pair<NodeId, std::vector<NodeId>>> stack;
    stack.emplace_back(start, neighbours(down, start));
    while (!stack.empty()) {
      auto &[node, pending] = stack.back();
      if (pending.empty()) {
        finished.push_back(node);
        stack.pop_back();
        continue;
      }
      NodeId next = pending.back();
      pending.pop_back();
      if (seen.insert(next).second) {
        stack.emplace_back(next, neighbours(down, next));
      }
    }
  }

  std::map<NodeId, int> component;
  int count = 0;
  for (auto it = finished.rbegin(); it != finished.rend(); ++it) {
    if (component.count(*it)) continue;
    std::vector<NodeId> work = {*it};
    component.emplace(*it, count);
    while (!work.empty()) {
      NodeId n = work.back();
      work.pop_back();
      for (const NodeId &m : neighbours(up, n)) {
        if (component.emplace(m, count).second) work.push_back(m);
      }
    }
    ++count;
  }
  return component;
}

}  // namespace

std::string_view TaxonomicKindName(TaxonomicKind kind) {
  switch (kind) {
    case TaxonomicKind::kSubclassOf:
      return "subclassOf";
    case TaxonomicKind::kInstanceOf:
      return "instanceOf";
    case TaxonomicKind::kPartOf:
      return "partOf";
  }
  return "unknown";
}

std::string_view EdgeKindName(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kRoot:
      return "root";
    case EdgeKind::kSubclassOf:
      return "subclassOf";
    case EdgeKind::kInstanceOf:
      return "instanceOf";
    case EdgeKind::kPartOf:
      return "partOf";
    case EdgeKind::kCycleCopy:
      return "cycleCopy";
  }
  return "unknown";
}

std::vector<TaxonomicEdge> TaxonomicEdges(const KnowledgeBase &kb) {
  std::set<TaxonomicEdge> edges;
  auto part_of = [&](const NodeId &part, const Value &whole) {
    if (const NodeId *id = AsNode(whole)) {
      edges.insert({part, *id, TaxonomicKind::kPartOf});
    }
  };
  for (const Fact &fact : kb.facts()) {
    if (const auto *f = std::get_if<SubclassOf>(&fact)) {
      edges.insert({f->child, f->parent, TaxonomicKind::kSubclassOf});
    } else if (const auto *f = std::get_if<InstanceOf>(&fact)) {
      edges.insert({f->instance, f->cls, TaxonomicKind::kInstanceOf});
    } else if (const auto *f = std::get_if<AttrSingle>(&fact)) {
      if (f->relation == kPartOf) part_of(f->subject, f->value);
    } else if (const auto *f = std::get_if<AttrMulti>(&fact)) {
      if (f->relation != kPartOf) continue;
      for (const Value &v : f->values) part_of(f->subject, v);
    }
  }
  return {edges.begin(), edges.end()};
}

RootSet FindRoots(const std::vector<TaxonomicEdge> &edges,
                  const std::set<NodeId> &all_nodes) {
  std::set<NodeId> nodes = all_nodes;
  Adjacency down;  // parent -> children
  Adjacency up;    // child -> parents
  for (const TaxonomicEdge &e : edges) {
    nodes.insert(e.child);
    nodes.insert(e.parent);
    down[e.parent].push_back(e.child);
    up[e.child].push_back(e.parent);
  }

  RootSet result;
  for (const NodeId &n : nodes) {
    if (!up.count(n)) result.roots.push_back(n);
  }

  std::set<NodeId> reached(result.roots.begin(), result.roots.end());
  std::deque<NodeId> queue(result.roots.begin(), result.roots.end());
  while (!queue.empty()) {
    NodeId n = queue.front();
    queue.pop_front();
    if (auto it = down.find(n); it != down.end()) {
      for (const NodeId &c : it->second) {
        if (reached.insert(c).second) queue.push_back(c);
      }
    }
  }

  std::set<NodeId> unreached;
  for (const NodeId &n : nodes) {
    if (!reached.count(n)) unreached.insert(n);
  }
  if (unreached.empty()) return result;

  std::map<NodeId, int> component = StrongComponents(unreached, down, up);
  std::map<int, std::set<NodeId>> members;
  for (const auto &[n, c] : component) members[c].insert(n);

  for (const auto &[c, group] : members) {
    bool fed_from_outside = false;
    bool cyclic = group.size() >= 2;
    for (const NodeId &n : group) {
      for (const NodeId &p : up[n]) {
        if (p == n) cyclic = true;
        if (component.at(p) != c) fed_from_outside = true;
      }
    }
    if (cyclic && !fed_from_outside) {
      result.cyclic.push_back({group, *group.begin()});
    }
  }
  std::sort(result.cyclic.begin(), result.cyclic.end(),
            [](const CyclicComponent &a, const CyclicComponent &b) {
              return a.break_node < b.break_node;
            });
  return result;
}

const Occurrence *Forest::Find(const OccurrenceId &id) const {
  auto it = occurrences.find(id);
  return it == occurrences.end() ? nullptr : &it->second;
}

const Occurrence &Forest::at(const OccurrenceId &id) const {
  const Occurrence *occ = Find(id);
  if (occ == nullptr) {
    throw Error("UnknownOccurrence", "unknown occurrence '" + id + "'");
  }
  return *occ;
}

Forest UnfoldForest(const KnowledgeBase &kb, std::size_t max_occurrences) {
  const std::vector<TaxonomicEdge> edges = TaxonomicEdges(kb);
  std::set<NodeId> all_nodes;
  for (const auto &[id, entity] : kb.entities()) all_nodes.insert(id);
  const RootSet root_set = FindRoots(edges, all_nodes);

  // Edges are sorted by (child, parent, kind), so each list below comes out
  // ordered by (child, kind).
  std::map<NodeId, std::vector<const TaxonomicEdge *>> children_of;
  for (const TaxonomicEdge &e : edges) children_of[e.parent].push_back(&e);

  std::vector<NodeId> starts = root_set.roots;
  for (const CyclicComponent &c : root_set.cyclic) {
    starts.push_back(c.break_node);
  }
  std::sort(starts.begin(), starts.end());

  Forest forest;
  auto add = [&](Occurrence occ) -> Occurrence & {
    if (forest.occurrences.size() >= max_occurrences) {
      throw OverflowError(forest.occurrences.size() + 1);
    }
    forest.identity[occ.node].insert(occ.id);
    OccurrenceId id = occ.id;
    auto [it, inserted] = forest.occurrences.emplace(id, std::move(occ));
    if (!inserted) throw std::logic_error("duplicate occurrence id " + id);
    return it->second;
  };

  struct Frame {
    Occurrence *occ;
    std::size_t next_child = 0;
  };

  for (const NodeId &start : starts) {
    Occurrence &root = add(Occurrence{start.str(), start, std::nullopt, {},
                                      EdgeKind::kRoot, std::nullopt, 0});
    forest.roots.push_back(root.id);
    std::set<NodeId> on_path = {start};
    std::vector<Frame> stack = {{&root}};
    while (!stack.empty()) {
      Frame &top = stack.back();
      auto it = children_of.find(top.occ->node);
      if (it == children_of.end() || top.next_child >= it->second.size()) {
        on_path.erase(top.occ->node);
        stack.pop_back();
        continue;
      }
      const TaxonomicEdge &edge = *it->second[top.next_child++];
      Occurrence *parent = top.occ;
      const bool closes_cycle = on_path.count(edge.child) > 0;
      OccurrenceId id = parent->id + "/" + edge.child.str() + "!" +
                        (closes_cycle ? 'y' : KindLetter(edge.kind));
      // The same pair linked by several kinds closes the cycle only once.
      if (closes_cycle && forest.occurrences.count(id)) continue;
      Occurrence &child =
          add(Occurrence{id, edge.child, parent->id, {},
                         closes_cycle ? EdgeKind::kCycleCopy
                                      : ToEdgeKind(edge.kind),
                         edge.kind, parent->depth + 1});
      parent->children.push_back(child.id);
      if (!closes_cycle) {
        on_path.insert(edge.child);
        stack.push_back({&child});  // invalidates `top`
      }
    }
  }
  return forest;
}

std::vector<std::pair<OccurrenceId, OccurrenceId>> IdentityPairs(
    const Forest &forest) {
  std::vector<std::pair<OccurrenceId, OccurrenceId>> pairs;
  for (const auto &[node, group] : forest.identity) {
    for (auto a = group.begin(); a != group.end(); ++a) {
      for (auto b = std::next(a); b != group.end(); ++b) {
        pairs.emplace_back(*a, *b);
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

namespace {

template <class Fn>
void WalkPreorder(const Forest &forest, Fn &&fn) {
  std::vector<const Occurrence *> stack;
  for (auto it = forest.roots.rbegin(); it != forest.roots.rend(); ++it) {
    stack.push_back(&forest.at(*it));
  }
  while (!stack.empty()) {
    const Occurrence *occ = stack.back();
    stack.pop_back();
    fn(*occ);
    for (auto it = occ->children.rbegin(); it != occ->children.rend(); ++it) {
      stack.push_back(&forest.at(*it));
    }
  }
}

}  // namespace

std::string ForestToJson(const Forest &forest) {
  using nlohmann::ordered_json;
  ordered_json occurrences = ordered_json::array();
  WalkPreorder(forest, [&](const Occurrence &occ) {
    ordered_json o;
    o["id"] = occ.id;
    o["node"] = occ.node.str();
    o["parent"] = occ.parent ? ordered_json(*occ.parent) : ordered_json();
    o["kind"] = EdgeKindName(occ.edge_kind);
    o["link"] = occ.link ? ordered_json(TaxonomicKindName(*occ.link))
                         : ordered_json();
    o["depth"] = occ.depth;
    o["children"] = occ.children;
    occurrences.push_back(std::move(o));
  });
  ordered_json identity = ordered_json::object();
  for (const auto &[node, group] : forest.identity) {
    identity[node.str()] = std::vector<std::string>(group.begin(), group.end());
  }
  ordered_json doc;
  doc["roots"] = forest.roots;
  doc["occurrences"] = std::move(occurrences);
  doc["identity"] = std::move(identity);
  return doc.dump();
}

std::string ForestToText(const Forest &forest) {
  std::string out;
  WalkPreorder(forest, [&](const Occurrence &occ) {
    out.append(2 * occ.depth, ' ');
    out += occ.node.str();
    if (occ.edge_kind != EdgeKind::kRoot) {
      out += "  (";
      out += EdgeKindName(occ.edge_kind);
      out += ")";
    }
    out += '\n';
  });
  for (const auto &[node, group] : forest.identity) {
    if (group.size() < 2) continue;
    out += "identity " + node.str() + ":";
    for (const OccurrenceId &id : group) out += " " + id;
    out += '\n';
  }
  return out;
}

}  // namespace kbmatrix
