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

// Turns the subclass/instance/part-of graph of a knowledge base into a
// forest of strict trees.
//
// Disjoint trees come through unchanged. A node with several parents is
// copied below each of them, so shared subtrees appear once per parent and
// the copies are linked by identity. A cycle is cut where the walk would
// re-enter a node already on the current path: that node is added once more
// as a leaf ("cycle copy"). Cycles that no parentless node reaches get their
// smallest member as an extra root.
//
// Occurrence ids spell out the path from the root: node ids joined by '/',
// each non-root segment suffixed with '!' and the edge letter (s subclass,
// i instance, p part-of, y cycle copy), e.g. "a/b!s/x!i".

#ifndef KBMATRIX_HIERARCHY_H_
#define KBMATRIX_HIERARCHY_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kbmatrix/errors.h"
#include "kbmatrix/kb.h"

namespace kbmatrix {

enum class TaxonomicKind { kSubclassOf, kInstanceOf, kPartOf };

// "subclassOf", "instanceOf" or "partOf".
std::string_view TaxonomicKindName(TaxonomicKind kind);

// child -> parent. A part is the child of its whole.
struct TaxonomicEdge {
  NodeId child;
  NodeId parent;
  TaxonomicKind kind;
  friend auto operator<=>(const TaxonomicEdge &,
                          const TaxonomicEdge &) = default;
};

// One edge per subclass and instance statement and per node value of a
// partOf attribute. Duplicates collapse; sorted by (child, parent, kind).
std::vector<TaxonomicEdge> TaxonomicEdges(const KnowledgeBase &kb);

struct CyclicComponent {
  std::set<NodeId> members;
  NodeId break_node;
};

struct RootSet {
  // Parentless nodes, sorted; includes isolated nodes.
  std::vector<NodeId> roots;
  // Cycles not reachable from any root, ordered by break node.
  std::vector<CyclicComponent> cyclic;
};

// Finds the roots of the hierarchy. Among the strongly connected components
// that no root reaches, only those that nothing else unreachable feeds into
// are reported; every other unreachable node hangs below one of them.
RootSet FindRoots(const std::vector<TaxonomicEdge> &edges,
                  const std::set<NodeId> &all_nodes);

using OccurrenceId = std::string;

enum class EdgeKind { kRoot, kSubclassOf, kInstanceOf, kPartOf, kCycleCopy };

std::string_view EdgeKindName(EdgeKind kind);

struct Occurrence {
  OccurrenceId id;
  NodeId node;
  std::optional<OccurrenceId> parent;
  std::vector<OccurrenceId> children;
  EdgeKind edge_kind;
  // Taxonomic kind of the edge this occurrence was reached through; set for
  // every non-root, including cycle copies.
  std::optional<TaxonomicKind> link;
  int depth = 0;

  friend bool operator==(const Occurrence &, const Occurrence &) = default;
};

struct Forest {
  std::vector<OccurrenceId> roots;
  std::map<OccurrenceId, Occurrence> occurrences;
  std::map<NodeId, std::set<OccurrenceId>> identity;

  const Occurrence *Find(const OccurrenceId &id) const;
  const Occurrence &at(const OccurrenceId &id) const;

  friend bool operator==(const Forest &, const Forest &) = default;
};

inline constexpr std::size_t kDefaultMaxOccurrences = 100000;

// Unfolds the taxonomy into a forest. Roots and cycle break nodes are
// unfolded in id order; children are ordered by (child id, kind). Throws
// OverflowError once more than max_occurrences would be created.
Forest UnfoldForest(const KnowledgeBase &kb,
                    std::size_t max_occurrences = kDefaultMaxOccurrences);

// Every unordered pair of distinct occurrences of the same node, each pair
// ordered and the list sorted.
std::vector<std::pair<OccurrenceId, OccurrenceId>> IdentityPairs(
    const Forest &forest);

// Deterministic renderings used by the CLI and by golden tests.
std::string ForestToJson(const Forest &forest);
std::string ForestToText(const Forest &forest);

}  // namespace kbmatrix

#endif  // KBMATRIX_HIERARCHY_H_
