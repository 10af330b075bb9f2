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

// In-memory knowledge base model: entities, facts, validation and the
// resolution of inherited attributes into a flat list of relation instances.

#ifndef KBMATRIX_KB_H_
#define KBMATRIX_KB_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace kbmatrix {

// Name of the reserved attribute that forms part-of hierarchies.
inline constexpr std::string_view kPartOf = "partOf";

// Returns true if text matches [A-Za-z_][A-Za-z0-9_]*.
bool IsIdentifier(std::string_view text);

// Identifier of a node in the knowledge base. Case-sensitive, compared
// byte-wise.
class NodeId {
 public:
  // Throws std::invalid_argument if text is not an identifier.
  explicit NodeId(std::string text);

  const std::string &str() const { return value_; }

  friend bool operator==(const NodeId &, const NodeId &) = default;
  friend std::strong_ordering operator<=>(const NodeId &a, const NodeId &b) {
    return a.value_.compare(b.value_) <=> 0;
  }

 private:
  std::string value_;
};

// String literal. The text holds the unescaped characters; it never contains
// a newline and never ends in a backslash (neither can be written in a file).
struct TextLiteral {
  std::string text;
  friend auto operator<=>(const TextLiteral &, const TextLiteral &) = default;
};

// Decimal number kept exactly as written, e.g. "-3.50".
struct NumberLiteral {
  std::string text;
  friend auto operator<=>(const NumberLiteral &, const NumberLiteral &) =
      default;
};

using Value = std::variant<NodeId, TextLiteral, NumberLiteral>;

// Renders a value in its source form: identifiers bare, strings quoted with
// embedded quotes escaped, numbers as written.
std::string RenderValue(const Value &value);

// Returns the node a value refers to, or nullptr for literals.
const NodeId *AsNode(const Value &value);

struct SubclassOf {
  NodeId child;
  NodeId parent;
  friend auto operator<=>(const SubclassOf &, const SubclassOf &) = default;
};

struct InstanceOf {
  NodeId instance;
  NodeId cls;
  friend auto operator<=>(const InstanceOf &, const InstanceOf &) = default;
};

struct AttrSingle {
  NodeId subject;
  std::string relation;
  Value value;
  friend auto operator<=>(const AttrSingle &, const AttrSingle &) = default;
};

// Multi-valued attribute; values is never empty.
struct AttrMulti {
  NodeId subject;
  std::string relation;
  std::vector<Value> values;
  friend auto operator<=>(const AttrMulti &, const AttrMulti &) = default;
};

// Class-level signature `subject[relation => range]`.
struct MetaSignature {
  NodeId subject;
  std::string relation;
  NodeId range;
  friend auto operator<=>(const MetaSignature &, const MetaSignature &) =
      default;
};

using Fact =
    std::variant<SubclassOf, InstanceOf, AttrSingle, AttrMulti, MetaSignature>;

// Subject of a fact: the child, the instance or the framed node.
const NodeId &FactSubject(const Fact &fact);

struct SourceLocation {
  int line = 0;
  int column = 0;
  friend bool operator==(const SourceLocation &,
                         const SourceLocation &) = default;
};

struct Entity {
  NodeId id;
  bool is_class = false;
  bool is_instance = false;
  // True if the id is the subject of at least one statement.
  bool declared = false;
};

// A parsed knowledge base. Facts keep source order; every id mentioned by a
// fact has an entity.
class KnowledgeBase {
 public:
  // Appends a fact and creates or updates the entities it mentions.
  void AddFact(Fact fact, std::optional<SourceLocation> location = {});

  const std::map<NodeId, Entity> &entities() const { return entities_; }
  const std::vector<Fact> &facts() const { return facts_; }

  // Source location of fact i, if it came from a parsed file.
  std::optional<SourceLocation> location(std::size_t i) const;

  const Entity *FindEntity(const NodeId &id) const;
  bool Contains(const NodeId &id) const { return FindEntity(id) != nullptr; }

 private:
  Entity &Touch(const NodeId &id);

  std::map<NodeId, Entity> entities_;
  std::vector<Fact> facts_;
  std::vector<std::optional<SourceLocation>> locations_;
};

// Compares two knowledge bases as sets of statements: fact order and the
// order of values inside multi-valued attributes are ignored, multiplicities
// are not.
bool StructurallyEqual(const KnowledgeBase &a, const KnowledgeBase &b);

enum class DiagnosticCode { kConflictSingleValued, kSelfTaxonomicEdge,
                            kMetaOnNonClass };
enum class Severity { kWarning, kError };

struct Diagnostic {
  DiagnosticCode code;
  Severity severity;
  std::string message;
  std::size_t fact_index;
};

std::string_view DiagnosticCodeName(DiagnosticCode code);

// Returns every diagnostic for the knowledge base, in fact order. Only
// kConflictSingleValued is an error.
std::vector<Diagnostic> Validate(const KnowledgeBase &kb);

bool HasErrors(const std::vector<Diagnostic> &diagnostics);

enum class Origin { kDeclared, kInherited, kIdentity };
enum class Multiplicity { kSingle, kMulti, kMeta };

std::string_view OriginName(Origin origin);
std::string_view MultiplicityName(Multiplicity multiplicity);

// One resolved, directed relationship.
struct RelationInstance {
  NodeId source;
  std::string relation;
  Value target;
  Origin origin;
  Multiplicity multiplicity;

  friend bool operator==(const RelationInstance &,
                         const RelationInstance &) = default;
};

// Total order used for every relation list: source, relation, rendered
// target, then origin and multiplicity.
bool RelationLess(const RelationInstance &a, const RelationInstance &b);

// Attributes that instances inherit from their classes and superclasses.
// The nearest declaring class wins; ties at equal depth go to the
// lexicographically smallest class. A relation declared on the instance
// itself is never inherited. partOf does not inherit.
std::vector<RelationInstance> ResolveInherited(const KnowledgeBase &kb);

// Declared attribute and signature edges (partOf excluded) plus inherited
// ones, sorted with RelationLess.
std::vector<RelationInstance> RelationEdges(const KnowledgeBase &kb);

}  // namespace kbmatrix

#endif  // KBMATRIX_KB_H_
