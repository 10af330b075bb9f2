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

#include "kbmatrix/kb.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace kbmatrix {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

bool IsIdentStart(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool IsIdentChar(char c) { return IsIdentStart(c) || (c >= '0' && c <= '9'); }

// Canonical copy of a fact for set comparison.
Fact Normalized(const Fact &fact) {
  if (const auto *multi = std::get_if<AttrMulti>(&fact)) {
    AttrMulti copy = *multi;
    std::sort(copy.values.begin(), copy.values.end());
    return copy;
  }
  return fact;
}

std::string Describe(const NodeId &subject, const std::string &relation) {
  return subject.str() + "[" + relation + "]";
}

}  // namespace

bool IsIdentifier(std::string_view text) {
  if (text.empty() || !IsIdentStart(text.front())) return false;
  return std::all_of(text.begin() + 1, text.end(), IsIdentChar);
}

NodeId::NodeId(std::string text) : value_(std::move(text)) {
  if (!IsIdentifier(value_)) {
    throw std::invalid_argument("invalid node id '" + value_ + "'");
  }
}

std::string RenderValue(const Value &value) {
  return std::visit(
      Overloaded{
          [](const NodeId &id) { return id.str(); },
          [](const TextLiteral &lit) {
            std::string out = "\"";
            for (char c : lit.text) {
              if (c == '"') out += '\\';
              out += c;
            }
            out += '"';
            return out;
          },
          [](const NumberLiteral &num) { return num.text; },
      },
      value);
}

const NodeId *AsNode(const Value &value) { return std::get_if<NodeId>(&value); }

const NodeId &FactSubject(const Fact &fact) {
  return std::visit(
      Overloaded{
          [](const SubclassOf &f) -> const NodeId & { return f.child; },
          [](const InstanceOf &f) -> const NodeId & { return f.instance; },
          [](const AttrSingle &f) -> const NodeId & { return f.subject; },
          [](const AttrMulti &f) -> const NodeId & { return f.subject; },
          [](const MetaSignature &f) -> const NodeId & { return f.subject; },
      },
      fact);
}

Entity &KnowledgeBase::Touch(const NodeId &id) {
  auto it = entities_.find(id);
  if (it == entities_.end()) {
    it = entities_.emplace(id, Entity{id}).first;
  }
  return it->second;
}

void KnowledgeBase::AddFact(Fact fact, std::optional<SourceLocation> location) {
  Touch(FactSubject(fact)).declared = true;
  std::visit(Overloaded{
                 [&](const SubclassOf &f) {
                   Touch(f.child).is_class = true;
                   Touch(f.parent).is_class = true;
                 },
                 [&](const InstanceOf &f) {
                   Touch(f.instance).is_instance = true;
                   Touch(f.cls).is_class = true;
                 },
                 [&](const AttrSingle &f) {
                   if (const NodeId *id = AsNode(f.value)) Touch(*id);
                 },
                 [&](const AttrMulti &f) {
                   for (const Value &v : f.values) {
                     if (const NodeId *id = AsNode(v)) Touch(*id);
                   }
                 },
                 [&](const MetaSignature &f) { Touch(f.range); },
             },
             fact);
  facts_.push_back(std::move(fact));
  locations_.push_back(location);
}

std::optional<SourceLocation> KnowledgeBase::location(std::size_t i) const {
  return i < locations_.size() ? locations_[i] : std::nullopt;
}

const Entity *KnowledgeBase::FindEntity(const NodeId &id) const {
  auto it = entities_.find(id);
  return it == entities_.end() ? nullptr : &it->second;
}

bool StructurallyEqual(const KnowledgeBase &a, const KnowledgeBase &b) {
  if (a.facts().size() != b.facts().size()) return false;
  auto canonical = [](const KnowledgeBase &kb) {
    std::vector<Fact> facts;
    facts.reserve(kb.facts().size());
    for (const Fact &f : kb.facts()) facts.push_back(Normalized(f));
    std::sort(facts.begin(), facts.end());
    return facts;
  };
  if (canonical(a) != canonical(b)) return false;
  if (a.entities().size() != b.entities().size()) return false;
  for (const auto &[id, ea] : a.entities()) {
    const Entity *eb = b.FindEntity(id);
    if (eb == nullptr || ea.is_class != eb->is_class ||
        ea.is_instance != eb->is_instance || ea.declared != eb->declared) {
      return false;
    }
  }
  return true;
}

std::string_view DiagnosticCodeName(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::kConflictSingleValued:
      return "ConflictSingleValued";
    case DiagnosticCode::kSelfTaxonomicEdge:
      return "SelfTaxonomicEdge";
    case DiagnosticCode::kMetaOnNonClass:
      return "MetaOnNonClass";
  }
  return "Unknown";
}

std::vector<Diagnostic> Validate(const KnowledgeBase &kb) {
  std::vector<Diagnostic> out;
  std::map<std::pair<NodeId, std::string>, const Value *> single;
  const auto &facts = kb.facts();
  for (std::size_t i = 0; i < facts.size(); ++i) {
    auto self_edge = [&](const NodeId &id, std::string_view op) {
      out.push_back({DiagnosticCode::kSelfTaxonomicEdge, Severity::kWarning,
                     "self-referential " + std::string(op) + " on " + id.str(),
                     i});
    };
    std::visit(
        Overloaded{
            [&](const SubclassOf &f) {
              if (f.child == f.parent) self_edge(f.child, "subclass-of");
            },
            [&](const InstanceOf &f) {
              if (f.instance == f.cls) self_edge(f.instance, "instance-of");
            },
            [&](const AttrSingle &f) {
              const NodeId *target = AsNode(f.value);
              if (f.relation == kPartOf && target && *target == f.subject) {
                self_edge(f.subject, "part-of");
              }
              auto [it, inserted] =
                  single.emplace(std::pair{f.subject, f.relation}, &f.value);
              if (!inserted && *it->second != f.value) {
                out.push_back({DiagnosticCode::kConflictSingleValued,
                               Severity::kError,
                               "conflicting values for single-valued " +
                                   Describe(f.subject, f.relation) + ": " +
                                   RenderValue(*it->second) + " vs " +
                                   RenderValue(f.value),
                               i});
              }
            },
            [&](const AttrMulti &f) {
              if (f.relation != kPartOf) return;
              for (const Value &v : f.values) {
                const NodeId *target = AsNode(v);
                if (target && *target == f.subject) {
                  self_edge(f.subject, "part-of");
                  break;
                }
              }
            },
            [&](const MetaSignature &f) {
              const Entity *e = kb.FindEntity(f.subject);
              if (e == nullptr || !e->is_class) {
                out.push_back({DiagnosticCode::kMetaOnNonClass,
                               Severity::kWarning,
                               "signature " + Describe(f.subject, f.relation) +
                                   " on " + f.subject.str() +
                                   ", which is not a class",
                               i});
              }
            },
        },
        facts[i]);
  }
  return out;
}

bool HasErrors(const std::vector<Diagnostic> &diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic &d) {
                       return d.severity == Severity::kError;
                     });
}

std::string_view OriginName(Origin origin) {
  switch (origin) {
    case Origin::kDeclared:
      return "declared";
    case Origin::kInherited:
      return "inherited";
    case Origin::kIdentity:
      return "identity";
  }
  return "unknown";
}

std::string_view MultiplicityName(Multiplicity multiplicity) {
  switch (multiplicity) {
    case Multiplicity::kSingle:
      return "single";
    case Multiplicity::kMulti:
      return "multi";
    case Multiplicity::kMeta:
      return "meta";
  }
  return "unknown";
}

bool RelationLess(const RelationInstance &a, const RelationInstance &b) {
  const std::string ra = RenderValue(a.target);
  const std::string rb = RenderValue(b.target);
  return std::tie(a.source, a.relation, ra, a.origin, a.multiplicity) <
         std::tie(b.source, b.relation, rb, b.origin, b.multiplicity);
}

namespace {

struct Declaration {
  Value value;
  Multiplicity multiplicity;
};

// Non-partOf attribute declarations per subject and relation, in fact order.
using DeclarationIndex =
    std::map<NodeId, std::map<std::string, std::vector<Declaration>>>;

DeclarationIndex IndexDeclarations(const KnowledgeBase &kb) {
  DeclarationIndex index;
  for (const Fact &fact : kb.facts()) {
    std::visit(Overloaded{
                   [](const SubclassOf &) {},
                   [](const InstanceOf &) {},
                   [&](const AttrSingle &f) {
                     if (f.relation == kPartOf) return;
                     index[f.subject][f.relation].push_back(
                         {f.value, Multiplicity::kSingle});
                   },
                   [&](const AttrMulti &f) {
                     if (f.relation == kPartOf) return;
                     auto &list = index[f.subject][f.relation];
                     for (const Value &v : f.values) {
                       list.push_back({v, Multiplicity::kMulti});
                     }
                   },
                   [&](const MetaSignature &f) {
                     if (f.relation == kPartOf) return;
                     index[f.subject][f.relation].push_back(
                         {f.range, Multiplicity::kMeta});
                   },
               },
               fact);
  }
  return index;
}

}  // namespace

std::vector<RelationInstance> ResolveInherited(const KnowledgeBase &kb) {
  std::map<NodeId, std::set<NodeId>> classes_of;
  std::map<NodeId, std::set<NodeId>> superclasses;
  for (const Fact &fact : kb.facts()) {
    if (const auto *f = std::get_if<InstanceOf>(&fact)) {
      classes_of[f->instance].insert(f->cls);
    } else if (const auto *f = std::get_if<SubclassOf>(&fact)) {
      superclasses[f->child].insert(f->parent);
    }
  }
  const DeclarationIndex declarations = IndexDeclarations(kb);

  std::vector<RelationInstance> out;
  for (const auto &[instance, direct] : classes_of) {
    std::set<std::string> resolved;
    if (auto own = declarations.find(instance); own != declarations.end()) {
      for (const auto &[relation, unused] : own->second) {
        resolved.insert(relation);
      }
    }
    // Breadth-first over the superclass graph, one depth level at a time.
    // Within a level classes are visited in id order, so the smallest
    // class wins ties.
    std::set<NodeId> visited(direct.begin(), direct.end());
    std::set<NodeId> level = direct;
    while (!level.empty()) {
      for (const NodeId &cls : level) {
        auto decl = declarations.find(cls);
        if (decl == declarations.end()) continue;
        for (const auto &[relation, values] : decl->second) {
          if (!resolved.insert(relation).second) continue;
          for (const Declaration &d : values) {
            out.push_back({instance, relation, d.value, Origin::kInherited,
                           d.multiplicity});
          }
        }
      }
      std::set<NodeId> next;
      for (const NodeId &cls : level) {
        auto sup = superclasses.find(cls);
        if (sup == superclasses.end()) continue;
        for (const NodeId &parent : sup->second) {
          if (visited.insert(parent).second) next.insert(parent);
        }
      }
      level = std::move(next);
    }
  }
  std::sort(out.begin(), out.end(), RelationLess);
  return out;
}

std::vector<RelationInstance> RelationEdges(const KnowledgeBase &kb) {
  std::vector<RelationInstance> out;
  for (const auto &[subject, relations] : IndexDeclarations(kb)) {
    for (const auto &[relation, values] : relations) {
      for (const Declaration &d : values) {
        out.push_back(
            {subject, relation, d.value, Origin::kDeclared, d.multiplicity});
      }
    }
  }
  std::vector<RelationInstance> inherited = ResolveInherited(kb);
  out.insert(out.end(), std::make_move_iterator(inherited.begin()),
             std::make_move_iterator(inherited.end()));
  std::sort(out.begin(), out.end(), RelationLess);
  return out;
}

}  // namespace kbmatrix
