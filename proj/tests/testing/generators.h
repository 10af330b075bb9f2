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

// Random knowledge-base text for property tests. Every generator is a pure
// function of the RNG state so failures reproduce from the seed.

#ifndef KBMATRIX_TESTS_TESTING_GENERATORS_H_
#define KBMATRIX_TESTS_TESTING_GENERATORS_H_

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace kbmatrix::testing {

using Rng = std::mt19937;

inline int Uniform(Rng &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool Chance(Rng &rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

template <class T>
const T &Pick(Rng &rng, const std::vector<T> &items) {
  return items[Uniform(rng, 0, static_cast<int>(items.size()) - 1)];
}

inline std::string NodeName(int i) { return "n" + std::to_string(i); }

// Whitespace between tokens, sometimes with a comment.
inline std::string Gap(Rng &rng) {
  switch (Uniform(rng, 0, 5)) {
    case 0:
      return "";
    case 1:
      return "\t";
    case 2:
      return "\n  ";
    case 3:
      return " // note\n";
    default:
      return " ";
  }
}

inline std::string RandomString(Rng &rng) {
  static const std::string alphabet = "ab Z_0\"\\/{}.;";
  std::string text;
  const int len = Uniform(rng, 0, 6);
  for (int i = 0; i < len; ++i) {
    text += alphabet[Uniform(rng, 0, static_cast<int>(alphabet.size()) - 1)];
  }
  // A backslash right before the closing quote would escape it.
  while (!text.empty() && text.back() == '\\') text.pop_back();
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '\\';
    quoted += c;
  }
  return quoted + "\"";
}

inline std::string RandomNumber(Rng &rng) {
  std::string out = Chance(rng, 0.3) ? "-" : "";
  out += std::to_string(Uniform(rng, 0, 120));
  if (Chance(rng, 0.4)) out += "." + std::to_string(Uniform(rng, 0, 99));
  return out;
}

inline std::string RandomValue(Rng &rng, int nodes) {
  switch (Uniform(rng, 0, 3)) {
    case 0:
      return RandomString(rng);
    case 1:
      return RandomNumber(rng);
    default:
      return NodeName(Uniform(rng, 0, nodes - 1));
  }
}

// Syntactically rich KB text: every statement form, frames with several
// attributes, comments and irregular whitespace. May contain conflicting
// single-valued attributes; it is meant for parser tests.
inline std::string RandomKbText(Rng &rng) {
  const int nodes = Uniform(rng, 1, 8);
  const int statements = Uniform(rng, 0, 12);
  static const std::vector<std::string> relations = {"knows", "partOf", "r",
                                                     "color", "owns"};
  std::string text;
  for (int s = 0; s < statements; ++s) {
    const std::string subject = NodeName(Uniform(rng, 0, nodes - 1));
    switch (Uniform(rng, 0, 2)) {
      case 0:
        text += subject + Gap(rng) + "::" + Gap(rng) +
                NodeName(Uniform(rng, 0, nodes - 1));
        break;
      case 1:
        text += subject + Gap(rng) + ":" + Gap(rng) +
                NodeName(Uniform(rng, 0, nodes - 1));
        break;
      default: {
        text += subject + Gap(rng) + "[";
        const int attrs = Uniform(rng, 1, 3);
        for (int a = 0; a < attrs; ++a) {
          if (a > 0) text += Gap(rng) + ";";
          text += Gap(rng) + Pick(rng, relations) + Gap(rng);
          switch (Uniform(rng, 0, 2)) {
            case 0:
              text += "->" + Gap(rng) + RandomValue(rng, nodes);
              break;
            case 1: {
              text += "->>" + Gap(rng) + "{";
              const int values = Uniform(rng, 1, 3);
              for (int v = 0; v < values; ++v) {
                if (v > 0) text += ",";
                text += Gap(rng) + RandomValue(rng, nodes);
              }
              text += Gap(rng) + "}";
              break;
            }
            default:
              text += "=>" + Gap(rng) + NodeName(Uniform(rng, 0, nodes - 1));
          }
        }
        text += Gap(rng) + "]";
      }
    }
    text += Gap(rng) + "." + Gap(rng) + "\n";
  }
  return text;
}

// A strict forest of at most max_nodes nodes: each node has at most one
// parent and no cycles. Returns KB text; every node appears in it.
inline std::string RandomStrictForest(Rng &rng, int max_nodes) {
  const int nodes = Uniform(rng, 1, max_nodes);
  std::string text;
  for (int i = 0; i < nodes; ++i) {
    const std::string name = NodeName(i);
    if (i == 0 || Chance(rng, 0.15)) {
      text += name + "[label -> \"root\"].\n";  // keeps isolated nodes alive
      continue;
    }
    const std::string parent = NodeName(Uniform(rng, 0, i - 1));
    switch (Uniform(rng, 0, 2)) {
      case 0:
        text += name + " :: " + parent + ".\n";
        break;
      case 1:
        text += name + " : " + parent + ".\n";
        break;
      default:
        text += name + "[partOf -> " + parent + "].\n";
    }
  }
  return text;
}

// A single part-of cycle n0 -> n1 -> ... -> n{n-1} -> n0, node names shuffled.
inline std::string PartOfCycle(Rng &rng, int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(NodeName(i));
  std::shuffle(names.begin(), names.end(), rng);
  std::string text;
  for (int i = 0; i < n; ++i) {
    text += names[i] + "[partOf -> " + names[(i + 1) % n] + "].\n";
  }
  return text;
}

// Small KB with a tangled taxonomy (extra parents, occasional cycles) and
// at most max_relations node-valued relation facts. Never conflicts.
inline std::string RandomTangledKb(Rng &rng, int max_nodes, int max_relations) {
  const int nodes = Uniform(rng, 1, max_nodes);
  std::string text;
  for (int i = 1; i < nodes; ++i) {
    if (Chance(rng, 0.2)) continue;
    const std::string kinds[] = {" :: ", " : "};
    text += NodeName(i) + kinds[Uniform(rng, 0, 1)] +
            NodeName(Uniform(rng, 0, i - 1)) + ".\n";
  }
  const int extra = Uniform(rng, 0, 3);
  for (int e = 0; e < extra; ++e) {
    const int child = Uniform(rng, 0, nodes - 1);
    const int parent = Uniform(rng, 0, nodes - 1);
    if (child == parent) continue;
    text += NodeName(child) + "[partOf ->> {" + NodeName(parent) + "}].\n";
  }
  const int relations = Uniform(rng, 0, max_relations);
  static const std::vector<std::string> names = {"knows", "likes", "owns"};
  for (int r = 0; r < relations; ++r) {
    const int source = Uniform(rng, 0, nodes - 1);
    const std::string rel = Pick(rng, names);
    switch (Uniform(rng, 0, 3)) {
      case 0:
        text += NodeName(source) + "[" + rel + " => " +
                NodeName(Uniform(rng, 0, nodes - 1)) + "].\n";
        break;
      case 1:
        text += NodeName(source) + "[note -> \"t\"].\n";
        break;
      default:
        text += NodeName(source) + "[" + rel + " ->> {" +
                NodeName(Uniform(rng, 0, nodes - 1)) + "}].\n";
    }
  }
  if (text.empty()) text = NodeName(0) + "[note -> 1].\n";
  return text;
}

// Class DAG over c0..c{classes-1} (edges only to lower-numbered classes, so
// acyclic), instances i0.. attached to random classes, and random attribute
// declarations on classes and occasionally on instances.
inline std::string RandomClassDag(Rng &rng, int max_classes,
                                  int max_instances) {
  const int classes = Uniform(rng, 1, max_classes);
  const int instances = Uniform(rng, 0, max_instances);
  static const std::vector<std::string> relations = {"a", "b", "c", "d"};
  std::string text;
  for (int c = 1; c < classes; ++c) {
    const int parents = Uniform(rng, 0, 2);
    for (int p = 0; p < parents; ++p) {
      text += "c" + std::to_string(c) + " :: c" +
              std::to_string(Uniform(rng, 0, c - 1)) + ".\n";
    }
  }
  for (int c = 0; c < classes; ++c) {
    const int decls = Uniform(rng, 0, 2);
    for (int d = 0; d < decls; ++d) {
      const std::string cls = "c" + std::to_string(c);
      const std::string &rel = Pick(rng, relations);
      switch (Uniform(rng, 0, 2)) {
        case 0:
          text += cls + "[" + rel + " ->> {v" + std::to_string(c) + ", w" +
                  std::to_string(d) + "}].\n";
          break;
        case 1:
          text += cls + "[" + rel + " => t" + std::to_string(c) + "].\n";
          break;
        default:
          text += cls + "[" + rel + " ->> {v" + std::to_string(c) + "}].\n";
      }
    }
  }
  for (int i = 0; i < instances; ++i) {
    const std::string inst = "i" + std::to_string(i);
    const int memberships = Uniform(rng, 1, 2);
    for (int m = 0; m < memberships; ++m) {
      text += inst + " : c" + std::to_string(Uniform(rng, 0, classes - 1)) +
              ".\n";
    }
    if (Chance(rng, 0.2)) {
      text += inst + "[" + Pick(rng, relations) + " -> own].\n";
    }
  }
  return text;
}

}  // namespace kbmatrix::testing

#endif  // KBMATRIX_TESTS_TESTING_GENERATORS_H_
