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

#include "kbmatrix/parser.h"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "testing/fixtures.h"
#include "testing/generators.h"

namespace kbmatrix {
namespace {

using testing::kFixture1;

ParseError ParseFailure(const std::string &text) {
  try {
    ParseKb(text);
  } catch (const ParseError &e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return ParseError(0, 0, "none");
}

// True if (line, column) names a character that exists in text.
bool InBounds(const std::string &text, int line, int column) {
  if (line < 1 || column < 1) return false;
  int current = 1;
  size_t start = 0;
  while (current < line) {
    size_t nl = text.find('\n', start);
    if (nl == std::string::npos) return false;
    start = nl + 1;
    ++current;
  }
  return start + column - 1 < text.size() &&
         text.find('\n', start) >= start + column - 1;
}

TEST(ParseKbTest, SingleSubclassFact) {
  KnowledgeBase kb = ParseKb("b :: a.");
  ASSERT_EQ(kb.facts().size(), 1u);
  EXPECT_EQ(std::get<SubclassOf>(kb.facts()[0]),
            (SubclassOf{NodeId("b"), NodeId("a")}));
  EXPECT_EQ(kb.entities().size(), 2u);
  EXPECT_TRUE(kb.Contains(NodeId("a")));
  EXPECT_TRUE(kb.Contains(NodeId("b")));
}

TEST(ParseKbTest, Fixture1) {
  KnowledgeBase kb = ParseKb(kFixture1);
  ASSERT_EQ(kb.facts().size(), 5u);
  std::vector<std::string> ids;
  for (const auto &[id, e] : kb.entities()) ids.push_back(id.str());
  EXPECT_EQ(ids, (std::vector<std::string>{"a", "b", "c", "x", "y"}));
  EXPECT_EQ(std::get<AttrSingle>(kb.facts()[4]),
            (AttrSingle{NodeId("x"), "knows", NodeId("y")}));
}

TEST(ParseKbTest, FixtureFilesMatchInlineCopies) {
  EXPECT_EQ(testing::ReadTestData("fixtures/fixture1.kb"), testing::kFixture1);
  EXPECT_EQ(testing::ReadTestData("fixtures/fixture2.kb"), testing::kFixture2);
  EXPECT_EQ(testing::ReadTestData("fixtures/fixture3.kb"), testing::kFixture3);
}

TEST(ParseKbTest, AllValueForms) {
  KnowledgeBase kb = ParseKb(
      "s[t -> \"say \\\"hi\\\"\"; n -> -3.25; m ->> {1, b, \"c\"}; "
      "r => k].");
  ASSERT_EQ(kb.facts().size(), 4u);
  EXPECT_EQ(std::get<AttrSingle>(kb.facts()[0]).value,
            Value(TextLiteral{"say \"hi\""}));
  EXPECT_EQ(std::get<AttrSingle>(kb.facts()[1]).value,
            Value(NumberLiteral{"-3.25"}));
  EXPECT_EQ(std::get<AttrMulti>(kb.facts()[2]).values,
            (std::vector<Value>{NumberLiteral{"1"}, NodeId("b"),
                                TextLiteral{"c"}}));
  EXPECT_EQ(std::get<MetaSignature>(kb.facts()[3]),
            (MetaSignature{NodeId("s"), "r", NodeId("k")}));
}

TEST(ParseKbTest, CommentsAndWhitespace) {
  KnowledgeBase kb =
      ParseKb("// header\r\nb\t::\n a. // trailing\n\n  x:b.// end");
  EXPECT_EQ(kb.facts().size(), 2u);
}

TEST(ParseKbTest, EmptyInput) {
  EXPECT_TRUE(ParseKb("").facts().empty());
  EXPECT_TRUE(ParseKb("  // only a comment\n").facts().empty());
}

TEST(ParseKbTest, MissingValue) {
  ParseError e = ParseFailure("x[knows -> ].");
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.column(), 12);
  EXPECT_EQ(e.Located(), "1:12: expected value");
}

struct ErrorCase {
  const char *text;
  int line;
  int column;
  const char *message;
};

TEST(ParseKbTest, ErrorsPointAtFirstOffendingCharacter) {
  const ErrorCase cases[] = {
      {"b :: a", 1, 6, "expected '.'"},
      {"b :: a.\n1 :: c.", 2, 1, "expected identifier"},
      {"b = a.", 1, 3, "expected '::', ':' or '['"},
      {"x[r -> \"open\n].", 1, 13, "unterminated string"},
      {"x[r -> -].", 1, 9, "expected digit"},
      {"x[r -> 1.].", 1, 10, "expected digit"},
      {"x[r <- 1].", 1, 5, "expected '->', '->>' or '=>'"},
      {"x[r ->> 1].", 1, 9, "expected '{'"},
      {"x[r ->> {1 2}].", 1, 12, "expected '}'"},
      {"x[r => \"s\"].", 1, 8, "expected identifier"},
      {"x[; r -> 1].", 1, 3, "expected attribute name"},
      {"x[r -> 1].\nx[", 2, 2, "expected attribute name"},
  };
  for (const ErrorCase &c : cases) {
    ParseError e = ParseFailure(c.text);
    EXPECT_EQ(e.line(), c.line) << c.text;
    EXPECT_EQ(e.column(), c.column) << c.text;
    EXPECT_EQ(std::string(e.what()), c.message) << c.text;
  }
}

TEST(ParseKbTest, FailedStatementAddsNoFacts) {
  EXPECT_THROW(ParseKb("x[a -> 1; b -> ]."), ParseError);
}

TEST(SerializeKbTest, EmptyKb) { EXPECT_EQ(SerializeKb(KnowledgeBase()), ""); }

TEST(SerializeKbTest, MultiValuesSorted) {
  KnowledgeBase kb;
  kb.AddFact(AttrMulti{NodeId("s"), "rel", {NodeId("v2"), NodeId("v1")}});
  EXPECT_EQ(SerializeKb(kb), "s[rel ->> {v1, v2}].\n");
}

TEST(SerializeKbTest, CanonicalStatementOrder) {
  KnowledgeBase kb = ParseKb(
      "z[m ->> {2, 1}]. a[s -> \"q\\\"\"]. b[r => t]. y : k. c :: d. "
      "a :: b.");
  EXPECT_EQ(SerializeKb(kb),
            "a :: b.\n"
            "c :: d.\n"
            "y : k.\n"
            "b[r => t].\n"
            "a[s -> \"q\\\"\"].\n"
            "z[m ->> {1, 2}].\n");
}

TEST(SerializeKbTest, Fixture1RoundTrip) {
  KnowledgeBase kb = ParseKb(kFixture1);
  EXPECT_TRUE(StructurallyEqual(ParseKb(SerializeKb(kb)), kb));
  EXPECT_EQ(SerializeKb(kb), kFixture1);
}

TEST(ParserProperty, RoundTripPreservesStructure) {
  testing::Rng rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string text = testing::RandomKbText(rng);
    KnowledgeBase kb = ParseKb(text);
    EXPECT_TRUE(StructurallyEqual(ParseKb(SerializeKb(kb)), kb)) << text;
  }
}

TEST(ParserProperty, SerializeIsIdempotent) {
  testing::Rng rng(202);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string once = SerializeKb(ParseKb(testing::RandomKbText(rng)));
    EXPECT_EQ(SerializeKb(ParseKb(once)), once);
  }
}

// Property: corrupting valid text either still parses or fails at a
// position inside the input.
TEST(ParserProperty, ErrorLocationsStayInBounds) {
  testing::Rng rng(303);
  const std::string junk = "[]{}.;,:=>-\"/ \nab19";
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::string text = testing::RandomKbText(rng);
    const int edits = testing::Uniform(rng, 1, 3);
    for (int e = 0; e < edits; ++e) {
      const int at = testing::Uniform(rng, 0, static_cast<int>(text.size()));
      if (!text.empty() && testing::Chance(rng, 0.5)) {
        text.erase(std::min<size_t>(at, text.size() - 1), 1);
      } else {
        text.insert(text.begin() + at,
                    junk[testing::Uniform(rng, 0, junk.size() - 1)]);
      }
    }
    try {
      ParseKb(text);
    } catch (const ParseError &e) {
      ++failures;
      EXPECT_TRUE(InBounds(text, e.line(), e.column()))
          << e.Located() << " in:\n" << text;
    }
  }
  EXPECT_GT(failures, 100);
}

}  // namespace
}  // namespace kbmatrix
