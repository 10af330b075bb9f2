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

#include <algorithm>
#include <tuple>
#include <utility>
#include <vector>

namespace kbmatrix {

namespace {

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

bool IsIdentStart(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool IsIdentChar(char c) { return IsIdentStart(c) || IsDigit(c); }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  KnowledgeBase Parse() {
    KnowledgeBase kb;
    for (;;) {
      SkipSpace();
      if (AtEnd()) break;
      Statement(&kb);
    }
    return kb;
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool LookingAt(std::string_view token) const {
    return text_.substr(pos_, token.size()) == token;
  }

  SourceLocation Locate(std::size_t offset) const {
    // Errors at end of input point at the last character.
    if (offset >= text_.size() && !text_.empty()) offset = text_.size() - 1;
    SourceLocation loc{1, 1};
    for (std::size_t i = 0; i < offset; ++i) {
      if (text_[i] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
    }
    return loc;
  }

  [[noreturn]] void Fail(const std::string &message) const {
    SourceLocation loc = Locate(pos_);
    throw ParseError(loc.line, loc.column, message);
  }

  void SkipSpace() {
    while (!AtEnd()) {
      char c = Peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else if (c == '/' && Peek(1) == '/') {
        while (!AtEnd() && Peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void Expect(std::string_view token) {
    SkipSpace();
    if (!LookingAt(token)) Fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }

  std::string Identifier(const char *what) {
    SkipSpace();
    if (!IsIdentStart(Peek())) Fail(std::string("expected ") + what);
    std::size_t start = pos_;
    while (!AtEnd() && IsIdentChar(Peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  NodeId Id(const char *what) { return NodeId(Identifier(what)); }

  Value ParseValue() {
    SkipSpace();
    char c = Peek();
    if (c == '"') return StringLiteral();
    if (c == '-' || IsDigit(c)) return Number();
    if (IsIdentStart(c)) return Id("value");
    Fail("expected value");
  }

  TextLiteral StringLiteral() {
    ++pos_;  // opening quote
    std::string text;
    for (;;) {
      if (AtEnd() || Peek() == '\n') Fail("unterminated string");
      char c = Peek();
      if (c == '"') {
        ++pos_;
        return TextLiteral{std::move(text)};
      }
      if (c == '\\' && Peek(1) == '"') {
        text += '"';
        pos_ += 2;
        continue;
      }
      text += c;
      ++pos_;
    }
  }

  NumberLiteral Number() {
    std::size_t start = pos_;
    if (Peek() == '-') ++pos_;
    if (!IsDigit(Peek())) Fail("expected digit");
    while (IsDigit(Peek())) ++pos_;
    if (Peek() == '.') {
      ++pos_;
      if (!IsDigit(Peek())) Fail("expected digit");
      while (IsDigit(Peek())) ++pos_;
    }
    return NumberLiteral{std::string(text_.substr(start, pos_ - start))};
  }

  void Statement(KnowledgeBase *kb) {
    SourceLocation at = Locate(pos_);
    NodeId subject = Id("identifier");
    SkipSpace();
    if (LookingAt("::")) {
      pos_ += 2;
      NodeId parent = Id("identifier");
      Expect(".");
      kb->AddFact(SubclassOf{std::move(subject), std::move(parent)}, at);
    } else if (LookingAt(":")) {
      pos_ += 1;
      NodeId cls = Id("identifier");
      Expect(".");
      kb->AddFact(InstanceOf{std::move(subject), std::move(cls)}, at);
    } else if (LookingAt("[")) {
      pos_ += 1;
      // Facts are committed only once the whole statement has parsed.
      std::vector<std::pair<Fact, SourceLocation>> attrs;
      attrs.push_back(Attribute(subject));
      SkipSpace();
      while (LookingAt(";")) {
        ++pos_;
        attrs.push_back(Attribute(subject));
        SkipSpace();
      }
      Expect("]");
      Expect(".");
      for (auto &[fact, loc] : attrs) kb->AddFact(std::move(fact), loc);
    } else {
      Fail("expected '::', ':' or '['");
    }
  }

  std::pair<Fact, SourceLocation> Attribute(const NodeId &subject) {
    SkipSpace();
    SourceLocation at = Locate(pos_);
    std::string name = Identifier("attribute name");
    SkipSpace();
    if (LookingAt("->>")) {
      pos_ += 3;
      Expect("{");
      std::vector<Value> values;
      values.push_back(ParseValue());
      SkipSpace();
      while (LookingAt(",")) {
        ++pos_;
        values.push_back(ParseValue());
        SkipSpace();
      }
      Expect("}");
      return {AttrMulti{subject, std::move(name), std::move(values)}, at};
    }
    if (LookingAt("->")) {
      pos_ += 2;
      return {AttrSingle{subject, std::move(name), ParseValue()}, at};
    }
    if (LookingAt("=>")) {
      pos_ += 2;
      return {MetaSignature{subject, std::move(name), Id("identifier")}, at};
    }
    Fail("expected '->', '->>' or '=>'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Line {
  int kind;
  std::string subject;
  std::string key;
  std::string rest;
  std::string text;
};

Line Render(const Fact &fact) {
  if (const auto *f = std::get_if<SubclassOf>(&fact)) {
    return {0, f->child.str(), f->parent.str(), "",
            f->child.str() + " :: " + f->parent.str() + "."};
  }
  if (const auto *f = std::get_if<InstanceOf>(&fact)) {
    return {1, f->instance.str(), f->cls.str(), "",
            f->instance.str() + " : " + f->cls.str() + "."};
  }
  if (const auto *f = std::get_if<MetaSignature>(&fact)) {
    return {2, f->subject.str(), f->relation, f->range.str(),
            f->subject.str() + "[" + f->relation + " => " + f->range.str() +
                "]."};
  }
  if (const auto *f = std::get_if<AttrSingle>(&fact)) {
    std::string value = RenderValue(f->value);
    return {3, f->subject.str(), f->relation, value,
            f->subject.str() + "[" + f->relation + " -> " + value + "]."};
  }
  const auto &f = std::get<AttrMulti>(fact);
  std::vector<std::string> values;
  for (const Value &v : f.values) values.push_back(RenderValue(v));
  std::sort(values.begin(), values.end());
  std::string joined;
  for (const std::string &v : values) {
    if (!joined.empty()) joined += ", ";
    joined += v;
  }
  return {4, f.subject.str(), f.relation, joined,
          f.subject.str() + "[" + f.relation + " ->> {" + joined + "}]."};
}

}  // namespace

KnowledgeBase ParseKb(std::string_view text) { return Parser(text).Parse(); }

std::string SerializeKb(const KnowledgeBase &kb) {
  std::vector<Line> lines;
  lines.reserve(kb.facts().size());
  for (const Fact &fact : kb.facts()) lines.push_back(Render(fact));
  std::sort(lines.begin(), lines.end(), [](const Line &a, const Line &b) {
    return std::tie(a.kind, a.subject, a.key, a.rest) <
           std::tie(b.kind, b.subject, b.key, b.rest);
  });
  std::string out;
  for (const Line &line : lines) {
    out += line.text;
    out += '\n';
  }
  return out;
}

}  // namespace kbmatrix
