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

// Reader and writer for .kb files.
//
//   kb        := statement*
//   statement := fact "."
//   fact      := id "::" id                              subclass-of
//              | id ":" id                               instance-of
//              | id "[" attr (";" attr)* "]"             frame
//   attr      := name "->" value                         single-valued
//              | name "->>" "{" value ("," value)* "}"   multi-valued
//              | name "=>" id                            signature
//   value     := id | string | number
//
// Each attribute of a frame becomes one fact. Whitespace is any run of
// spaces, tabs and newlines; `//` starts a comment that runs to the end of
// the line.

#ifndef KBMATRIX_PARSER_H_
#define KBMATRIX_PARSER_H_

#include <string>
#include <string_view>

#include "kbmatrix/errors.h"
#include "kbmatrix/kb.h"

namespace kbmatrix {

// Parses a knowledge base. Throws ParseError at the first syntax error.
KnowledgeBase ParseKb(std::string_view text);

// Canonical text: one statement per line, ordered by statement kind
// (subclass, instance, signature, single, multi), then subject, then
// relation or parent. Values of multi-valued attributes are sorted.
std::string SerializeKb(const KnowledgeBase &kb);

}  // namespace kbmatrix

#endif  // KBMATRIX_PARSER_H_
