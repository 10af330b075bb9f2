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

#ifndef KBMATRIX_CLI_H_
#define KBMATRIX_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace kbmatrix {

// Entry point of the kbmatrix tool; args[0] is the program name.
//
//   parse <file> [--check]
//   forest <file> [--format json|text]
//   view <file> [--rows id,...] [--cols id,...] [--expand occ,...]
//               [--format json|text]
//   serve [file] [--port 7421] [--addr 127.0.0.1] [--static dir]
//
// Returns 0 on success, 1 on usage errors and 2 when the knowledge base
// fails to load; load errors go to `err` as "line:col: message".
int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err);

}  // namespace kbmatrix

#endif  // KBMATRIX_CLI_H_
