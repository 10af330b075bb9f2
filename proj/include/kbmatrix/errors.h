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

#ifndef KBMATRIX_ERRORS_H_
#define KBMATRIX_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace kbmatrix {

// Base of all errors raised by the library. code() is a stable name such as
// "NotVisible" that the service puts on the wire.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string &message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string &code() const { return code_; }

 private:
  std::string code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string &message)
      : Error("ParseError", message), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

  // "line:col: message"
  std::string Located() const {
    return std::to_string(line_) + ":" + std::to_string(column_) + ": " +
           what();
  }

 private:
  int line_;
  int column_;
};

// Raised when unfolding would create more occurrences than allowed.
class OverflowError : public Error {
 public:
  explicit OverflowError(std::size_t count)
      : Error("OverflowError", "hierarchy unfolding reached " +
                                   std::to_string(count) +
                                   " occurrences, over the limit"),
        count_(count) {}

  std::size_t count() const { return count_; }

 private:
  std::size_t count_;
};

}  // namespace kbmatrix

#endif  // KBMATRIX_ERRORS_H_
