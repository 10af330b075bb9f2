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

#ifndef KBMATRIX_TESTS_TESTING_FIXTURES_H_
#define KBMATRIX_TESTS_TESTING_FIXTURES_H_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace kbmatrix::testing {

// Absolute path of a file under tests/ (e.g. "fixtures/fixture1.kb").
inline std::string TestDataPath(const std::string &relative) {
  return std::string(KBMATRIX_TEST_DATA_DIR) + "/" + relative;
}

inline std::string ReadTestData(const std::string &relative) {
  std::ifstream in(TestDataPath(relative), std::ios::binary);
  if (!in) throw std::runtime_error("missing test data " + relative);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline constexpr char kFixture1[] =
    "b :: a.\nc :: a.\nx : b.\ny : c.\nx[knows -> y].\n";
inline constexpr char kFixture2[] = "b :: a.\nb :: c.\nc :: a.\nc :: f.\n";
inline constexpr char kFixture3[] =
    "a[partOf -> d].\nb[partOf -> a].\nc[partOf -> b].\nd[partOf -> c].\n";

}  // namespace kbmatrix::testing

#endif  // KBMATRIX_TESTS_TESTING_FIXTURES_H_
