// Copyright 2026 The Authors.
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

#ifndef REGMAX_ERRORS_H_
#define REGMAX_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regmax {

// A caller broke a documented precondition (e.g. e already in S).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exhaustive routines refuse instances above their size cap.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(const std::string& what, std::size_t n, std::size_t cap)
      : std::runtime_error(what + ": n=" + std::to_string(n) +
                           " exceeds cap " + std::to_string(cap)),
        n_(n),
        cap_(cap) {}

  std::size_t n() const { return n_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

// Malformed input file. line() is 1-based, 0 when the error is not tied to
// a specific line (e.g. an empty file).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& msg)
      : std::runtime_error(file + (line ? ":" + std::to_string(line) : "") +
                           ": " + msg),
        file_(file),
        line_(line) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when incremental linear algebra detects a state that cannot come
// from an SPD matrix; callers should rebuild the state from scratch.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace regmax

#endif  // REGMAX_ERRORS_H_
