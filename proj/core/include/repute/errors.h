// Copyright 2026 The Repute Authors
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

#ifndef REPUTE_ERRORS_H_
#define REPUTE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace repute {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A graph invariant would be broken (self-loop, duplicate edge, undeclared
// endpoint, feedback kind not allowed by the graph mode).
class InvalidGraphError : public Error {
 public:
  using Error::Error;
};

// A node was queried that the graph or ranking does not contain.
class UnknownNodeError : public Error {
 public:
  using Error::Error;
};

// An operation or axiom was applied to a graph of the wrong mode.
class ModeMismatchError : public Error {
 public:
  using Error::Error;
};

// Two objects that must share a node set do not.
class NodeSetMismatchError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration refused because the node count exceeds the cap.
class CapExceededError : public Error {
 public:
  CapExceededError(std::size_t nodes, std::size_t cap)
      : Error("enumeration cap exceeded: " + std::to_string(nodes) +
              " nodes > cap " + std::to_string(cap)),
        nodes_(nodes),
        cap_(cap) {}

  std::size_t nodes() const { return nodes_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t nodes_;
  std::size_t cap_;
};

// Any other violated precondition (empty graph, not strongly connected...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed edge-list or ranking text. `line()` is 1-based.
class ParseError : public Error {
 public:
  enum class Kind {
    kSyntax,
    kSelfLoop,
    kUndeclaredNode,
    kKindMismatch,
    kDuplicateEdge,
    kDuplicateNode,
    kNotDense,
  };

  ParseError(Kind kind, std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message),
        kind_(kind),
        line_(line) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

}  // namespace repute

#endif  // REPUTE_ERRORS_H_
