// Copyright 2026 The AnchorSpace Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace anchorspace {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad id, empty list, ...).
class ArgumentError : public Error {
public:
  using Error::Error;
};

/// Random topology generation could not satisfy its constraints.
class GenerationError : public Error {
public:
  using Error::Error;
};

/// The requested distance mode is incompatible with the anchor set.
class ModeError : public Error {
public:
  using Error::Error;
};

/// A coordinate component carried the UNREACHABLE sentinel. The caller
/// should exclude the anchor at `index()` before measuring distances.
class UnreachableComponentError : public Error {
public:
  UnreachableComponentError(std::size_t index)
      : Error("coordinate component " + std::to_string(index) +
              " is UNREACHABLE; exclude that anchor before measuring"),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

/// Scenario or configuration document is inconsistent.
class ConfigError : public Error {
public:
  using Error::Error;
};

} // namespace anchorspace
