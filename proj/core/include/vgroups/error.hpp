// Copyright 2026 The vgroups Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace vgroups {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (words, braids, presentations, group tables).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Arguments that violate an operation's precondition: ambient or rank
// mismatch, illegal letter family, wrong theory.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured resource limit was hit (word length, letter budget,
// enumeration cap, integer width).
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace vgroups
