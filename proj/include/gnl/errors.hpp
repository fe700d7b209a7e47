// Copyright 2026 The gnl Authors
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

namespace gnl {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together (lengths, square-ness, party counts).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the range where a construction is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent user input (files, factors, layouts).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A composition plan violates a structural requirement.
class PlanError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed the configured size cap.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gnl
