// Copyright 2026 The mipt-dqite Authors
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

namespace mipt {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (bad index, bad shape, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A forced projection asked for an outcome with zero Born probability.
class ImpossibleOutcome : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure could not produce a trustworthy result.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Serialized input could not be parsed.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

class VersionMismatch : public MalformedInput {
 public:
  using MalformedInput::MalformedInput;
};

}  // namespace mipt
