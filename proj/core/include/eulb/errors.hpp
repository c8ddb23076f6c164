// Copyright 2026 The eulb Authors
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
#include <utility>

namespace eulb {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (negative time,
/// probability outside [0, 1], non-Hermitian input to an eigensolver, ...).
class DomainError : public Error {
   public:
    using Error::Error;
};

/// A matrix failed the density-matrix checks (Hermiticity or unit trace).
class InvalidStateError : public Error {
   public:
    using Error::Error;
};

/// A spectrum has an eigenvalue below the positivity tolerance.
class PositivityError : public InvalidStateError {
   public:
    using InvalidStateError::InvalidStateError;
};

/// Amplitude outside [-1, 1]: the decay map would not be completely positive.
class ChannelError : public Error {
   public:
    using Error::Error;
};

/// An operation that is only meaningful in one dynamical regime was called
/// in the other.
class RegimeError : public Error {
   public:
    using Error::Error;
};

class NumericalError : public Error {
   public:
    using Error::Error;
};

/// Malformed configuration text. `line()` is 1-based.
class ParseError : public Error {
   public:
    ParseError(int line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

   private:
    int line_;
};

/// A configuration value is well-formed but out of range.
class ValidationError : public Error {
   public:
    ValidationError(std::string key, const std::string &what)
        : Error("invalid value for '" + key + "': " + what), key_(std::move(key)) {}
    const std::string &key() const noexcept { return key_; }

   private:
    std::string key_;
};

class IoError : public Error {
   public:
    IoError(std::string path, const std::string &what)
        : Error(path + ": " + what), path_(std::move(path)) {}
    const std::string &path() const noexcept { return path_; }

   private:
    std::string path_;
};

}  // namespace eulb
