// Copyright 2026 The ptqa Authors.
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

#ifndef PTQA_ERRORS_HPP_
#define PTQA_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptqa {

// Base for every error raised by the library. Each subclass maps onto one
// failure category so callers (the CLI in particular) can pick exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- knowledge base -------------------------------------------------------

class IndexError : public Error {
 public:
  using Error::Error;
};

class VersionMismatch : public IndexError {
 public:
  using IndexError::IndexError;
};

class CorruptIndex : public IndexError {
 public:
  using IndexError::IndexError;
};

class OutOfStorage : public IndexError {
 public:
  using IndexError::IndexError;
};

class UnknownConcept : public Error {
 public:
  using Error::Error;
};

// --- numerics -------------------------------------------------------------

class NonFiniteInput : public Error {
 public:
  using Error::Error;
};

class InvalidTemperature : public Error {
 public:
  using Error::Error;
};

class TooFewHypotheses : public Error {
 public:
  using Error::Error;
};

// --- interpretation -------------------------------------------------------

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

// --- data -----------------------------------------------------------------

class DataError : public Error {
 public:
  using Error::Error;
};

class MalformedRecord : public DataError {
 public:
  MalformedRecord(std::size_t record, const std::string& what)
      : DataError("record " + std::to_string(record) + ": " + what),
        record_(record) {}
  std::size_t record() const { return record_; }

 private:
  std::size_t record_;
};

class UnknownFormat : public DataError {
 public:
  using DataError::DataError;
};

class MissingGold : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace ptqa

#endif  // PTQA_ERRORS_HPP_
