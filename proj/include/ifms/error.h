// Copyright 2026 The ifms Authors
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

#ifndef IFMS_ERROR_H_
#define IFMS_ERROR_H_

#include <stdexcept>
#include <string>

namespace ifms {

// Base of every error the library throws. Callers that only care about
// "bad input vs. bug" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An input document does not match the expected schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// A construction was rejected because it fails one of its defining axioms on
// the validation sample. The message carries the witness.
class AxiomError : public Error {
 public:
  using Error::Error;
};

// A value is undefined at the requested point (off a tabulated grid, or a
// construction that has no value there).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ifms

#endif  // IFMS_ERROR_H_
