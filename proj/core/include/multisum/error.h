// Copyright 2026 The multisum Authors
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

#ifndef MULTISUM_ERROR_H_
#define MULTISUM_ERROR_H_

#include <stdexcept>
#include <string>

namespace multisum {

// Base class for every error raised by the library. The CLI maps the
// concrete subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: manifests, feature files, configuration
// values, shape mismatches between arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

// Numerical failure inside a solver (non-finite iterate, objective increase
// beyond the permitted slack).
class SolverError : public Error {
 public:
  using Error::Error;
};

// Filesystem failure while reading or writing an artifact.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace multisum

#endif  // MULTISUM_ERROR_H_
