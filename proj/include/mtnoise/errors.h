//
// Copyright 2026 The mtnoise Authors
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
//

#ifndef MTNOISE_ERRORS_H_
#define MTNOISE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace mtnoise {

// Root of every error raised by the library. The CLI maps the three direct
// subclasses onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters: bad profile, out-of-range sample size, bad tag token.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Problems with input data or files.
class DataError : public Error {
 public:
  using Error::Error;
};

class IoError : public DataError {
 public:
  using DataError::DataError;
};

class AlignmentError : public DataError {
 public:
  using DataError::DataError;
};

class EncodingError : public DataError {
 public:
  using DataError::DataError;
};

class TagCollisionError : public DataError {
 public:
  using DataError::DataError;
};

// Translator transport failed after its retries were exhausted.
class TransportError : public Error {
 public:
  using Error::Error;
};

// The translator answered, but with the wrong number of sentences or an
// unparseable body.
class MalformedResponseError : public TransportError {
 public:
  using TransportError::TransportError;
};

}  // namespace mtnoise

#endif  // MTNOISE_ERRORS_H_
