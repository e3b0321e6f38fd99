// Copyright 2026 The csdesign Authors. All Rights Reserved.
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

#ifndef CSDESIGN_ERRORS_H_
#define CSDESIGN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace csdesign {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A matrix column has (numerically) zero Euclidean norm.
class ZeroColumnError : public Error {
 public:
  explicit ZeroColumnError(int index, const std::string& context = "")
      : Error("zero column at index " + std::to_string(index) +
              (context.empty() ? "" : " (" + context + ")")),
        index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

class InvalidRankError : public Error {
 public:
  using Error::Error;
};

class NotPsdError : public Error {
 public:
  using Error::Error;
};

class TooFewColumnsError : public Error {
 public:
  using Error::Error;
};

// No off-diagonal Gram magnitude exceeds the requested threshold.
class EmptyAverageError : public Error {
 public:
  using Error::Error;
};

class DegenerateDiagonalError : public Error {
 public:
  explicit DegenerateDiagonalError(int index)
      : Error("degenerate Gram diagonal at index " + std::to_string(index)),
        index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

class DegenerateSpectrumError : public Error {
 public:
  using Error::Error;
};

class SingularSystemError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would exceed its support-count guard.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace csdesign

#endif  // CSDESIGN_ERRORS_H_
