// Copyright 2026 The dsclust Authors.
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

#ifndef DSCLUST_ERROR_HPP_
#define DSCLUST_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace dsclust {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two sets or pieces of evidence live on frames of different size.
class FrameMismatch : public Error {
 public:
  using Error::Error;
};

// A numeric argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Sequence lengths that must agree do not.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

// A size guard (bitmask width, enumeration budget, overflow) was hit.
class GuardError : public Error {
 public:
  using Error::Error;
};

// Malformed problem file, CSV or command-line input.
class FormatError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A network state was queried for a partition before every row settled.
class NotConverged : public Error {
 public:
  using Error::Error;
};

}  // namespace dsclust

#endif  // DSCLUST_ERROR_HPP_
