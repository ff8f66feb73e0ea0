// Copyright 2026 The tacs Authors. All Rights Reserved.
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

#ifndef TACS_ERROR_HPP_
#define TACS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace tacs {

// Malformed input: bad field counts, unknown labels or tags, bad config
// values. The CLI maps this to exit status 2.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A statistical or numerical computation has no well-defined answer:
// rank-deficient design, saturated model, zero residual variance,
// non-finite training loss. Exit status 3.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two sequences that must line up (tags vs. utterances, predictions vs.
// gold) do not. Exit status 4.
class AlignmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tacs

#endif  // TACS_ERROR_HPP_
