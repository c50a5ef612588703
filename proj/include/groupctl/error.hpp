// Copyright 2026 The groupctl Authors
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

#ifndef GROUPCTL_ERROR_HPP_
#define GROUPCTL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace groupctl {

// Malformed or inconsistent input: out-of-range indices, broken invariants.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size cap (terminal count, brute-force width) was exceeded.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace groupctl

#endif  // GROUPCTL_ERROR_HPP_
