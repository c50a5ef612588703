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

#ifndef GROUPCTL_GROUPCTL_HPP_
#define GROUPCTL_GROUPCTL_HPP_

#include "groupctl/core.hpp"
#include "groupctl/domains.hpp"
#include "groupctl/error.hpp"
#include "groupctl/gcai.hpp"
#include "groupctl/generators.hpp"
#include "groupctl/instance_io.hpp"
#include "groupctl/reductions.hpp"
#include "groupctl/rules.hpp"
#include "groupctl/steiner.hpp"

#endif  // GROUPCTL_GROUPCTL_HPP_
