// Copyright 2026 The catgate Authors
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

#ifndef CATGATE_CATGATE_HPP
#define CATGATE_CATGATE_HPP

#include "catgate/analysis.hpp"
#include "catgate/config.hpp"
#include "catgate/error.hpp"
#include "catgate/gate.hpp"
#include "catgate/grid.hpp"
#include "catgate/heisenberg.hpp"
#include "catgate/special.hpp"
#include "catgate/states.hpp"

#endif  // CATGATE_CATGATE_HPP
