// Copyright 2026 The densedp Authors
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

#ifndef DENSEDP_DENSEDP_HPP_
#define DENSEDP_DENSEDP_HPP_

#include "densedp/budget.hpp"
#include "densedp/dp_densest.hpp"
#include "densedp/edge_list.hpp"
#include "densedp/experiment.hpp"
#include "densedp/generators.hpp"
#include "densedp/graph.hpp"
#include "densedp/noise.hpp"
#include "densedp/oracles.hpp"
#include "densedp/peel_structures.hpp"
#include "densedp/prefix_sum.hpp"

#endif  // DENSEDP_DENSEDP_HPP_
