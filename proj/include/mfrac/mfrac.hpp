// Copyright 2026 The mfrac Authors
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

// Umbrella header.

#pragma once

#include "mfrac/analysis.hpp"
#include "mfrac/bigint.hpp"
#include "mfrac/congruence.hpp"
#include "mfrac/continued_fraction.hpp"
#include "mfrac/dyadic.hpp"
#include "mfrac/farey.hpp"
#include "mfrac/fraction.hpp"
#include "mfrac/generalized.hpp"
#include "mfrac/markov_tree.hpp"
#include "mfrac/quadratic_surd.hpp"
#include "mfrac/slopes.hpp"
#include "mfrac/verify.hpp"
