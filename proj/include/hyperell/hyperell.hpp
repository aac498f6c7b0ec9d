// Copyright 2026 The hyperell Authors
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

#ifndef HYPERELL_HYPERELL_HPP_
#define HYPERELL_HYPERELL_HPP_

#include "hyperell/betti.hpp"
#include "hyperell/integer.hpp"
#include "hyperell/linear_series.hpp"
#include "hyperell/polynomial.hpp"
#include "hyperell/resolution_high.hpp"
#include "hyperell/resolution_low.hpp"
#include "hyperell/scroll.hpp"

#endif  // HYPERELL_HYPERELL_HPP_
