// Copyright 2026 The Omega Authors
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

#ifndef OMEGA_OMEGA_HPP
#define OMEGA_OMEGA_HPP

#include "omega/attributes.hpp"
#include "omega/canonical.hpp"
#include "omega/cardinality.hpp"
#include "omega/classify.hpp"
#include "omega/errors.hpp"
#include "omega/hausdorff.hpp"
#include "omega/outer_measure.hpp"
#include "omega/power.hpp"
#include "omega/query.hpp"
#include "omega/verify.hpp"

#endif  // OMEGA_OMEGA_HPP
