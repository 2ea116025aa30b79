/* Copyright 2026 fuzmet contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>

#include "fuzmet/verdict.hpp"

namespace fuzmet {

/// Continuous t-norms on [0,1]. Only closed-form, analytically continuous
/// kinds are provided; continuity is not sampled.
enum class TNormKind { Product, Minimum, Lukasiewicz };

/// apply(kind, a, 1) == a exactly; symmetric in (a, b).
/// Throws std::domain_error naming the offending argument when a or b is
/// outside [0,1].
double tnorm_apply(TNormKind kind, double a, double b);

const char* tnorm_name(TNormKind kind);

/// Parses the wire names "product" | "minimum" | "lukasiewicz".
TNormKind tnorm_from_name(const std::string& name);

/// Samples associativity, commutativity, identity and joint monotonicity on
/// the uniform grid {i/(grid_size-1)} at tolerance 1e-12. Fails carries the
/// violating tuple.
Verdict check_tnorm_axioms(TNormKind kind, int grid_size);

}  // namespace fuzmet
