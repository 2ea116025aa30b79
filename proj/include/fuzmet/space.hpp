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

#include "fuzmet/domain.hpp"
#include "fuzmet/tnorm.hpp"
#include "fuzmet/verdict.hpp"

namespace fuzmet {

enum class MetricKind { Euclidean1D, Discrete };

double metric_eval(MetricKind kind, double x, double y);

/// The built-in fuzzy-metric families. SignedRatio is a deliberately broken
/// family (min/max over signed reals) kept for negative tests of the axiom
/// checker; it is not part of the public catalog.
enum class Family {
  Standard,          // M_d(x,y,t) = t/(t+d(x,y))
  StationaryRatio,   // min{x,y}/max{x,y}
  ShiftedRatio,      // (min{x,y}+t)/(max{x,y}+t)
  PhiRatio,          // 1 if x=y else (min/max)*phi(t)
  PhiProduct,        // 1 if x=y else x*y*phi(t)
  ReciprocalProduct, // 1 if x=y else 1/(x*y)
  SignedRatio,       // broken: min/max without positivity
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);

/// phi(t) = min(t, 1), the piecewise-linear time scale used by the
/// PhiRatio and PhiProduct families.
inline double phi(double t) { return t < 1.0 ? t : 1.0; }

struct SpaceSpec {
  Family family = Family::StationaryRatio;
  MetricKind metric = MetricKind::Euclidean1D;  // Standard only
  DomainSpec domain;
  TNormKind tnorm = TNormKind::Product;

  /// M(x,y,t). Validates domain membership and t > 0; throws
  /// std::domain_error on violation.
  double membership(double x, double y, double t) const;

  /// Formula evaluation without the domain checks. Callers validate points
  /// once and then scan.
  double membership_raw(double x, double y, double t) const;

  void validate_point(double x, const char* what = "point") const;
};

/// Builds a catalog space with its canonical domain and product t-norm.
SpaceSpec make_space(Family family, DomainSpec domain,
                     MetricKind metric = MetricKind::Euclidean1D,
                     TNormKind tnorm = TNormKind::Product);

enum class BallSide { In, Out, Boundary };

const char* to_string(BallSide s);

/// Membership in the open ball B(center, r, t) = {y : M(center,y,t) > 1-r},
/// with a tolerance band of width 2e-9 around the threshold reported as
/// Boundary.
BallSide ball_contains(const SpaceSpec& space, double center, double r,
                       double t, double y, double tol = 1e-9);

/// Randomized check of the fuzzy-metric axioms plus monotonicity in t and an
/// h-halving continuity heuristic. Deterministic for a fixed seed.
Verdict check_gv_axioms(const SpaceSpec& space, int sample_count,
                        unsigned long long seed, double tol);

}  // namespace fuzmet
