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
#include <vector>

#include "fuzmet/space.hpp"
#include "fuzmet/verdict.hpp"

namespace fuzmet {

struct CoverSet {
  std::string name;
  std::vector<double> points;
};

/// A named finite cover of the working sample. Point identity is exact.
struct Cover {
  std::vector<CoverSet> sets;
};

/// One singleton set per sample point.
Cover singleton_cover(const std::vector<double>& sample);

/// Whether the (r, t)-ball system refines the cover on the sample: Holds iff
/// every center's ball (In members) fits inside some cover set. A definitive
/// escapee is Fails; Boundary memberships that the fit depends on make the
/// center, and hence the verdict, Inconclusive.
Verdict refinement_check(const SpaceSpec& space,
                         const std::vector<double>& sample, const Cover& cover,
                         double r, double t);

/// Grid scan in lexicographic (r, t) order; Holds at the first refining
/// pair, else Fails-at-resolution with one witness per grid point.
Verdict lebesgue_search(const SpaceSpec& space,
                        const std::vector<double>& sample, const Cover& cover,
                        const std::vector<double>& r_grid,
                        const std::vector<double>& t_grid);

struct EquinormEstimate {
  double sup;  // sample sup: a lower bound for the true sup
  double arg_b;
  double arg_c;
};

/// Exact max of M(b, c, s) over the finite product set. Throws on
/// non-disjoint inputs.
EquinormEstimate equinormality_estimate(const SpaceSpec& space,
                                        const std::vector<double>& set_b,
                                        const std::vector<double>& set_c,
                                        double s);

/// Greedy first-uncovered net: repeatedly promotes the first sample point
/// not yet In any chosen center's (r, t)-ball. Always succeeds on finite
/// samples; deterministic in sample order.
std::vector<double> precompact_net(const SpaceSpec& space,
                                   const std::vector<double>& sample, double r,
                                   double t);

/// Greedy eps-net in a classical metric, same ordering rule. Used to
/// cross-check standard-family nets with eps = t*r/(1-r).
std::vector<double> metric_net(MetricKind metric,
                               const std::vector<double>& sample, double eps);

}  // namespace fuzmet
