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

#include "fuzmet/resolution.hpp"
#include "fuzmet/sequence.hpp"
#include "fuzmet/space.hpp"
#include "fuzmet/verdict.hpp"

namespace fuzmet {

/// Searches the window [k, N] for a pair violating M(x_m, x_n, t) > 1-eps.
/// Any hit refutes Cauchyness (Fails); an exhausted window is Inconclusive
/// unless every sampled term is identical, in which case Holds.
Verdict cauchy_verdict(const SpaceSpec& space, const SequenceSpec& seq,
                       const Resolution& res);

/// Resolution-bounded fuzzy pseudo-Cauchy check: for each grid (eps, t) and
/// each checkpoint k' on the geometric ladder, a witnessing pair j != n
/// (> k') with M(x_j, x_n, t) > 1-eps must exist. With distinct_terms the
/// pair must also differ as points. An exhausted checkpoint yields
/// Fails-at-resolution; family facts may upgrade that to a certified Fails.
Verdict pseudo_cauchy_verdict(const SpaceSpec& space, const SequenceSpec& seq,
                              const Resolution& res, bool distinct_terms);

/// Consecutive-gap criterion M(x_n, x_{n+1}, t) -> 1. Holds when every grid
/// (eps, t) admits a threshold n0 past which all consecutive values clear
/// 1-eps; Fails on a constant-gap floor (last half-window bounded away from
/// 1 by margin >= 0.1); else Inconclusive.
Verdict g_cauchy_verdict(const SpaceSpec& space, const SequenceSpec& seq,
                         const Resolution& res);

/// Counts window indices with M(x_n, candidate, t) > 1-eps. At least 10 hits
/// for every grid parameter is Holds-level clustering evidence; zero hits in
/// the tail half for some parameter is Fails-at-resolution.
Verdict cluster_evidence(const SpaceSpec& space, const SequenceSpec& seq,
                         double candidate, const Resolution& res);

/// Runs the window pseudo-Cauchy search on the metric side (threshold
/// delta = t*eps/(1-eps)) and on the induced standard fuzzy side (threshold
/// M > 1-eps) and demands identical witness-existence outcomes at every
/// checkpoint, plus the t := 1-eps substitution implication.
Verdict metric_bridge_check(MetricKind metric, const DomainSpec& domain,
                            const SequenceSpec& seq, const Resolution& res);

/// Terms x[1..N] with every term validated against the space domain.
/// Index i of the result holds x_{i} (slot 0 unused).
std::vector<double> materialize_terms(const SequenceSpec& seq,
                                      const DomainSpec& domain,
                                      const Resolution& res);

}  // namespace fuzmet
