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

#include "fuzmet/classify.hpp"
#include "fuzmet/covers.hpp"
#include "fuzmet/sequence.hpp"
#include "fuzmet/space.hpp"

namespace fuzmet {

enum class LebesgueStatus { Lebesgue, NotLebesgue, Unknown };

const char* to_string(LebesgueStatus s);

enum class CertificateKind {
  OffDiagonalSupBound,    // sup of M over distinct pairs stays <= bound
  DivergentPseudoCauchy,  // a distinct-terms pseudo-Cauchy sequence with no
                          // cluster evidence anywhere
  HalfTIdentity,          // M(x,y,1/2) = M(x,y,1)/2 for x != y
  ShrinkingPairGap,       // distinct pairs (a_n, b_n) with M -> 1
  CompactTail,            // tail interval that captures cluster points
};

const char* to_string(CertificateKind k);

/// A family-specific Lebesgue / non-Lebesgue argument reduced to numerically
/// replayable facts. Which fields are meaningful depends on `kind`.
struct Certificate {
  CertificateKind kind = CertificateKind::OffDiagonalSupBound;
  double bound = 0.0;                   // OffDiagonalSupBound
  SequenceSpec seq;                     // DivergentPseudoCauchy
  Expr pair_a, pair_b;                  // ShrinkingPairGap
  double tail_lo = 0.0, tail_hi = 0.0;  // CompactTail
  std::vector<SequenceSpec> tail_seqs;  // CompactTail test sequences
  bool by_analogy = false;              // transcribed from an analogous case
};

struct OracleVerdict {
  LebesgueStatus status = LebesgueStatus::Unknown;
  bool has_certificate = false;
  Certificate certificate;
  std::string source;  // catalog locator
};

/// The catalogued per-family verdicts with their certificates. Spaces that
/// are not a catalogued (family, domain) pair come back Unknown.
OracleVerdict family_lebesgue_oracle(const SpaceSpec& space);

/// Replays the certificate facts numerically; Holds iff every fact replays.
/// Throws std::invalid_argument for an Unknown verdict.
Verdict certificate_check(const SpaceSpec& space, const OracleVerdict& verdict,
                          const Resolution& res);

/// One row of the examples reproduction matrix.
struct CatalogRow {
  std::string name;  // fixture stem, e.g. "reciprocal_product"
  SpaceSpec space;
  bool compact;
  LebesgueStatus lebesgue;
  bool weak_g_complete;
  std::string weak_g_evidence;
};

/// The seven catalogued spaces with their expected classification.
const std::vector<CatalogRow>& catalog();

}  // namespace fuzmet
