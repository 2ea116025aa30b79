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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace fuzmet {

enum class Status { Holds, Fails, Inconclusive };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::Fails: return "Fails";
    default: return "Inconclusive";
  }
}

/// Exit-code convention: Holds=0, Fails=1, Inconclusive=2.
inline int exit_code(Status s) {
  switch (s) {
    case Status::Holds: return 0;
    case Status::Fails: return 1;
    default: return 2;
  }
}

/// Severity order Holds < Inconclusive < Fails (Fails dominates).
inline Status worse(Status a, Status b) {
  auto rank = [](Status s) {
    switch (s) {
      case Status::Holds: return 0;
      case Status::Inconclusive: return 1;
      default: return 2;
    }
  };
  return rank(a) >= rank(b) ? a : b;
}

/// Concrete evidence behind a verdict. Entries are parallel arrays; one
/// logical entry may contribute several indices/points (e.g. a pair).
/// Replaying the membership map on (points, params) must reproduce
/// `values` within the resolution tolerance.
struct Witness {
  std::vector<long long> indices;
  std::vector<double> points;
  std::vector<double> values;
  std::vector<std::array<double, 2>> params;  // (eps,t) or (r,t)

  bool empty() const {
    return indices.empty() && points.empty() && values.empty() &&
           params.empty();
  }
};

struct Verdict {
  Status status = Status::Inconclusive;
  Witness witness;
  std::string note;
};

inline Verdict holds(Witness w, std::string note = "") {
  return Verdict{Status::Holds, std::move(w), std::move(note)};
}
inline Verdict fails(Witness w, std::string note = "") {
  return Verdict{Status::Fails, std::move(w), std::move(note)};
}
inline Verdict inconclusive(std::string reason) {
  return Verdict{Status::Inconclusive, {}, std::move(reason)};
}

}  // namespace fuzmet
