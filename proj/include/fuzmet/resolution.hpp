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

#include <stdexcept>
#include <vector>

namespace fuzmet {

/// The finite proxy for the infinite quantifiers: parameter grids, an index
/// window [k, N] and a replay tolerance. Classifiers sweep eps_grid x t_grid.
struct Resolution {
  double eps = 0.1;
  double t = 1.0;
  long long k = 0;
  long long N = 1000;
  double tol = 1e-9;
  std::vector<double> eps_grid{0.5, 0.1, 0.01};
  std::vector<double> t_grid{0.1, 1.0, 10.0};

  void validate() const {
    if (!(eps > 0.0 && eps < 1.0))
      throw std::invalid_argument("eps must lie in (0,1)");
    if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (N <= k) throw std::invalid_argument("N must exceed k");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    for (double e : eps_grid)
      if (!(e > 0.0 && e < 1.0))
        throw std::invalid_argument("eps grid value outside (0,1)");
    for (double tt : t_grid)
      if (!(tt > 0.0)) throw std::invalid_argument("t grid value <= 0");
    if (eps_grid.empty() || t_grid.empty())
      throw std::invalid_argument("parameter grids must be nonempty");
  }

  /// Geometric checkpoint ladder k' in {k, 2k+1, 4k+3, ...} capped at N/2,
  /// standing in for the "for every k" quantifier.
  std::vector<long long> checkpoints() const {
    std::vector<long long> out;
    long long kp = k;
    while (kp <= N / 2) {
      out.push_back(kp);
      kp = 2 * kp + 1;
    }
    if (out.empty()) out.push_back(k);
    return out;
  }
};

}  // namespace fuzmet
