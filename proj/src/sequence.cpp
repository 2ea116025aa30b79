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

#include "fuzmet/sequence.hpp"

#include <stdexcept>

namespace fuzmet {

double SequenceSpec::term(long long n) const {
  if (n < 1) throw std::out_of_range("sequence index must be >= 1");
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Formula>) {
          return s.expr.eval(n);
        } else if constexpr (std::is_same_v<T, Interleave>) {
          long long m = (n + 1) / 2;
          return (n % 2 == 1) ? s.a.eval(m) : s.b.eval(m);
        } else {
          if (n > static_cast<long long>(s.points.size())) {
            throw std::out_of_range(
                "index " + std::to_string(n) +
                " beyond explicit prefix of length " +
                std::to_string(s.points.size()));
          }
          return s.points[static_cast<size_t>(n - 1)];
        }
      },
      v_);
}

}  // namespace fuzmet
