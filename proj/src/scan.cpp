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

#include "fuzmet/scan.hpp"

#include <cstdlib>
#include <cstring>

namespace fuzmet {

namespace {

ExecMode default_mode() {
  const char* env = std::getenv("FUZMET_SERIAL");
  if (env && std::strcmp(env, "0") != 0) return ExecMode::Serial;
#ifdef _OPENMP
  return ExecMode::Parallel;
#else
  return ExecMode::Serial;
#endif
}

ExecMode g_mode = default_mode();

}  // namespace

ExecMode exec_mode() { return g_mode; }

void set_exec_mode(ExecMode mode) { g_mode = mode; }

}  // namespace fuzmet
