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

#include <json.hpp>

#include "fuzmet/covers.hpp"
#include "fuzmet/oracle.hpp"
#include "fuzmet/sequence.hpp"
#include "fuzmet/space.hpp"
#include "fuzmet/verdict.hpp"

namespace fuzmet {

using ordered_json = nlohmann::ordered_json;

/// Malformed spec JSON; `field` names the offending key.
struct SpecFormatError : std::runtime_error {
  SpecFormatError(std::string field_, const std::string& what)
      : std::runtime_error(what), field(std::move(field_)) {}
  std::string field;
};

DomainSpec domain_from_json(const ordered_json& j);
ordered_json domain_to_json(const DomainSpec& d);

SpaceSpec space_from_json(const ordered_json& j);
ordered_json space_to_json(const SpaceSpec& s);

SequenceSpec sequence_from_json(const ordered_json& j);
ordered_json sequence_to_json(const SequenceSpec& s);

Cover cover_from_json(const ordered_json& j);
ordered_json cover_to_json(const Cover& c);

ordered_json witness_to_json(const Witness& w);
ordered_json verdict_to_json(const Verdict& v);
ordered_json oracle_to_json(const OracleVerdict& v);

/// One JSON-lines report object with the fixed key order
/// (check, params, verdict, witness, elapsed_ms).
std::string report_line(const std::string& check, const ordered_json& params,
                        const Verdict& verdict, long long elapsed_ms);

SpaceSpec load_space_file(const std::string& path);
Cover load_cover_file(const std::string& path);

}  // namespace fuzmet
