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

#include <doctest.h>

#include <cmath>

#include "fuzmet/jsonio.hpp"
#include "fuzmet/scan.hpp"

using namespace fuzmet;

namespace {

struct ModeGuard {
  ExecMode saved = exec_mode();
  ~ModeGuard() { set_exec_mode(saved); }
};

double wavy(long long m, long long n) {
  return std::sin(0.37 * m) * std::cos(0.11 * n);
}

}  // namespace

TEST_CASE("serial and parallel kernels return identical answers") {
  ModeGuard guard;
  auto pred = [](long long m, long long n) { return wavy(m, n) > 0.93; };

  set_exec_mode(ExecMode::Serial);
  auto hit_s = find_first_pair(1, 600, pred);
  auto max_s = max_over_pairs(1, 600, wavy);
  auto rng_s = max_over_range(1, 40000, [](long long i) { return wavy(i, i + 3); });
  auto cnt_s = count_in_range(1, 40000, [](long long i) { return wavy(i, 2 * i) > 0.5; });

  set_exec_mode(ExecMode::Parallel);
  auto hit_p = find_first_pair(1, 600, pred);
  auto max_p = max_over_pairs(1, 600, wavy);
  auto rng_p = max_over_range(1, 40000, [](long long i) { return wavy(i, i + 3); });
  auto cnt_p = count_in_range(1, 40000, [](long long i) { return wavy(i, 2 * i) > 0.5; });

  REQUIRE(hit_s.has_value() == hit_p.has_value());
  if (hit_s) {
    CHECK(hit_s->first == hit_p->first);
    CHECK(hit_s->second == hit_p->second);
  }
  CHECK(max_s.first == max_p.first);
  CHECK(max_s.second == max_p.second);
  CHECK(max_s.value == max_p.value);
  CHECK(rng_s.index == rng_p.index);
  CHECK(rng_s.value == rng_p.value);
  CHECK(cnt_s == cnt_p);
}

TEST_CASE("parallel first-pair matches a left-to-right scan even with many hits") {
  ModeGuard guard;
  auto pred = [](long long m, long long n) { return (m + n) % 7 == 0; };
  set_exec_mode(ExecMode::Serial);
  auto a = find_first_pair(1, 2000, pred);
  set_exec_mode(ExecMode::Parallel);
  auto b = find_first_pair(1, 2000, pred);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->first == b->first);
  CHECK(a->second == b->second);
}

TEST_CASE("space specs round-trip through JSON") {
  ordered_json j = ordered_json::parse(R"({
    "family": "standard",
    "metric": "euclidean",
    "domain": {"kind": "union", "parts": [
      {"kind": "seq_range", "expr": "n", "from": 1},
      {"kind": "interval", "lo": "-inf", "hi": 2.5, "lo_open": true, "hi_open": false}
    ]},
    "tnorm": "product"
  })");
  SpaceSpec s = space_from_json(j);
  ordered_json back = space_to_json(s);
  SpaceSpec again = space_from_json(back);
  CHECK(space_to_json(again) == back);
  CHECK(s.domain.contains(2.5));
  CHECK(s.domain.contains(7.0));
  CHECK_FALSE(s.domain.contains(7.5));
}

TEST_CASE("missing fields name the offending key") {
  try {
    space_from_json(ordered_json::parse(R"({"family": "standard"})"));
    FAIL("expected SpecFormatError");
  } catch (const SpecFormatError& e) {
    CHECK(e.field == "metric");
  }
  try {
    domain_from_json(ordered_json::parse(R"({"kind": "interval", "lo": 0})"));
    FAIL("expected SpecFormatError");
  } catch (const SpecFormatError& e) {
    CHECK(e.field == "hi");
  }
}

TEST_CASE("bad expressions in specs are format errors, not crashes") {
  CHECK_THROWS_AS(
      sequence_from_json(ordered_json::parse(R"({"kind": "formula", "expr": "n+"})")),
      SpecFormatError);
}

TEST_CASE("report lines keep a fixed key order") {
  Verdict v;
  v.status = Status::Holds;
  v.note = "ok";
  ordered_json params;
  params["alpha"] = 1;
  std::string line = report_line("demo", params, v, 17);
  CHECK(line.rfind(R"({"check":"demo","params":{"alpha":1},"verdict":)", 0) == 0);
  CHECK(line.find(R"("elapsed_ms":17})") != std::string::npos);
  CHECK(line.find("witness") < line.find("elapsed_ms"));
}

TEST_CASE("sequence specs round-trip through JSON") {
  for (const char* text :
       {R"({"kind":"formula","expr":"n+1/n"})",
        R"({"kind":"interleave","a":"n","b":"n+1/n"})",
        R"({"kind":"explicit","points":[1.0,2.5,3.0]})"}) {
    ordered_json j = ordered_json::parse(text);
    SequenceSpec s = sequence_from_json(j);
    CHECK(sequence_to_json(sequence_from_json(sequence_to_json(s))) ==
          sequence_to_json(s));
  }
}
