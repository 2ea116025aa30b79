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

#include <stdexcept>

#include <limits>

#include "fuzmet/classify.hpp"

using namespace fuzmet;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

SpaceSpec stationary_space() {
  return make_space(Family::StationaryRatio,
                    DomainSpec{Interval{0.0, kInf, true, true}});
}

SpaceSpec standard_space() {
  return make_space(Family::Standard,
                    DomainSpec{Interval{-kInf, kInf, true, true}});
}

SequenceSpec formula(const std::string& s) {
  return SequenceSpec{Formula{Expr::parse(s)}};
}

}  // namespace

TEST_CASE("sequence term evaluation") {
  SequenceSpec f = formula("1/n");
  CHECK(f.term(4) == doctest::Approx(0.25));

  SequenceSpec il{Interleave{Expr::parse("n"), Expr::parse("n+1/n")}};
  CHECK(il.term(1) == 1.0);                       // a(1)
  CHECK(il.term(2) == 2.0);                       // b(1)
  CHECK(il.term(3) == 2.0);                       // a(2)
  CHECK(il.term(4) == doctest::Approx(2.5));      // b(2)
  CHECK(il.term(5) == 3.0);                       // a(3)

  SequenceSpec ex{Explicit{{1.0, 2.0, 3.0}}};
  CHECK(ex.term(3) == 3.0);
  CHECK_THROWS_AS(ex.term(4), std::out_of_range);
}

TEST_CASE("cauchy: divergent sequences are refuted with a concrete pair") {
  Resolution res;
  Verdict v = cauchy_verdict(standard_space(), formula("n"), res);
  CHECK(v.status == Status::Fails);
  REQUIRE(v.witness.indices.size() == 2);
  CHECK(v.witness.indices[0] < v.witness.indices[1]);
  // replay the witness: the recorded membership really violates 1 - eps
  auto space = standard_space();
  double m = space.membership(v.witness.points[0], v.witness.points[1],
                              v.witness.params[0][1]);
  CHECK(m <= 1.0 - v.witness.params[0][0] + res.tol);
}

TEST_CASE("cauchy: constant sequences hold, slow convergence is inconclusive") {
  Resolution res;
  Verdict c = cauchy_verdict(standard_space(),
                             SequenceSpec{Explicit{std::vector<double>(50, 3.0)}},
                             Resolution{.N = 50});
  CHECK(c.status == Status::Holds);
  // at a coarse resolution no window pair refutes 1/n, but sampling cannot
  // certify Cauchyness either
  Resolution coarse;
  coarse.eps_grid = {0.5};
  coarse.t_grid = {10.0};
  Verdict s = cauchy_verdict(standard_space(), formula("1/n"), coarse);
  CHECK(s.status == Status::Inconclusive);
}

TEST_CASE("pseudo-cauchy: shrinking interleave gap holds with distinct terms") {
  // terms n and n+1/n alternate; the in-pair gap 1/m shrinks to zero
  SequenceSpec il{Interleave{Expr::parse("n"), Expr::parse("n+1/n")}};
  Resolution res;
  res.N = 3000;  // the tightest grid point (eps=0.01, t=0.1) needs 1/m < ~0.001
  Verdict v = pseudo_cauchy_verdict(standard_space(), il, res, true);
  CHECK(v.status == Status::Holds);
}

TEST_CASE("pseudo-cauchy: interleave of two constants needs equal terms") {
  // 1,2,1,2,...: every off-diagonal membership is bounded away from 1
  SequenceSpec il{Interleave{Expr::parse("1"), Expr::parse("2")}};
  Resolution res;
  Verdict lax = pseudo_cauchy_verdict(standard_space(), il, res, false);
  CHECK(lax.status == Status::Holds);  // equal terms at distinct indices
  Verdict strict = pseudo_cauchy_verdict(standard_space(), il, res, true);
  CHECK(strict.status == Status::Fails);
}

TEST_CASE("pseudo-cauchy: reciprocal product with distinct terms is a certified failure") {
  auto rp = make_space(Family::ReciprocalProduct, DomainSpec{PositiveIntegers{}});
  Resolution res;
  Verdict v = pseudo_cauchy_verdict(rp, formula("n"), res, true);
  CHECK(v.status == Status::Fails);
  CHECK(v.note.find("certified") != std::string::npos);
}

TEST_CASE("g-cauchy: stationary ratio sees n as G-Cauchy") {
  Resolution res;
  Verdict v = g_cauchy_verdict(stationary_space(), formula("n"), res);
  CHECK(v.status == Status::Holds);
}

TEST_CASE("g-cauchy: a persistent consecutive gap is a floor failure") {
  Resolution res;
  Verdict v = g_cauchy_verdict(standard_space(), formula("n"), res);
  CHECK(v.status == Status::Fails);

  // interleaved n / n+1/n: the between-pair gap stays near 1, but the
  // alternating near-1 in-pair values keep the uniform floor test from
  // firing, so the honest answer at this resolution is "not Holds"
  SequenceSpec il{Interleave{Expr::parse("n"), Expr::parse("n+1/n")}};
  Verdict w = g_cauchy_verdict(standard_space(), il, res);
  CHECK(w.status != Status::Holds);
}

TEST_CASE("cluster evidence around a genuine limit point") {
  auto space = make_space(Family::Standard,
                          DomainSpec{Interval{0.0, kInf, false, true}});
  Resolution res;
  Verdict v = cluster_evidence(space, formula("1/n"), 0.0, res);
  CHECK(v.status == Status::Holds);
}

TEST_CASE("cluster evidence rejects candidates the tail never approaches") {
  Resolution res;
  Verdict v = cluster_evidence(stationary_space(), formula("n"), 1.0, res);
  CHECK(v.status == Status::Fails);
  CHECK(v.witness.params.size() == 1);
}

TEST_CASE("metric bridge: metric-side and fuzzy-side verdicts agree") {
  Resolution res;
  res.N = 200;
  for (const char* s : {"1/n", "n", "n+1/n", "n/(n+1)", "1/2^n"}) {
    CAPTURE(s);
    Verdict v = metric_bridge_check(MetricKind::Euclidean1D,
                                    DomainSpec{Interval{-kInf, kInf, true, true}},
                                    formula(s), res);
    CHECK(v.status == Status::Holds);
  }
}

TEST_CASE("materialized terms are domain-checked") {
  auto rp = make_space(Family::ReciprocalProduct, DomainSpec{PositiveIntegers{}});
  Resolution res;
  CHECK_THROWS_AS(materialize_terms(formula("1/n"), rp.domain, res),
                  std::domain_error);
}
