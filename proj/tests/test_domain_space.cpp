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

#include "fuzmet/domain.hpp"
#include "fuzmet/space.hpp"

using namespace fuzmet;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

DomainSpec positive_reals() { return DomainSpec{Interval{0.0, kInf, true, true}}; }

}  // namespace

TEST_CASE("interval membership respects open/closed endpoints") {
  DomainSpec open{Interval{0.0, 1.0, true, true}};
  CHECK(open.contains(0.5));
  CHECK_FALSE(open.contains(0.0));
  CHECK_FALSE(open.contains(1.0));
  DomainSpec closed{Interval{0.0, 1.0, false, false}};
  CHECK(closed.contains(0.0));
  CHECK(closed.contains(1.0));
  CHECK_FALSE(closed.contains(-0.1));
}

TEST_CASE("positive integers and sequence ranges") {
  DomainSpec ints{PositiveIntegers{}};
  CHECK(ints.contains(5.0));
  CHECK_FALSE(ints.contains(5.5));
  CHECK_FALSE(ints.contains(0.0));
  CHECK_FALSE(ints.contains(-3.0));

  DomainSpec rng{SequenceRange{Expr::parse("n+1/n"), 1}};
  CHECK(rng.contains(2.5));   // n = 2
  CHECK(rng.contains(2.0));   // n = 1
  CHECK_FALSE(rng.contains(2.4));
}

TEST_CASE("union membership") {
  UnionOf u;
  u.parts.emplace_back(SequenceRange{Expr::parse("n"), 1});
  u.parts.emplace_back(SequenceRange{Expr::parse("n+1/n"), 1});
  DomainSpec d{std::move(u)};
  CHECK(d.contains(7.0));
  CHECK(d.contains(7.0 + 1.0 / 7.0));
  CHECK_FALSE(d.contains(7.5));
}

TEST_CASE("sampling is deterministic and stays inside the domain") {
  DomainSpec d = positive_reals();
  auto a = d.sample(100, 1299093);
  auto b = d.sample(100, 1299093);
  CHECK(a == b);
  for (double x : a) CHECK(d.contains(x));
  auto c = d.sample(100, 7);
  CHECK(a != c);
}

TEST_CASE("metric kinds") {
  CHECK(metric_eval(MetricKind::Euclidean1D, 1.0, 4.5) == 3.5);
  CHECK(metric_eval(MetricKind::Discrete, 1.0, 4.5) == 1.0);
  CHECK(metric_eval(MetricKind::Discrete, 2.0, 2.0) == 0.0);
}

TEST_CASE("membership point values per family") {
  auto std_space = make_space(Family::Standard, positive_reals());
  CHECK(std_space.membership(1.0, 2.0, 1.0) == doctest::Approx(0.5));
  CHECK(std_space.membership(1.0, 2.0, 3.0) == doctest::Approx(0.75));
  CHECK(std_space.membership(2.0, 2.0, 0.1) == 1.0);

  auto stat = make_space(Family::StationaryRatio, positive_reals());
  CHECK(stat.membership(2.0, 3.0, 1.0) == doctest::Approx(2.0 / 3.0));
  CHECK(stat.membership(2.0, 3.0, 100.0) == doctest::Approx(2.0 / 3.0));
  CHECK(stat.membership(3.0, 2.0, 1.0) == doctest::Approx(2.0 / 3.0));

  auto shifted = make_space(Family::ShiftedRatio,
                            DomainSpec{Interval{0.0, kInf, false, true}});
  CHECK(shifted.membership(2.0, 3.0, 1.0) == doctest::Approx(0.75));
  CHECK(shifted.membership(0.0, 1.0, 1.0) == doctest::Approx(0.5));

  auto pr = make_space(Family::PhiRatio, positive_reals());
  CHECK(pr.membership(2.0, 3.0, 2.0) == doctest::Approx(2.0 / 3.0));
  CHECK(pr.membership(2.0, 3.0, 0.5) == doctest::Approx(1.0 / 3.0));
  CHECK(pr.membership(2.0, 2.0, 0.5) == 1.0);

  auto pp = make_space(Family::PhiProduct,
                       DomainSpec{Interval{0.0, 1.0, true, true}});
  CHECK(pp.membership(0.5, 0.25, 2.0) == doctest::Approx(0.125));
  CHECK(pp.membership(0.5, 0.25, 0.5) == doctest::Approx(0.0625));
  CHECK(pp.membership(0.5, 0.5, 0.1) == 1.0);

  auto rp = make_space(Family::ReciprocalProduct,
                       DomainSpec{PositiveIntegers{}});
  CHECK(rp.membership(2.0, 3.0, 1.0) == doctest::Approx(1.0 / 6.0));
  CHECK(rp.membership(5.0, 5.0, 1.0) == 1.0);
}

TEST_CASE("membership validates inputs") {
  auto rp = make_space(Family::ReciprocalProduct,
                       DomainSpec{PositiveIntegers{}});
  CHECK_THROWS_AS(rp.membership(2.5, 3.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(rp.membership(2.0, 3.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(rp.membership(2.0, 3.0, -1.0), std::domain_error);
}

TEST_CASE("shifted ratio rejects non-product t-norms") {
  CHECK_THROWS_AS(make_space(Family::ShiftedRatio,
                             DomainSpec{Interval{0.0, kInf, false, true}},
                             MetricKind::Euclidean1D, TNormKind::Minimum),
                  std::invalid_argument);
}

TEST_CASE("family names round-trip") {
  for (auto f : {Family::Standard, Family::StationaryRatio,
                 Family::ShiftedRatio, Family::PhiRatio, Family::PhiProduct,
                 Family::ReciprocalProduct, Family::SignedRatio}) {
    CHECK(family_from_name(family_name(f)) == f);
  }
  CHECK_THROWS_AS(family_from_name("nope"), std::invalid_argument);
}

TEST_CASE("axioms hold for every built-in family at 1000 seeded samples") {
  struct Case {
    Family family;
    DomainSpec domain;
  };
  const Case cases[] = {
      {Family::Standard, positive_reals()},
      {Family::StationaryRatio, positive_reals()},
      {Family::ShiftedRatio, DomainSpec{Interval{0.0, kInf, false, true}}},
      {Family::PhiRatio, positive_reals()},
      {Family::PhiProduct, DomainSpec{Interval{0.0, 1.0, true, true}}},
      {Family::ReciprocalProduct, DomainSpec{PositiveIntegers{}}},
  };
  for (const auto& c : cases) {
    CAPTURE(family_name(c.family));
    auto space = make_space(c.family, c.domain);
    Verdict v = check_gv_axioms(space, 1000, 1299093, 1e-9);
    CHECK(v.status == Status::Holds);
  }
}

TEST_CASE("the signed-ratio family is caught by the axiom checker") {
  auto bad = make_space(Family::SignedRatio,
                        DomainSpec{Interval{-kInf, kInf, true, true}});
  Verdict v = check_gv_axioms(bad, 1000, 1299093, 1e-9);
  CHECK(v.status == Status::Fails);
  CHECK(v.note.find("positivity") != std::string::npos);
}

TEST_CASE("ball sides classify with a boundary band") {
  auto stat = make_space(Family::StationaryRatio, positive_reals());
  // ball around 2 with r = 1/3, t = 1: membership threshold is 2/3
  CHECK(ball_contains(stat, 2.0, 1.0 / 3.0, 1.0, 2.9) == BallSide::In);
  CHECK(ball_contains(stat, 2.0, 1.0 / 3.0, 1.0, 4.0) == BallSide::Out);
  CHECK(ball_contains(stat, 2.0, 1.0 / 3.0, 1.0, 3.0) == BallSide::Boundary);
  CHECK(ball_contains(stat, 2.0, 1.0 / 3.0, 1.0, 2.0) == BallSide::In);
}
