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

// Acceptance gate: each numbered check prints exactly one pass/fail line.
// The process exits non-zero if any check fails.

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <sys/wait.h>
#include <string>
#include <vector>

#include "fuzmet/classify.hpp"
#include "fuzmet/covers.hpp"
#include "fuzmet/jsonio.hpp"
#include "fuzmet/oracle.hpp"
#include "fuzmet/scan.hpp"

using namespace fuzmet;

namespace {

const double kInf = std::numeric_limits<double>::infinity();
constexpr unsigned long long kSeed = 1299093;

int g_failures = 0;

void report(int number, const std::string& title, bool ok,
            const std::string& detail = "") {
  std::printf("%-4s criterion %2d: %s%s\n", ok ? "PASS" : "FAIL", number,
              title.c_str(),
              detail.empty() ? "" : ("  [" + detail + "]").c_str());
  if (!ok) ++g_failures;
}

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
  std::string cmd = std::string(FUZMET_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "";
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int rc = pclose(pipe);
  if (exit_code) *exit_code = WEXITSTATUS(rc);
  return out;
}

std::vector<double> integer_fraction_sample(long long nmax) {
  std::vector<double> pts;
  for (long long n = 1; n <= nmax; ++n) pts.push_back(static_cast<double>(n));
  for (long long n = 2; n <= nmax; ++n)
    pts.push_back(static_cast<double>(n) + 1.0 / static_cast<double>(n));
  return pts;
}

// 1. Axioms across all six families plus the corrupted fixture.
void criterion_1() {
  struct Case {
    Family family;
    DomainSpec domain;
  };
  const Case cases[] = {
      {Family::Standard, DomainSpec{Interval{0.0, kInf, true, true}}},
      {Family::StationaryRatio, DomainSpec{Interval{0.0, kInf, true, true}}},
      {Family::ShiftedRatio, DomainSpec{Interval{0.0, kInf, false, true}}},
      {Family::PhiRatio, DomainSpec{Interval{0.0, kInf, true, true}}},
      {Family::PhiProduct, DomainSpec{Interval{0.0, 1.0, true, true}}},
      {Family::ReciprocalProduct, DomainSpec{PositiveIntegers{}}},
  };
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    Verdict v = check_gv_axioms(make_space(c.family, c.domain), 1000, kSeed,
                                1e-9);
    if (v.status != Status::Holds) {
      ok = false;
      detail = std::string(family_name(c.family)) + ": " + v.note;
    }
  }
  SpaceSpec corrupt = load_space_file(std::string(FUZMET_FIXTURE_DIR) +
                                      "/corrupt_signed_ratio.json");
  Verdict bad = check_gv_axioms(corrupt, 1000, kSeed, 1e-9);
  if (bad.status != Status::Fails ||
      bad.note.find("positivity") == std::string::npos ||
      bad.witness.points.empty()) {
    ok = false;
    detail = "corrupt fixture not refuted with a positivity witness";
  }
  report(1, "GV axioms: six families hold, corrupted family refuted", ok,
         detail);
}

// 2. interleave(1, n+1) on ReciprocalProduct: pseudo-Cauchy without
//    distinct terms, certified failure with them; off-diagonal sup is
//    exactly 1/2 at the pair (1,2) by brute force.
void criterion_2() {
  auto rp = make_space(Family::ReciprocalProduct, DomainSpec{PositiveIntegers{}});
  SequenceSpec seq{Interleave{Expr::parse("1"), Expr::parse("n+1")}};
  Resolution res;
  Verdict lax = pseudo_cauchy_verdict(rp, seq, res, false);
  Verdict strict = pseudo_cauchy_verdict(rp, seq, res, true);
  PairMax sup = max_over_pairs(1, 10000, [](long long a, long long b) {
    return 1.0 / (static_cast<double>(a) * static_cast<double>(b));
  });
  bool ok = lax.status == Status::Holds && strict.status == Status::Fails &&
            strict.note.find("certified") != std::string::npos &&
            sup.value == 0.5 && sup.first == 1 && sup.second == 2;
  report(2, "pseudo-Cauchy flip on reciprocal product, sup 1/2 at (1,2)", ok);
}

// 3. seq n on StationaryRatio: G-Cauchy and distinct pseudo-Cauchy hold at
//    N = 10^4; no seeded candidate clusters; oracle NotLebesgue + replay.
void criterion_3() {
  auto space = make_space(Family::StationaryRatio,
                          DomainSpec{Interval{0.0, kInf, true, true}});
  SequenceSpec seq{Formula{Expr::parse("n")}};
  Resolution res;
  res.N = 10000;
  bool ok = g_cauchy_verdict(space, seq, res).status == Status::Holds &&
            pseudo_cauchy_verdict(space, seq, res, true).status == Status::Holds;
  std::string detail;
  auto candidates = space.domain.sample(20, kSeed);
  for (double c : candidates) {
    if (cluster_evidence(space, seq, c, res).status != Status::Fails) {
      ok = false;
      detail = "candidate " + std::to_string(c) + " not rejected";
    }
  }
  OracleVerdict ov = family_lebesgue_oracle(space);
  ok = ok && ov.status == LebesgueStatus::NotLebesgue &&
       certificate_check(space, ov, res).status == Status::Holds;
  report(3, "divergent G-Cauchy on stationary ratio, NotLebesgue certified",
         ok, detail);
}

// 4. half-t identity on PhiRatio / PhiProduct; oracle Lebesgue + replay.
void criterion_4() {
  bool ok = true;
  Resolution res;
  for (auto [family, domain] :
       {std::pair{Family::PhiRatio, DomainSpec{Interval{0.0, kInf, true, true}}},
        std::pair{Family::PhiProduct, DomainSpec{Interval{0.0, 1.0, true, true}}}}) {
    auto space = make_space(family, domain);
    auto pts = space.domain.sample(2000, kSeed);
    int checked = 0;
    for (size_t i = 0; i + 1 < pts.size() && checked < 1000; i += 2) {
      double x = pts[i], y = pts[i + 1];
      if (x == y) continue;
      double lhs = space.membership(x, y, 0.5);
      double rhs = space.membership(x, y, 1.0) / 2.0;
      if (std::fabs(lhs - rhs) > 1e-12) ok = false;
      ++checked;
    }
    if (checked < 900) ok = false;
    OracleVerdict ov = family_lebesgue_oracle(space);
    ok = ok && ov.status == LebesgueStatus::Lebesgue &&
         certificate_check(space, ov, res).status == Status::Holds;
  }
  report(4, "half-t identity on the phi families, Lebesgue certified", ok);
}

// 5. singleton cover over {n} u {n+1/n}: no grid scale refines it, each
//    failure has a canonical (n, n+1/n) witness; equinormality sup 100/101.
void criterion_5() {
  auto space = make_space(Family::Standard,
                          DomainSpec{Interval{0.0, kInf, true, true}});
  auto sample = integer_fraction_sample(1000);
  const std::vector<double> r_grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  const std::vector<double> t_grid{0.1, 1.0, 10.0};
  Verdict v = lebesgue_search(space, sample, singleton_cover(sample), r_grid,
                              t_grid);
  bool ok = v.status == Status::Fails &&
            v.witness.params.size() == r_grid.size() * t_grid.size();
  std::string detail;
  // canonical witness per grid point: some pair (n, n+1/n) in one ball but
  // different singletons, with membership exactly t/(t + 1/n)
  for (double r : r_grid) {
    for (double t : t_grid) {
      bool found = false;
      for (long long n = 1; n <= 1000 && !found; ++n) {
        double gap = 1.0 / static_cast<double>(n);
        double m = t / (t + gap);
        if (m > 1.0 - r + 1e-9 &&
            std::fabs(space.membership(n, n + gap, t) - m) <= 1e-12) {
          found = true;
        }
      }
      if (!found) {
        ok = false;
        detail = "no canonical witness at r=" + std::to_string(r) +
                 " t=" + std::to_string(t);
      }
    }
  }
  std::vector<double> B, C;
  for (int n = 1; n <= 100; ++n) B.push_back(n);
  for (int n = 2; n <= 100; ++n) C.push_back(n + 1.0 / n);
  EquinormEstimate est = equinormality_estimate(space, B, C, 1.0);
  if (std::fabs(est.sup - 100.0 / 101.0) > 1e-12) {
    ok = false;
    detail = "equinormality sup " + std::to_string(est.sup);
  }
  report(5, "singleton cover defeats every grid scale; equinormal sup 100/101",
         ok, detail);
}

// 6. metric/fuzzy window equivalence on 200 seeded random formulas.
void criterion_6() {
  std::mt19937_64 rng(kSeed);
  DomainSpec line{Interval{-kInf, kInf, true, true}};
  Resolution res;
  res.N = 200;
  const std::vector<std::string> atoms = {"n", "1/n", "1", "2", "0.5"};
  const std::vector<std::string> ops = {"+", "-", "*"};
  std::uniform_int_distribution<size_t> pa(0, atoms.size() - 1);
  std::uniform_int_distribution<size_t> po(0, ops.size() - 1);
  int agree = 0, total = 0;
  while (total < 200) {
    std::string text = "(" + atoms[pa(rng)] + ops[po(rng)] + atoms[pa(rng)] +
                       ")" + ops[po(rng)] + atoms[pa(rng)];
    Expr e = Expr::parse(text);
    try {
      for (long long n = 1; n <= res.N; ++n) (void)e.eval(n);
    } catch (const EvalError&) {
      continue;  // rare division blow-ups: draw another formula
    }
    ++total;
    Verdict v = metric_bridge_check(MetricKind::Euclidean1D, line,
                                    SequenceSpec{Formula{e}}, res);
    if (v.status == Status::Holds) ++agree;
  }
  report(6, "metric/fuzzy pseudo-Cauchy agreement on 200 random sequences",
         agree == total,
         agree == total ? "" : std::to_string(agree) + "/200");
}

// 7. weak-G example: geometric sequence has a 1/2 gap floor; the interval
//    tail clusters at 1/2; oracle Lebesgue + replay.
void criterion_7() {
  SpaceSpec space = load_space_file(std::string(FUZMET_FIXTURE_DIR) +
                                    "/weak_g_example.json");
  Resolution res;
  res.N = 256;  // keep 1/2^n comfortably inside normal double range
  SequenceSpec geo{Formula{Expr::parse("1/(2*2^n)")}};  // starts at 1/4
  Verdict gc = g_cauchy_verdict(space, geo, res);
  bool ok = gc.status == Status::Fails && !gc.witness.values.empty() &&
            std::fabs(gc.witness.values.front() - 0.5) <= 1e-12;
  Resolution cres;
  SequenceSpec tail{Formula{Expr::parse("0.5+1/(2*n)")}};
  ok = ok && cluster_evidence(space, tail, 0.5, cres).status == Status::Holds;
  OracleVerdict ov = family_lebesgue_oracle(space);
  Resolution ores;
  ok = ok && ov.status == LebesgueStatus::Lebesgue &&
       certificate_check(space, ov, ores).status == Status::Holds;
  report(7, "geometric gap floor 1/2, interval tail clusters, Lebesgue", ok);
}

// 8. t-norm ordering on the 101x101 grid and axioms for all three.
void criterion_8() {
  bool ok = true;
  for (int i = 0; i <= 100 && ok; ++i) {
    for (int j = 0; j <= 100; ++j) {
      double a = i / 100.0, b = j / 100.0;
      double luk = tnorm_apply(TNormKind::Lukasiewicz, a, b);
      double prod = tnorm_apply(TNormKind::Product, a, b);
      double mini = tnorm_apply(TNormKind::Minimum, a, b);
      if (luk > prod + 1e-15 || prod > mini + 1e-15) {
        ok = false;
        break;
      }
    }
  }
  for (auto k : {TNormKind::Product, TNormKind::Minimum,
                 TNormKind::Lukasiewicz}) {
    if (check_tnorm_axioms(k, 11).status != Status::Holds) ok = false;
  }
  report(8, "t-norm ordering and axioms", ok);
}

// 9. examples --json matches the golden file byte for byte, exit code 0.
void criterion_9() {
  int rc = -1;
  std::string out = run_cli(
      "--json examples --fixtures " + std::string(FUZMET_FIXTURE_DIR), &rc);
  std::ifstream golden(std::string(FUZMET_FIXTURE_DIR) +
                       "/examples_golden.jsonl");
  std::stringstream want;
  want << golden.rdbuf();
  bool ok = golden.good() && rc == 0 && out == want.str() &&
            out.find("\"consistent\":true") != std::string::npos;
  report(9, "examples matrix matches the golden file with exit code 0", ok,
         rc == 0 ? "" : "exit code " + std::to_string(rc));
}

// 10. two full CLI sweeps with the default seed are byte-identical.
void criterion_10() {
  const std::string fixtures(FUZMET_FIXTURE_DIR);
  std::vector<std::string> sweep = {
      "--json axioms " + fixtures + "/phi_ratio.json",
      "--json classify " + fixtures +
          "/stationary_ratio.json '{\"kind\":\"formula\",\"expr\":\"n\"}' "
          "--mode gcauchy",
      "--json classify " + fixtures +
          "/reciprocal_product.json "
          "'{\"kind\":\"interleave\",\"a\":\"1\",\"b\":\"n+1\"}' "
          "--mode pseudocauchy --distinct",
      "--json cluster " + fixtures +
          "/stationary_ratio.json '{\"kind\":\"formula\",\"expr\":\"n\"}' "
          "--candidate 1",
      "--json refine " + fixtures + "/reciprocal_product.json "
          "--sample-count 50 --r 0.1 --t 1",
      "--json oracle " + fixtures + "/weak_g_example.json --replay",
      "--json examples --fixtures " + fixtures,
  };
  std::string first, second;
  for (const auto& c : sweep) first += run_cli(c);
  for (const auto& c : sweep) second += run_cli(c);
  bool ok = !first.empty() && first == second;
  report(10, "full CLI sweep is byte-deterministic", ok);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures) {
    std::printf("%d of 10 acceptance criteria failed\n", g_failures);
    return 1;
  }
  std::printf("all 10 acceptance criteria passed\n");
  return 0;
}
