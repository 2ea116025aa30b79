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

#include "fuzmet/classify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fuzmet/scan.hpp"

namespace fuzmet {

namespace {

std::string param_tag(double eps, double t) {
  std::ostringstream os;
  os << "(eps=" << eps << ",t=" << t << ")";
  return os.str();
}

void push_pair(Witness& w, long long j, long long n, double xj, double xn,
               double value, double eps, double t) {
  w.indices.push_back(j);
  w.indices.push_back(n);
  w.points.push_back(xj);
  w.points.push_back(xn);
  w.values.push_back(value);
  w.params.push_back({eps, t});
}

}  // namespace

std::vector<double> materialize_terms(const SequenceSpec& seq,
                                      const DomainSpec& domain,
                                      const Resolution& res) {
  res.validate();
  std::vector<double> x(static_cast<size_t>(res.N) + 1, 0.0);
  for (long long n = 1; n <= res.N; ++n) {
    double v = seq.term(n);
    if (!domain.contains(v)) {
      throw std::domain_error("sequence term x_" + std::to_string(n) + " = " +
                              std::to_string(v) + " lies outside the domain");
    }
    x[static_cast<size_t>(n)] = v;
  }
  return x;
}

Verdict cauchy_verdict(const SpaceSpec& space, const SequenceSpec& seq,
                       const Resolution& res) {
  const std::vector<double> x = materialize_terms(seq, space.domain, res);
  const long long lo = std::max<long long>(1, res.k);
  const double* xs = x.data();

  for (double eps : res.eps_grid) {
    for (double t : res.t_grid) {
      const double threshold = 1.0 - eps;
      auto hit = find_first_pair(lo, res.N, [xs, t, threshold, &space](
                                                long long m, long long n) {
        return space.membership_raw(xs[m], xs[n], t) <= threshold;
      });
      if (hit) {
        Witness w;
        push_pair(w, hit->first, hit->second, x[(size_t)hit->first],
                  x[(size_t)hit->second],
                  space.membership_raw(x[(size_t)hit->first],
                                       x[(size_t)hit->second], t),
                  eps, t);
        return fails(std::move(w),
                     "Cauchy refuted: M(x_m,x_n,t) <= 1-eps at " +
                         param_tag(eps, t));
      }
    }
  }

  bool constant = true;
  for (long long n = lo + 1; n <= res.N && constant; ++n)
    constant = x[(size_t)n] == x[(size_t)lo];
  if (constant) {
    Witness w;
    push_pair(w, lo, lo + 1, x[(size_t)lo], x[(size_t)lo + 1], 1.0,
              res.eps_grid.front(), res.t_grid.front());
    return holds(std::move(w), "constant on window; all pair values are 1");
  }
  return inconclusive("window exhausted; Cauchy not certifiable by sampling");
}

Verdict pseudo_cauchy_verdict(const SpaceSpec& space, const SequenceSpec& seq,
                              const Resolution& res, bool distinct_terms) {
  const std::vector<double> x = materialize_terms(seq, space.domain, res);
  const double* xs = x.data();
  const std::vector<long long> ladder = res.checkpoints();

  Witness hold_witness;
  for (double eps : res.eps_grid) {
    for (double t : res.t_grid) {
      const double threshold = 1.0 - eps;
      std::optional<PairHit> deepest;
      for (long long kp : ladder) {
        const long long lo = std::max<long long>(1, kp + 1);
        auto hit = find_first_pair(
            lo, res.N,
            [xs, t, threshold, distinct_terms, &space](long long j, long long n) {
              if (distinct_terms && xs[j] == xs[n]) return false;
              return space.membership_raw(xs[j], xs[n], t) > threshold;
            });
        if (!hit) {
          Witness w;
          w.indices.push_back(kp);
          w.params.push_back({eps, t});
          // family fact: off-diagonal sup of the reciprocal-product space
          // is 1/2, so no distinct pair can ever clear 1-eps <= 1/2
          if (distinct_terms && space.family == Family::ReciprocalProduct &&
              threshold >= 0.5 - res.tol) {
            w.values.push_back(0.5);
            return fails(std::move(w),
                         "certified Fails at " + param_tag(eps, t) +
                             ": off-diagonal sup 1/2 <= 1-eps");
          }
          return fails(std::move(w),
                       "fails at resolution: checkpoint k'=" +
                           std::to_string(kp) + " exhausted at " +
                           param_tag(eps, t));
        }
        deepest = hit;
      }
      push_pair(hold_witness, deepest->first, deepest->second,
                x[(size_t)deepest->first], x[(size_t)deepest->second],
                space.membership_raw(x[(size_t)deepest->first],
                                     x[(size_t)deepest->second], t),
                eps, t);
    }
  }
  return holds(std::move(hold_witness),
               "all checkpoints witnessed (resolution-bounded)");
}

Verdict g_cauchy_verdict(const SpaceSpec& space, const SequenceSpec& seq,
                         const Resolution& res) {
  const std::vector<double> x = materialize_terms(seq, space.domain, res);
  const long long lo = std::max<long long>(1, res.k);
  if (lo >= res.N)
    return inconclusive("window too small for consecutive pairs");

  constexpr double kFloorMargin = 0.1;

  // consecutive values per t; floor detection on the last half-window
  for (double t : res.t_grid) {
    const long long half = lo + (res.N - lo) / 2;
    double maxv = -1.0;
    long long arg = half;
    for (long long n = half; n < res.N; ++n) {
      double v = space.membership_raw(x[(size_t)n], x[(size_t)n + 1], t);
      if (v > maxv) {
        maxv = v;
        arg = n;
      }
    }
    if (maxv <= 1.0 - kFloorMargin) {
      Witness w;
      push_pair(w, arg, arg + 1, x[(size_t)arg], x[(size_t)arg + 1], maxv, 0.0,
                t);
      std::ostringstream os;
      os << "consecutive-gap floor: max M(x_n,x_{n+1}," << t
         << ") over the last half-window is " << maxv;
      return fails(std::move(w), os.str());
    }
  }

  Witness hold_witness;
  for (double eps : res.eps_grid) {
    for (double t : res.t_grid) {
      const double threshold = 1.0 - eps;
      long long last_violation = lo - 1;
      for (long long n = lo; n < res.N; ++n) {
        if (!(space.membership_raw(x[(size_t)n], x[(size_t)n + 1], t) >
              threshold))
          last_violation = n;
      }
      if (last_violation >= res.N - 1) {
        return inconclusive("no threshold n0 within window at " +
                            param_tag(eps, t));
      }
      long long n0 = last_violation + 1;
      push_pair(hold_witness, n0, n0 + 1, x[(size_t)n0], x[(size_t)n0 + 1],
                space.membership_raw(x[(size_t)n0], x[(size_t)n0 + 1], t), eps,
                t);
    }
  }
  return holds(std::move(hold_witness),
               "consecutive values clear 1-eps past n0 (resolution-bounded)");
}

Verdict cluster_evidence(const SpaceSpec& space, const SequenceSpec& seq,
                         double candidate, const Resolution& res) {
  space.validate_point(candidate, "candidate");
  const std::vector<double> x = materialize_terms(seq, space.domain, res);
  const long long lo = std::max<long long>(1, res.k);
  const long long tail_lo = std::max(lo, res.N / 2);
  const double* xs = x.data();

  constexpr long long kHitFloor = 10;
  bool all_hit = true;
  Witness hold_witness;

  for (double eps : res.eps_grid) {
    for (double t : res.t_grid) {
      const double threshold = 1.0 - eps;
      long long hits =
          count_in_range(lo, res.N, [xs, candidate, t, threshold, &space](
                                        long long n) {
            return space.membership_raw(xs[n], candidate, t) > threshold;
          });
      long long tail_hits =
          count_in_range(tail_lo, res.N, [xs, candidate, t, threshold, &space](
                                             long long n) {
            return space.membership_raw(xs[n], candidate, t) > threshold;
          });
      if (tail_hits == 0) {
        // closest tail approach, as separation evidence
        double maxv = -1.0;
        long long arg = tail_lo;
        for (long long n = tail_lo; n <= res.N; ++n) {
          double v = space.membership_raw(x[(size_t)n], candidate, t);
          if (v > maxv) {
            maxv = v;
            arg = n;
          }
        }
        Witness w;
        w.indices = {arg};
        w.points = {x[(size_t)arg], candidate};
        w.values = {maxv};
        w.params.push_back({eps, t});
        return fails(std::move(w),
                     "fails at resolution: zero tail hits at " +
                         param_tag(eps, t));
      }
      if (hits < kHitFloor) {
        all_hit = false;
        continue;
      }
      for (long long n = lo; n <= res.N; ++n) {
        double v = space.membership_raw(x[(size_t)n], candidate, t);
        if (v > threshold) {
          Witness& w = hold_witness;
          w.indices.push_back(n);
          w.points.push_back(x[(size_t)n]);
          w.points.push_back(candidate);
          w.values.push_back(v);
          w.params.push_back({eps, t});
          break;
        }
      }
    }
  }
  if (all_hit)
    return holds(std::move(hold_witness),
                 "clustering evidence: >= 10 hits for every grid parameter");
  return inconclusive("some grid parameter has under 10 hits but tail hits exist");
}

Verdict metric_bridge_check(MetricKind metric, const DomainSpec& domain,
                            const SequenceSpec& seq, const Resolution& res) {
  const std::vector<double> x = materialize_terms(seq, domain, res);
  const double* xs = x.data();
  const std::vector<long long> ladder = res.checkpoints();

  Witness hold_witness;
  for (double eps : res.eps_grid) {
    for (double t : res.t_grid) {
      const double delta = t * eps / (1.0 - eps);
      const double threshold = 1.0 - eps;
      bool recorded = false;
      for (long long kp : ladder) {
        const long long lo = std::max<long long>(1, kp + 1);
        auto metric_hit =
            find_first_pair(lo, res.N, [xs, metric, delta](long long j, long long n) {
              return metric_eval(metric, xs[j], xs[n]) < delta;
            });
        auto fuzzy_hit = find_first_pair(
            lo, res.N, [xs, metric, t, threshold](long long j, long long n) {
              return t / (t + metric_eval(metric, xs[j], xs[n])) > threshold;
            });
        if (metric_hit.has_value() != fuzzy_hit.has_value()) {
          Witness w;
          w.indices.push_back(kp);
          if (metric_hit) {
            push_pair(w, metric_hit->first, metric_hit->second,
                      x[(size_t)metric_hit->first],
                      x[(size_t)metric_hit->second],
                      metric_eval(metric, x[(size_t)metric_hit->first],
                                  x[(size_t)metric_hit->second]),
                      eps, t);
          }
          if (fuzzy_hit) {
            push_pair(w, fuzzy_hit->first, fuzzy_hit->second,
                      x[(size_t)fuzzy_hit->first],
                      x[(size_t)fuzzy_hit->second],
                      t / (t + metric_eval(metric, x[(size_t)fuzzy_hit->first],
                                           x[(size_t)fuzzy_hit->second])),
                      eps, t);
          }
          return fails(std::move(w),
                       "bridge disagreement at checkpoint k'=" +
                           std::to_string(kp) + ", " + param_tag(eps, t));
        }
        if (!recorded) {
          if (metric_hit) {
            push_pair(hold_witness, metric_hit->first, metric_hit->second,
                      x[(size_t)metric_hit->first],
                      x[(size_t)metric_hit->second],
                      metric_eval(metric, x[(size_t)metric_hit->first],
                                  x[(size_t)metric_hit->second]),
                      eps, t);
          }
          recorded = true;
        }
        if (!metric_hit) break;  // deeper windows are subsets: still empty
      }

      // forward substitution t := 1-eps: M_d(x_j, x_n, 1-eps) > 1-eps
      // must force d(x_j, x_n) < eps
      const long long lo0 = std::max<long long>(1, res.k + 1);
      const double ts = 1.0 - eps;
      auto sub_hit = find_first_pair(
          lo0, res.N, [xs, metric, ts, threshold](long long j, long long n) {
            return ts / (ts + metric_eval(metric, xs[j], xs[n])) > threshold;
          });
      if (sub_hit) {
        double d = metric_eval(metric, x[(size_t)sub_hit->first],
                               x[(size_t)sub_hit->second]);
        if (!(d < eps + res.tol)) {
          Witness w;
          push_pair(w, sub_hit->first, sub_hit->second,
                    x[(size_t)sub_hit->first], x[(size_t)sub_hit->second], d,
                    eps, ts);
          return fails(std::move(w),
                       "substitution check failed: M_d(.,.,1-eps) > 1-eps "
                       "but d >= eps");
        }
      }
    }
  }
  return holds(std::move(hold_witness),
               "metric and fuzzy pseudo-Cauchy searches agree at every "
               "checkpoint");
}

}  // namespace fuzmet
