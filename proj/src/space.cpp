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

#include "fuzmet/space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fuzmet {

double metric_eval(MetricKind kind, double x, double y) {
  switch (kind) {
    case MetricKind::Euclidean1D: return std::fabs(x - y);
    default: return x == y ? 0.0 : 1.0;
  }
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Standard: return "standard";
    case Family::StationaryRatio: return "stationary_ratio";
    case Family::ShiftedRatio: return "shifted_ratio";
    case Family::PhiRatio: return "phi_ratio";
    case Family::PhiProduct: return "phi_product";
    case Family::ReciprocalProduct: return "reciprocal_product";
    default: return "signed_ratio";
  }
}

Family family_from_name(const std::string& name) {
  for (Family f : {Family::Standard, Family::StationaryRatio,
                   Family::ShiftedRatio, Family::PhiRatio, Family::PhiProduct,
                   Family::ReciprocalProduct, Family::SignedRatio}) {
    if (name == family_name(f)) return f;
  }
  throw std::invalid_argument("unknown family name: " + name);
}

double SpaceSpec::membership_raw(double x, double y, double t) const {
  double lo = std::min(x, y), hi = std::max(x, y);
  switch (family) {
    case Family::Standard:
      return t / (t + metric_eval(metric, x, y));
    case Family::StationaryRatio:
      return x == y ? 1.0 : lo / hi;
    case Family::ShiftedRatio:
      return (lo + t) / (hi + t);
    case Family::PhiRatio:
      return x == y ? 1.0 : (lo / hi) * phi(t);
    case Family::PhiProduct:
      return x == y ? 1.0 : x * y * phi(t);
    case Family::ReciprocalProduct:
      return x == y ? 1.0 : 1.0 / (x * y);
    default:  // SignedRatio, intentionally broken
      return x == y ? 1.0 : lo / hi;
  }
}

void SpaceSpec::validate_point(double x, const char* what) const {
  if (!domain.contains(x)) {
    throw std::domain_error(std::string(what) + " " + std::to_string(x) +
                            " is outside the space domain");
  }
}

double SpaceSpec::membership(double x, double y, double t) const {
  validate_point(x, "point x");
  validate_point(y, "point y");
  if (!(t > 0.0)) {
    throw std::domain_error("t must be positive, got " + std::to_string(t));
  }
  return membership_raw(x, y, t);
}

SpaceSpec make_space(Family family, DomainSpec domain, MetricKind metric,
                     TNormKind tnorm) {
  if (family == Family::ShiftedRatio && tnorm != TNormKind::Product) {
    // validity is only established for the product t-norm here
    throw std::invalid_argument(
        "shifted_ratio supports only the product t-norm");
  }
  SpaceSpec s;
  s.family = family;
  s.metric = metric;
  s.domain = std::move(domain);
  s.tnorm = tnorm;
  return s;
}

const char* to_string(BallSide s) {
  switch (s) {
    case BallSide::In: return "In";
    case BallSide::Out: return "Out";
    default: return "Boundary";
  }
}

BallSide ball_contains(const SpaceSpec& space, double center, double r,
                       double t, double y, double tol) {
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("radius must lie in (0,1), got " + std::to_string(r));
  double m = space.membership(center, y, t);
  double threshold = 1.0 - r;
  if (m > threshold + tol) return BallSide::In;
  if (m < threshold - tol) return BallSide::Out;
  return BallSide::Boundary;
}

namespace {

Witness tuple_witness(std::initializer_list<double> points,
                      std::initializer_list<double> values, double t, double s) {
  Witness w;
  w.points.assign(points);
  w.values.assign(values);
  w.params.push_back({t, s});
  return w;
}

}  // namespace

Verdict check_gv_axioms(const SpaceSpec& space, int sample_count,
                        unsigned long long seed, double tol) {
  if (sample_count < 1)
    throw std::invalid_argument("sample_count must be >= 1");

  std::vector<double> pts = space.domain.sample(3 * sample_count, seed);
  if (pts.empty()) throw std::runtime_error("empty domain sample");

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> logt(std::log(0.05), std::log(20.0));

  for (int i = 0; i < sample_count; ++i) {
    double x = pts[static_cast<size_t>(3 * i)];
    double y = pts[static_cast<size_t>(3 * i + 1)];
    double z = pts[static_cast<size_t>(3 * i + 2)];
    double t = std::exp(logt(rng));
    double s = std::exp(logt(rng));

    double mxy = space.membership_raw(x, y, t);
    double myx = space.membership_raw(y, x, t);
    double mxx = space.membership_raw(x, x, t);

    // (a) positivity, and the [0,1] range
    if (!(mxy > 0.0) || mxy > 1.0 + tol) {
      return fails(tuple_witness({x, y}, {mxy}, t, s),
                   "axiom (a) positivity violated: M(x,y,t) not in (0,1]");
    }
    // (b) identity of indiscernibles
    if (mxx != 1.0) {
      return fails(tuple_witness({x, x}, {mxx}, t, s),
                   "axiom (b) violated: M(x,x,t) != 1");
    }
    if (x != y && mxy == 1.0) {
      return fails(tuple_witness({x, y}, {mxy}, t, s),
                   "axiom (b) violated: M(x,y,t) = 1 for x != y");
    }
    // (c) symmetry, exact
    if (mxy != myx) {
      return fails(tuple_witness({x, y}, {mxy, myx}, t, s),
                   "axiom (c) symmetry violated");
    }
    // (d) t-norm triangle inequality
    double myz = space.membership_raw(y, z, s);
    double mxz = space.membership_raw(x, z, t + s);
    double lhs = tnorm_apply(space.tnorm,
                             std::clamp(mxy, 0.0, 1.0),
                             std::clamp(myz, 0.0, 1.0));
    if (lhs > mxz + tol) {
      return fails(tuple_witness({x, y, z}, {mxy, myz, mxz}, t, s),
                   "axiom (d) triangle inequality violated");
    }
    // monotonicity of t -> M(x,y,t)
    double t2 = t * 1.5;
    if (mxy > space.membership_raw(x, y, t2) + 1e-12) {
      return fails(tuple_witness({x, y}, {mxy, space.membership_raw(x, y, t2)},
                                 t, t2),
                   "t-monotonicity violated");
    }
    // (e) continuity heuristic: increments must shrink through h-halving
    double prev = -1.0;
    double diff = 0.0;
    for (double h : {1e-2, 1e-4, 1e-6}) {
      diff = std::fabs(space.membership_raw(x, y, t + h) - mxy);
      if (prev >= 0.0 && diff > prev + tol) {
        return fails(tuple_witness({x, y}, {prev, diff}, t, h),
                     "continuity heuristic violated: increments grow");
      }
      prev = diff;
    }
    if (diff > 1e-3) {
      return fails(tuple_witness({x, y}, {diff}, t, 1e-6),
                   "continuity heuristic violated: jump in t");
    }
  }

  Witness w;
  w.indices = {sample_count};
  return holds(std::move(w), "all sampled fuzzy-metric axioms hold");
}

}  // namespace fuzmet
