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

#include "fuzmet/covers.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fuzmet/scan.hpp"

namespace fuzmet {

Cover singleton_cover(const std::vector<double>& sample) {
  Cover c;
  c.sets.reserve(sample.size());
  for (size_t i = 0; i < sample.size(); ++i) {
    std::ostringstream name;
    name << "S" << i;
    c.sets.push_back({name.str(), {sample[i]}});
  }
  return c;
}

namespace {

struct CoverIndex {
  std::vector<std::unordered_set<double>> members;
  std::unordered_map<double, std::vector<size_t>> sets_of_point;

  explicit CoverIndex(const Cover& cover) {
    members.reserve(cover.sets.size());
    for (size_t s = 0; s < cover.sets.size(); ++s) {
      members.emplace_back(cover.sets[s].points.begin(),
                           cover.sets[s].points.end());
      for (double p : cover.sets[s].points) sets_of_point[p].push_back(s);
    }
  }

  bool covers(const std::vector<double>& sample) const {
    for (double p : sample)
      if (sets_of_point.find(p) == sets_of_point.end()) return false;
    return true;
  }

  /// Index of a set containing every point of `pts`, or npos. Candidates
  /// are the sets containing the first point.
  static constexpr size_t npos = static_cast<size_t>(-1);
  size_t set_containing(const std::vector<double>& pts) const {
    if (pts.empty()) return npos;
    auto it = sets_of_point.find(pts.front());
    if (it == sets_of_point.end()) return npos;
    for (size_t s : it->second) {
      bool all = true;
      for (double p : pts) {
        if (members[s].find(p) == members[s].end()) {
          all = false;
          break;
        }
      }
      if (all) return s;
    }
    return npos;
  }
};

}  // namespace

Verdict refinement_check(const SpaceSpec& space,
                         const std::vector<double>& sample, const Cover& cover,
                         double r, double t) {
  if (sample.empty()) throw std::invalid_argument("sample must be nonempty");
  CoverIndex index(cover);
  if (!index.covers(sample))
    throw std::invalid_argument("cover does not cover the sample");

  long long first_inconclusive = -1;
  for (size_t ci = 0; ci < sample.size(); ++ci) {
    const double center = sample[ci];
    std::vector<double> in_pts, boundary_pts;
    for (double y : sample) {
      switch (ball_contains(space, center, r, t, y)) {
        case BallSide::In: in_pts.push_back(y); break;
        case BallSide::Boundary: boundary_pts.push_back(y); break;
        default: break;
      }
    }
    size_t fit = index.set_containing(in_pts);
    if (fit == CoverIndex::npos) {
      // definitive: the In-part of the ball escapes every cover set
      auto host = index.sets_of_point.find(center);
      size_t host_set = host->second.front();
      double escapee = center;
      for (double y : in_pts) {
        if (index.members[host_set].find(y) == index.members[host_set].end()) {
          escapee = y;
          break;
        }
      }
      Witness w;
      w.indices = {static_cast<long long>(ci)};
      w.points = {center, escapee};
      w.values = {space.membership(center, escapee, t)};
      w.params.push_back({r, t});
      std::ostringstream os;
      os << "ball of center " << center << " escapes cover set '"
         << cover.sets[host_set].name << "' at point " << escapee;
      return fails(std::move(w), os.str());
    }
    if (!boundary_pts.empty()) {
      // the fit may hinge on boundary points; don't guess
      std::vector<double> full = in_pts;
      full.insert(full.end(), boundary_pts.begin(), boundary_pts.end());
      if (index.set_containing(full) == CoverIndex::npos) {
        if (first_inconclusive < 0)
          first_inconclusive = static_cast<long long>(ci);
      }
    }
  }
  if (first_inconclusive >= 0) {
    std::ostringstream os;
    os << "boundary membership at center "
       << sample[static_cast<size_t>(first_inconclusive)]
       << " leaves the refinement undecided";
    return inconclusive(os.str());
  }
  Witness w;
  w.indices = {static_cast<long long>(sample.size())};
  w.params.push_back({r, t});
  return holds(std::move(w), "every (r,t)-ball fits inside a cover set");
}

Verdict lebesgue_search(const SpaceSpec& space,
                        const std::vector<double>& sample, const Cover& cover,
                        const std::vector<double>& r_grid,
                        const std::vector<double>& t_grid) {
  if (r_grid.empty() || t_grid.empty())
    throw std::invalid_argument("grids must be nonempty");
  Witness fail_witness;
  for (double r : r_grid) {
    for (double t : t_grid) {
      Verdict v = refinement_check(space, sample, cover, r, t);
      if (v.status == Status::Holds) {
        Witness w;
        w.params.push_back({r, t});
        std::ostringstream os;
        os << "refines at r=" << r << ", t=" << t;
        return holds(std::move(w), os.str());
      }
      // collect this grid point's witness
      fail_witness.params.push_back({r, t});
      for (long long i : v.witness.indices) fail_witness.indices.push_back(i);
      for (double p : v.witness.points) fail_witness.points.push_back(p);
      for (double val : v.witness.values) fail_witness.values.push_back(val);
    }
  }
  return fails(std::move(fail_witness),
               "no grid (r,t) refines the cover at this resolution");
}

EquinormEstimate equinormality_estimate(const SpaceSpec& space,
                                        const std::vector<double>& set_b,
                                        const std::vector<double>& set_c,
                                        double s) {
  if (set_b.empty() || set_c.empty())
    throw std::invalid_argument("sets must be nonempty");
  if (!(s > 0.0)) throw std::invalid_argument("s must be positive");
  std::unordered_set<double> bset(set_b.begin(), set_b.end());
  for (double c : set_c) {
    if (bset.count(c))
      throw std::invalid_argument("sets are not disjoint at point " +
                                  std::to_string(c));
  }
  for (double b : set_b) space.validate_point(b, "B point");
  for (double c : set_c) space.validate_point(c, "C point");

  const long long nb = static_cast<long long>(set_b.size());
  const long long nc = static_cast<long long>(set_c.size());
  const double* bp = set_b.data();
  const double* cp = set_c.data();

  // flattened product index, reduced with the deterministic range-max kernel
  RangeMax best = max_over_range(0, nb * nc - 1, [&](long long flat) {
    return space.membership_raw(bp[flat / nc], cp[flat % nc], s);
  });
  long long i = best.index / nc, j = best.index % nc;
  return EquinormEstimate{best.value, set_b[(size_t)i], set_c[(size_t)j]};
}

std::vector<double> precompact_net(const SpaceSpec& space,
                                   const std::vector<double>& sample, double r,
                                   double t) {
  if (sample.empty()) throw std::invalid_argument("sample must be nonempty");
  std::vector<bool> covered(sample.size(), false);
  std::vector<double> centers;
  for (size_t i = 0; i < sample.size(); ++i) {
    if (covered[i]) continue;
    const double c = sample[i];
    centers.push_back(c);
    for (size_t j = 0; j < sample.size(); ++j) {
      if (!covered[j] &&
          ball_contains(space, c, r, t, sample[j]) == BallSide::In)
        covered[j] = true;
    }
    covered[i] = true;  // the center covers itself (M = 1)
  }
  return centers;
}

std::vector<double> metric_net(MetricKind metric,
                               const std::vector<double>& sample, double eps) {
  if (sample.empty()) throw std::invalid_argument("sample must be nonempty");
  std::vector<bool> covered(sample.size(), false);
  std::vector<double> centers;
  for (size_t i = 0; i < sample.size(); ++i) {
    if (covered[i]) continue;
    const double c = sample[i];
    centers.push_back(c);
    for (size_t j = 0; j < sample.size(); ++j) {
      if (!covered[j] && metric_eval(metric, c, sample[j]) < eps)
        covered[j] = true;
    }
  }
  return centers;
}

}  // namespace fuzmet
