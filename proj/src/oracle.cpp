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

#include "fuzmet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fuzmet {

namespace {

constexpr unsigned long long kReplaySeed = 1299093;

DomainSpec positive_reals() {
  return DomainSpec{Interval{0.0, std::numeric_limits<double>::infinity(), true, true}};
}

DomainSpec nonneg_reals() {
  return DomainSpec{Interval{0.0, std::numeric_limits<double>::infinity(), false, true}};
}

DomainSpec unit_open() { return DomainSpec{Interval{0.0, 1.0, true, true}}; }

DomainSpec ex27_domain() {
  UnionOf u;
  u.parts.emplace_back(SequenceRange{Expr::parse("n"), 1});
  u.parts.emplace_back(SequenceRange{Expr::parse("n+1/n"), 1});
  return {std::move(u)};
}

DomainSpec geometric_tail_domain() {
  UnionOf u;
  u.parts.emplace_back(SequenceRange{Expr::parse("1/2^n"), 2});
  u.parts.emplace_back(Interval{0.5, 1.0, false, false});
  return {std::move(u)};
}

Certificate offdiag_certificate(double bound) {
  Certificate c;
  c.kind = CertificateKind::OffDiagonalSupBound;
  c.bound = bound;
  return c;
}

Certificate divergent_certificate(bool analogy) {
  Certificate c;
  c.kind = CertificateKind::DivergentPseudoCauchy;
  c.seq = SequenceSpec{Formula{Expr::parse("n")}};
  c.by_analogy = analogy;
  return c;
}

Certificate half_t_certificate(bool analogy) {
  Certificate c;
  c.kind = CertificateKind::HalfTIdentity;
  c.by_analogy = analogy;
  return c;
}

Certificate pair_gap_certificate() {
  Certificate c;
  c.kind = CertificateKind::ShrinkingPairGap;
  c.pair_a = Expr::parse("n");
  c.pair_b = Expr::parse("n+1/n");
  return c;
}

Certificate compact_tail_certificate() {
  Certificate c;
  c.kind = CertificateKind::CompactTail;
  c.tail_lo = 0.5;
  c.tail_hi = 1.0;
  c.tail_seqs.push_back(SequenceSpec{Formula{Expr::parse("1/2+1/(2*n)")}});
  return c;
}

}  // namespace

const char* to_string(LebesgueStatus s) {
  switch (s) {
    case LebesgueStatus::Lebesgue: return "Lebesgue";
    case LebesgueStatus::NotLebesgue: return "NotLebesgue";
    default: return "Unknown";
  }
}

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::OffDiagonalSupBound: return "off_diagonal_sup_bound";
    case CertificateKind::DivergentPseudoCauchy:
      return "divergent_pseudo_cauchy";
    case CertificateKind::HalfTIdentity: return "half_t_identity";
    case CertificateKind::ShrinkingPairGap: return "shrinking_pair_gap";
    default: return "compact_tail";
  }
}

OracleVerdict family_lebesgue_oracle(const SpaceSpec& space) {
  auto verdict = [&](LebesgueStatus st, Certificate cert, std::string source) {
    OracleVerdict v;
    v.status = st;
    v.has_certificate = true;
    v.certificate = std::move(cert);
    v.source = std::move(source);
    return v;
  };

  switch (space.family) {
    case Family::ReciprocalProduct:
      if (space.domain.same_shape({PositiveIntegers{}})) {
        return verdict(LebesgueStatus::Lebesgue, offdiag_certificate(0.5),
                       "catalog:reciprocal-product-on-naturals");
      }
      break;
    case Family::StationaryRatio:
      if (space.domain.same_shape(positive_reals())) {
        return verdict(LebesgueStatus::NotLebesgue,
                       divergent_certificate(false),
                       "catalog:min-max-ratio-on-positive-reals");
      }
      if (space.domain.same_shape(geometric_tail_domain())) {
        return verdict(LebesgueStatus::Lebesgue, compact_tail_certificate(),
                       "catalog:min-max-ratio-on-geometric-tail");
      }
      break;
    case Family::ShiftedRatio:
      if (space.domain.same_shape(nonneg_reals())) {
        return verdict(LebesgueStatus::NotLebesgue, divergent_certificate(true),
                       "catalog:shifted-ratio-on-nonnegative-reals");
      }
      break;
    case Family::PhiRatio:
      if (space.domain.same_shape(positive_reals())) {
        return verdict(LebesgueStatus::Lebesgue, half_t_certificate(false),
                       "catalog:phi-ratio-on-positive-reals");
      }
      break;
    case Family::PhiProduct:
      if (space.domain.same_shape(unit_open())) {
        return verdict(LebesgueStatus::Lebesgue, half_t_certificate(true),
                       "catalog:phi-product-on-unit-interval");
      }
      break;
    case Family::Standard:
      if (space.metric == MetricKind::Euclidean1D &&
          space.domain.same_shape(ex27_domain())) {
        return verdict(LebesgueStatus::NotLebesgue, pair_gap_certificate(),
                       "catalog:standard-on-integer-fraction-pairs");
      }
      break;
    default:
      break;
  }
  return OracleVerdict{};
}

namespace {

Verdict check_offdiag_bound(const SpaceSpec& space, const Certificate& cert,
                            const Resolution& res) {
  const int kPairs = 10000;
  std::vector<double> pts = space.domain.sample(2 * kPairs, kReplaySeed);
  auto probe = [&](double x, double y) -> std::optional<Verdict> {
    if (x == y) return std::nullopt;
    for (double t : res.t_grid) {
      double m = space.membership_raw(x, y, t);
      if (m > cert.bound + res.tol) {
        Witness w;
        w.points = {x, y};
        w.values = {m};
        w.params.push_back({cert.bound, t});
        return fails(std::move(w),
                     "off-diagonal value exceeds the certified bound");
      }
    }
    return std::nullopt;
  };
  for (int i = 0; i < kPairs; ++i) {
    if (auto v = probe(pts[(size_t)(2 * i)], pts[(size_t)(2 * i + 1)]))
      return *v;
  }
  // random pairs rarely land on the extreme; also scan all pairs among the
  // smallest sampled points, where ratio-style metrics peak
  std::vector<double> low(pts);
  std::sort(low.begin(), low.end());
  low.erase(std::unique(low.begin(), low.end()), low.end());
  if (low.size() > 64) low.resize(64);
  for (size_t i = 0; i < low.size(); ++i) {
    for (size_t j = i + 1; j < low.size(); ++j) {
      if (auto v = probe(low[i], low[j])) return *v;
    }
  }
  Witness w;
  w.indices = {kPairs};
  w.values = {cert.bound};
  return holds(std::move(w), "off-diagonal sup bound replayed");
}

Verdict check_divergent_pseudo_cauchy(const SpaceSpec& space,
                                      const Certificate& cert,
                                      const Resolution& res) {
  Verdict pc = pseudo_cauchy_verdict(space, cert.seq, res, true);
  if (pc.status != Status::Holds) {
    return fails(std::move(pc.witness),
                 "certificate sequence is not pseudo-Cauchy at resolution: " +
                     pc.note);
  }
  std::vector<double> candidates = space.domain.sample(20, kReplaySeed);
  for (double c : candidates) {
    Verdict cl = cluster_evidence(space, cert.seq, c, res);
    if (cl.status != Status::Fails) {
      Witness w = std::move(cl.witness);
      w.points.push_back(c);
      return fails(std::move(w),
                   "cluster evidence did not fail at candidate " +
                       std::to_string(c));
    }
  }
  Witness w;
  w.indices = {static_cast<long long>(candidates.size())};
  w.points = std::move(candidates);
  return holds(std::move(w),
               "pseudo-Cauchy holds and no candidate clusters at resolution");
}

Verdict check_half_t_identity(const SpaceSpec& space, const Resolution& res) {
  (void)res;
  const int kSamples = 1000;
  std::vector<double> pts = space.domain.sample(2 * kSamples, kReplaySeed);
  for (int i = 0; i < kSamples; ++i) {
    double x = pts[(size_t)(2 * i)], y = pts[(size_t)(2 * i + 1)];
    if (x == y) continue;
    double lhs = space.membership_raw(x, y, 0.5);
    double rhs = space.membership_raw(x, y, 1.0) / 2.0;
    if (std::fabs(lhs - rhs) > 1e-12) {
      Witness w;
      w.points = {x, y};
      w.values = {lhs, rhs};
      return fails(std::move(w), "half-t identity violated");
    }
  }
  Witness w;
  w.indices = {kSamples};
  return holds(std::move(w), "half-t identity replayed on off-diagonal pairs");
}

Verdict check_shrinking_pair_gap(const SpaceSpec& space,
                                 const Certificate& cert,
                                 const Resolution& res) {
  const long long N = std::min<long long>(res.N, 1000);
  std::vector<double> a(static_cast<size_t>(N) + 1),
      b(static_cast<size_t>(N) + 1);
  for (long long n = 1; n <= N; ++n) {
    a[(size_t)n] = cert.pair_a.eval(n);
    b[(size_t)n] = cert.pair_b.eval(n);
    if (a[(size_t)n] == b[(size_t)n]) {
      Witness w;
      w.indices = {n};
      w.points = {a[(size_t)n]};
      return fails(std::move(w), "pair families coincide at index " +
                                     std::to_string(n));
    }
    space.validate_point(a[(size_t)n], "pair point a_n");
    space.validate_point(b[(size_t)n], "pair point b_n");
  }
  Witness hold_witness;
  for (double eps : res.eps_grid) {
    for (double t : res.t_grid) {
      const double threshold = 1.0 - eps;
      long long last_violation = 0;
      for (long long n = 1; n <= N; ++n) {
        if (!(space.membership_raw(a[(size_t)n], b[(size_t)n], t) > threshold))
          last_violation = n;
      }
      if (last_violation >= N) {
        Witness w;
        w.indices = {last_violation};
        w.params.push_back({eps, t});
        return fails(std::move(w),
                     "pair gap does not shrink below the ball scale within "
                     "the window");
      }
      long long n0 = last_violation + 1;
      hold_witness.indices.push_back(n0);
      hold_witness.points.push_back(a[(size_t)n0]);
      hold_witness.points.push_back(b[(size_t)n0]);
      hold_witness.values.push_back(
          space.membership_raw(a[(size_t)n0], b[(size_t)n0], t));
      hold_witness.params.push_back({eps, t});
    }
  }
  return holds(std::move(hold_witness),
               "distinct pairs escape every sampled ball scale");
}

Verdict check_compact_tail(const SpaceSpec& space, const Certificate& cert,
                           const Resolution& res) {
  Witness all_evidence;
  for (const SequenceSpec& seq : cert.tail_seqs) {
    // the sequence must eventually live in the tail interval
    long long inside_from = -1;
    for (long long n = res.N; n >= 1; --n) {
      double v = seq.term(n);
      if (v < cert.tail_lo || v > cert.tail_hi) break;
      inside_from = n;
    }
    if (inside_from < 0 || inside_from > res.N / 2) {
      Witness w;
      w.values = {cert.tail_lo, cert.tail_hi};
      return fails(std::move(w),
                   "catalogued sequence is not eventually in the tail "
                   "interval");
    }
    bool clustered = false;
    Witness evidence;
    for (double cand : {cert.tail_lo, (cert.tail_lo + cert.tail_hi) / 2.0,
                        cert.tail_hi}) {
      Verdict cl = cluster_evidence(space, seq, cand, res);
      if (cl.status == Status::Holds) {
        clustered = true;
        evidence = std::move(cl.witness);
        break;
      }
    }
    if (!clustered) {
      Witness w;
      w.values = {cert.tail_lo, cert.tail_hi};
      return fails(std::move(w),
                   "no tail candidate accumulates the catalogued sequence");
    }
    for (long long i : evidence.indices) all_evidence.indices.push_back(i);
    for (double p : evidence.points) all_evidence.points.push_back(p);
    for (double v : evidence.values) all_evidence.values.push_back(v);
    for (auto pr : evidence.params) all_evidence.params.push_back(pr);
  }
  if (all_evidence.empty())
    return inconclusive("no catalogued tail sequences to replay");
  return holds(std::move(all_evidence),
               "tail interval captures every catalogued sequence");
}

}  // namespace

Verdict certificate_check(const SpaceSpec& space, const OracleVerdict& verdict,
                          const Resolution& res) {
  if (verdict.status == LebesgueStatus::Unknown || !verdict.has_certificate)
    throw std::invalid_argument("cannot replay an Unknown oracle verdict");
  res.validate();
  switch (verdict.certificate.kind) {
    case CertificateKind::OffDiagonalSupBound:
      return check_offdiag_bound(space, verdict.certificate, res);
    case CertificateKind::DivergentPseudoCauchy:
      return check_divergent_pseudo_cauchy(space, verdict.certificate, res);
    case CertificateKind::HalfTIdentity:
      return check_half_t_identity(space, res);
    case CertificateKind::ShrinkingPairGap:
      return check_shrinking_pair_gap(space, verdict.certificate, res);
    default:
      return check_compact_tail(space, verdict.certificate, res);
  }
}

const std::vector<CatalogRow>& catalog() {
  static const std::vector<CatalogRow> rows = [] {
    std::vector<CatalogRow> out;
    out.push_back({"reciprocal_product",
                   make_space(Family::ReciprocalProduct, {PositiveIntegers{}}),
                   false, LebesgueStatus::Lebesgue, true,
                   "G-Cauchy forces eventually-equal terms (off-diagonal sup "
                   "1/2)"});
    out.push_back({"stationary_ratio",
                   make_space(Family::StationaryRatio, positive_reals()), false,
                   LebesgueStatus::NotLebesgue, false,
                   "counterexample: (n) is G-Cauchy without a cluster point"});
    out.push_back({"shifted_ratio",
                   make_space(Family::ShiftedRatio, nonneg_reals()), false,
                   LebesgueStatus::NotLebesgue, false,
                   "counterexample: (n) is G-Cauchy without a cluster point"});
    out.push_back({"phi_ratio", make_space(Family::PhiRatio, positive_reals()),
                   false, LebesgueStatus::Lebesgue, true,
                   "implied: every Lebesgue space is weak G-complete"});
    out.push_back({"phi_product", make_space(Family::PhiProduct, unit_open()),
                   false, LebesgueStatus::Lebesgue, true,
                   "implied: every Lebesgue space is weak G-complete"});
    out.push_back({"ex27", make_space(Family::Standard, ex27_domain()), false,
                   LebesgueStatus::NotLebesgue, true,
                   "G-Cauchy sequences contain a constant subsequence (gap "
                   "floor 1/3)"});
    out.push_back({"weak_g_example",
                   make_space(Family::StationaryRatio, geometric_tail_domain()),
                   false, LebesgueStatus::Lebesgue, true,
                   "compact tail [1/2,1] captures cluster points"});
    return out;
  }();
  return rows;
}

}  // namespace fuzmet
