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

#include "fuzmet/jsonio.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace fuzmet {

namespace {

double endpoint_from_json(const ordered_json& j, const char* field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf")
      return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    try {
      size_t pos = 0;
      double v = std::stod(s, &pos);
      if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  throw SpecFormatError(field, std::string("bad interval endpoint in '") +
                                   field + "'");
}

std::string endpoint_to_string(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

const ordered_json& need(const ordered_json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end())
    throw SpecFormatError(field, std::string("missing field '") + field + "'");
  return *it;
}

Expr parse_expr_field(const ordered_json& j, const char* field) {
  if (!j.is_string())
    throw SpecFormatError(field, std::string("field '") + field +
                                     "' must be an expression string");
  try {
    return Expr::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw SpecFormatError(field, std::string("bad expression in '") + field +
                                     "': " + e.what());
  }
}

}  // namespace

DomainSpec domain_from_json(const ordered_json& j) {
  if (!j.is_object()) throw SpecFormatError("domain", "domain must be an object");
  const std::string kind = need(j, "kind").get<std::string>();
  if (kind == "interval") {
    Interval iv{endpoint_from_json(need(j, "lo"), "lo"),
                endpoint_from_json(need(j, "hi"), "hi"),
                need(j, "lo_open").get<bool>(),
                need(j, "hi_open").get<bool>()};
    return {iv};
  }
  if (kind == "positive_integers") return {PositiveIntegers{}};
  if (kind == "explicit") {
    ExplicitSet e;
    for (const auto& p : need(j, "points")) e.points.push_back(p.get<double>());
    return {std::move(e)};
  }
  if (kind == "union") {
    UnionOf u;
    for (const auto& part : need(j, "parts"))
      u.parts.push_back(domain_from_json(part));
    return {std::move(u)};
  }
  if (kind == "seq_range") {
    return {SequenceRange{parse_expr_field(need(j, "expr"), "expr"),
                          need(j, "from").get<long long>()}};
  }
  throw SpecFormatError("kind", "unknown domain kind: " + kind);
}

ordered_json domain_to_json(const DomainSpec& d) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        ordered_json j;
        if constexpr (std::is_same_v<T, Interval>) {
          j["kind"] = "interval";
          j["lo"] = endpoint_to_string(v.lo);
          j["hi"] = endpoint_to_string(v.hi);
          j["lo_open"] = v.lo_open;
          j["hi_open"] = v.hi_open;
        } else if constexpr (std::is_same_v<T, PositiveIntegers>) {
          j["kind"] = "positive_integers";
        } else if constexpr (std::is_same_v<T, ExplicitSet>) {
          j["kind"] = "explicit";
          j["points"] = v.points;
        } else if constexpr (std::is_same_v<T, SequenceRange>) {
          j["kind"] = "seq_range";
          j["expr"] = v.expr.str();
          j["from"] = v.from;
        } else {
          j["kind"] = "union";
          ordered_json parts = ordered_json::array();
          for (const auto& p : v.parts) parts.push_back(domain_to_json(p));
          j["parts"] = std::move(parts);
        }
        return j;
      },
      d.variant());
}

SpaceSpec space_from_json(const ordered_json& j) {
  if (!j.is_object()) throw SpecFormatError("space", "space must be an object");
  Family family;
  try {
    family = family_from_name(need(j, "family").get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SpecFormatError("family", e.what());
  }
  MetricKind metric = MetricKind::Euclidean1D;
  if (family == Family::Standard) {
    const std::string m = need(j, "metric").get<std::string>();
    if (m == "euclidean") {
      metric = MetricKind::Euclidean1D;
    } else if (m == "discrete") {
      metric = MetricKind::Discrete;
    } else {
      throw SpecFormatError("metric", "unknown metric: " + m);
    }
  }
  TNormKind tnorm = TNormKind::Product;
  if (j.contains("tnorm")) {
    try {
      tnorm = tnorm_from_name(j["tnorm"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SpecFormatError("tnorm", e.what());
    }
  }
  try {
    return make_space(family, domain_from_json(need(j, "domain")), metric,
                      tnorm);
  } catch (const std::invalid_argument& e) {
    throw SpecFormatError("tnorm", e.what());
  }
}

ordered_json space_to_json(const SpaceSpec& s) {
  ordered_json j;
  j["family"] = family_name(s.family);
  if (s.family == Family::Standard)
    j["metric"] = s.metric == MetricKind::Euclidean1D ? "euclidean" : "discrete";
  j["domain"] = domain_to_json(s.domain);
  j["tnorm"] = tnorm_name(s.tnorm);
  return j;
}

SequenceSpec sequence_from_json(const ordered_json& j) {
  if (!j.is_object())
    throw SpecFormatError("sequence", "sequence must be an object");
  const std::string kind = need(j, "kind").get<std::string>();
  if (kind == "formula")
    return {Formula{parse_expr_field(need(j, "expr"), "expr")}};
  if (kind == "interleave")
    return {Interleave{parse_expr_field(need(j, "a"), "a"),
                       parse_expr_field(need(j, "b"), "b")}};
  if (kind == "explicit") {
    Explicit e;
    for (const auto& p : need(j, "points")) e.points.push_back(p.get<double>());
    return {std::move(e)};
  }
  throw SpecFormatError("kind", "unknown sequence kind: " + kind);
}

ordered_json sequence_to_json(const SequenceSpec& s) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        ordered_json j;
        if constexpr (std::is_same_v<T, Formula>) {
          j["kind"] = "formula";
          j["expr"] = v.expr.str();
        } else if constexpr (std::is_same_v<T, Interleave>) {
          j["kind"] = "interleave";
          j["a"] = v.a.str();
          j["b"] = v.b.str();
        } else {
          j["kind"] = "explicit";
          j["points"] = v.points;
        }
        return j;
      },
      s.variant());
}

Cover cover_from_json(const ordered_json& j) {
  Cover c;
  for (const auto& set : need(j, "sets")) {
    CoverSet cs;
    cs.name = need(set, "name").get<std::string>();
    for (const auto& p : need(set, "points")) cs.points.push_back(p.get<double>());
    c.sets.push_back(std::move(cs));
  }
  return c;
}

ordered_json cover_to_json(const Cover& c) {
  ordered_json sets = ordered_json::array();
  for (const auto& s : c.sets) {
    ordered_json js;
    js["name"] = s.name;
    js["points"] = s.points;
    sets.push_back(std::move(js));
  }
  ordered_json j;
  j["sets"] = std::move(sets);
  return j;
}

ordered_json witness_to_json(const Witness& w) {
  ordered_json j;
  j["indices"] = w.indices;
  j["points"] = w.points;
  j["values"] = w.values;
  ordered_json params = ordered_json::array();
  for (const auto& p : w.params) params.push_back({p[0], p[1]});
  j["params"] = std::move(params);
  return j;
}

ordered_json verdict_to_json(const Verdict& v) {
  ordered_json j;
  j["status"] = to_string(v.status);
  j["note"] = v.note;
  return j;
}

ordered_json oracle_to_json(const OracleVerdict& v) {
  ordered_json j;
  j["status"] = to_string(v.status);
  if (v.has_certificate) {
    ordered_json cert;
    cert["kind"] = to_string(v.certificate.kind);
    switch (v.certificate.kind) {
      case CertificateKind::OffDiagonalSupBound:
        cert["bound"] = v.certificate.bound;
        break;
      case CertificateKind::DivergentPseudoCauchy:
        cert["seq"] = sequence_to_json(v.certificate.seq);
        break;
      case CertificateKind::ShrinkingPairGap:
        cert["pair_a"] = v.certificate.pair_a.str();
        cert["pair_b"] = v.certificate.pair_b.str();
        break;
      case CertificateKind::CompactTail: {
        cert["tail"] = {v.certificate.tail_lo, v.certificate.tail_hi};
        ordered_json seqs = ordered_json::array();
        for (const auto& s : v.certificate.tail_seqs)
          seqs.push_back(sequence_to_json(s));
        cert["seqs"] = std::move(seqs);
        break;
      }
      default:
        break;
    }
    if (v.certificate.by_analogy) cert["by_analogy"] = true;
    j["certificate"] = std::move(cert);
  }
  j["source"] = v.source;
  return j;
}

std::string report_line(const std::string& check, const ordered_json& params,
                        const Verdict& verdict, long long elapsed_ms) {
  ordered_json j;
  j["check"] = check;
  j["params"] = params;
  j["verdict"] = verdict_to_json(verdict);
  j["witness"] = witness_to_json(verdict.witness);
  j["elapsed_ms"] = elapsed_ms;
  return j.dump();
}

namespace {

ordered_json load_json_file(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in)
    throw SpecFormatError("file", std::string("cannot open ") + what +
                                      " file: " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SpecFormatError("file", std::string("malformed JSON in ") + path +
                                      ": " + e.what());
  }
  return j;
}

}  // namespace

SpaceSpec load_space_file(const std::string& path) {
  return space_from_json(load_json_file(path, "space"));
}

Cover load_cover_file(const std::string& path) {
  return cover_from_json(load_json_file(path, "cover"));
}

}  // namespace fuzmet
