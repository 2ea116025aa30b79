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

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzmet/classify.hpp"
#include "fuzmet/covers.hpp"
#include "fuzmet/jsonio.hpp"
#include "fuzmet/oracle.hpp"
#include "fuzmet/scan.hpp"

namespace {

using fuzmet::ordered_json;

constexpr long long kDefaultSeed = 1299093;

struct GlobalOpts {
  long long seed = kDefaultSeed;
  bool json = false;
  bool timing = false;
  double tol = 1e-9;
  std::ostream* out = &std::cout;
};

class Reporter {
 public:
  explicit Reporter(const GlobalOpts& opts) : opts_(opts) {}

  void emit(const std::string& check, const ordered_json& params,
            const fuzmet::Verdict& verdict, long long elapsed_ms) {
    worst_ = fuzmet::worse(worst_, verdict.status);
    // timing is opt-in so that default output is byte-reproducible
    long long ms = opts_.timing ? elapsed_ms : 0;
    if (opts_.json) {
      (*opts_.out) << fuzmet::report_line(check, params, verdict, ms) << "\n";
    } else {
      (*opts_.out) << check << ": " << fuzmet::to_string(verdict.status);
      if (!verdict.note.empty()) (*opts_.out) << " (" << verdict.note << ")";
      (*opts_.out) << "\n";
    }
  }

  int exit_code() const { return fuzmet::exit_code(worst_); }
  fuzmet::Status worst() const { return worst_; }

 private:
  const GlobalOpts& opts_;
  fuzmet::Status worst_ = fuzmet::Status::Holds;
};

class Timer {
 public:
  long long ms() const {
    auto now = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::vector<double> parse_points_arg(const std::string& arg) {
  ordered_json j;
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw fuzmet::SpecFormatError("points", "cannot open " + arg.substr(1));
    in >> j;
  } else {
    j = ordered_json::parse(arg);
  }
  std::vector<double> out;
  for (const auto& v : j) out.push_back(v.get<double>());
  return out;
}

fuzmet::Resolution make_resolution(const std::vector<double>& eps_grid,
                                   const std::vector<double>& t_grid,
                                   long long k, long long window, double tol) {
  fuzmet::Resolution res;
  if (!eps_grid.empty()) res.eps_grid = eps_grid;
  if (!t_grid.empty()) res.t_grid = t_grid;
  res.k = k;
  res.N = window;
  res.tol = tol;
  res.eps = res.eps_grid.front();
  res.t = t_grid.empty() ? 1.0 : t_grid.front();
  res.validate();
  return res;
}

std::string fixtures_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("FUZMET_FIXTURES")) return env;
  return "fixtures";
}

/// Working sample {n} u {n + 1/n} for n <= nmax, integers first, duplicates
/// dropped (1 + 1/1 collides with the integer 2).
std::vector<double> integer_fraction_sample(long long nmax) {
  std::vector<double> pts;
  for (long long n = 1; n <= nmax; ++n) pts.push_back(static_cast<double>(n));
  for (long long n = 1; n <= nmax; ++n) {
    double v = static_cast<double>(n) + 1.0 / static_cast<double>(n);
    if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
  }
  return pts;
}

// ---------------------------------------------------------------------------
// subcommand bodies

int run_axioms(const GlobalOpts& g, const std::string& space_file,
               int samples) {
  Reporter rep(g);
  fuzmet::SpaceSpec space = fuzmet::load_space_file(space_file);

  Timer t1;
  fuzmet::Verdict tv = fuzmet::check_tnorm_axioms(space.tnorm, 11);
  ordered_json tparams;
  tparams["tnorm"] = fuzmet::tnorm_name(space.tnorm);
  tparams["grid_size"] = 11;
  rep.emit("tnorm_axioms", tparams, tv, t1.ms());

  Timer t2;
  fuzmet::Verdict gv = fuzmet::check_gv_axioms(
      space, samples, static_cast<unsigned long long>(g.seed), g.tol);
  ordered_json gparams;
  gparams["space"] = fuzmet::space_to_json(space);
  gparams["samples"] = samples;
  gparams["seed"] = g.seed;
  gparams["tol"] = g.tol;
  rep.emit("gv_axioms", gparams, gv, t2.ms());
  return rep.exit_code();
}

int run_classify(const GlobalOpts& g, const std::string& space_file,
                 const std::string& seq_json, const std::string& mode,
                 const fuzmet::Resolution& res, bool distinct) {
  Reporter rep(g);
  fuzmet::SpaceSpec space = fuzmet::load_space_file(space_file);
  fuzmet::SequenceSpec seq =
      fuzmet::sequence_from_json(ordered_json::parse(seq_json));

  Timer timer;
  fuzmet::Verdict v;
  if (mode == "cauchy") {
    v = fuzmet::cauchy_verdict(space, seq, res);
  } else if (mode == "gcauchy") {
    v = fuzmet::g_cauchy_verdict(space, seq, res);
  } else if (mode == "pseudocauchy") {
    v = fuzmet::pseudo_cauchy_verdict(space, seq, res, distinct);
  } else {
    throw CLI::ValidationError("--mode", "unknown mode " + mode);
  }
  ordered_json params;
  params["space"] = fuzmet::space_to_json(space);
  params["seq"] = fuzmet::sequence_to_json(seq);
  params["mode"] = mode;
  params["eps_grid"] = res.eps_grid;
  params["t_grid"] = res.t_grid;
  params["k"] = res.k;
  params["window"] = res.N;
  if (mode == "pseudocauchy") params["distinct"] = distinct;
  rep.emit("classify_" + mode, params, v, timer.ms());
  return rep.exit_code();
}

int run_cluster(const GlobalOpts& g, const std::string& space_file,
                const std::string& seq_json, double candidate,
                const fuzmet::Resolution& res) {
  Reporter rep(g);
  fuzmet::SpaceSpec space = fuzmet::load_space_file(space_file);
  fuzmet::SequenceSpec seq =
      fuzmet::sequence_from_json(ordered_json::parse(seq_json));
  Timer timer;
  fuzmet::Verdict v = fuzmet::cluster_evidence(space, seq, candidate, res);
  ordered_json params;
  params["space"] = fuzmet::space_to_json(space);
  params["seq"] = fuzmet::sequence_to_json(seq);
  params["candidate"] = candidate;
  params["window"] = res.N;
  rep.emit("cluster", params, v, timer.ms());
  return rep.exit_code();
}

std::vector<double> resolve_sample(const GlobalOpts& g,
                                   const fuzmet::SpaceSpec& space,
                                   const std::string& sample_arg,
                                   int sample_count) {
  if (!sample_arg.empty()) return parse_points_arg(sample_arg);
  return space.domain.sample(sample_count,
                             static_cast<unsigned long long>(g.seed));
}

int run_refine(const GlobalOpts& g, const std::string& space_file,
               const std::string& cover_arg, const std::string& sample_arg,
               int sample_count, const std::vector<double>& r_grid,
               const std::vector<double>& t_grid) {
  Reporter rep(g);
  fuzmet::SpaceSpec space = fuzmet::load_space_file(space_file);
  std::vector<double> sample = resolve_sample(g, space, sample_arg, sample_count);
  fuzmet::Cover cover = cover_arg == "singletons"
                            ? fuzmet::singleton_cover(sample)
                            : fuzmet::load_cover_file(cover_arg);
  Timer timer;
  ordered_json params;
  params["space"] = fuzmet::space_to_json(space);
  params["sample_size"] = sample.size();
  params["cover_sets"] = cover.sets.size();
  params["r_grid"] = r_grid;
  params["t_grid"] = t_grid;
  if (r_grid.size() == 1 && t_grid.size() == 1) {
    fuzmet::Verdict v = fuzmet::refinement_check(space, sample, cover,
                                                 r_grid.front(), t_grid.front());
    rep.emit("refine", params, v, timer.ms());
  } else {
    fuzmet::Verdict v =
        fuzmet::lebesgue_search(space, sample, cover, r_grid, t_grid);
    rep.emit("lebesgue_search", params, v, timer.ms());
  }
  return rep.exit_code();
}

int run_equinormal(const GlobalOpts& g, const std::string& space_file,
                   const std::string& b_arg, const std::string& c_arg,
                   double s) {
  Reporter rep(g);
  fuzmet::SpaceSpec space = fuzmet::load_space_file(space_file);
  std::vector<double> B = parse_points_arg(b_arg);
  std::vector<double> C = parse_points_arg(c_arg);
  Timer timer;
  fuzmet::EquinormEstimate est =
      fuzmet::equinormality_estimate(space, B, C, s);
  fuzmet::Verdict v;
  v.status = est.sup < 1.0 ? fuzmet::Status::Holds : fuzmet::Status::Fails;
  v.witness.points = {est.arg_b, est.arg_c};
  v.witness.values = {est.sup};
  v.witness.params.push_back({0.0, s});
  v.note = "sample sup (lower bound for the true sup over infinite sets)";
  ordered_json params;
  params["space"] = fuzmet::space_to_json(space);
  params["b_size"] = B.size();
  params["c_size"] = C.size();
  params["s"] = s;
  rep.emit("equinormal", params, v, timer.ms());
  return rep.exit_code();
}

int run_net(const GlobalOpts& g, const std::string& space_file,
            const std::string& sample_arg, int sample_count, double r,
            double t) {
  Reporter rep(g);
  fuzmet::SpaceSpec space = fuzmet::load_space_file(space_file);
  std::vector<double> sample = resolve_sample(g, space, sample_arg, sample_count);
  Timer timer;
  std::vector<double> centers = fuzmet::precompact_net(space, sample, r, t);
  fuzmet::Verdict v;
  v.status = fuzmet::Status::Holds;
  v.witness.points = centers;
  v.witness.indices = {static_cast<long long>(centers.size())};
  v.witness.params.push_back({r, t});
  v.note = "greedy net of size " + std::to_string(centers.size());
  if (space.family == fuzmet::Family::Standard) {
    double eps = t * r / (1.0 - r);
    std::vector<double> mnet = fuzmet::metric_net(space.metric, sample, eps);
    v.note += "; metric eps-net size " + std::to_string(mnet.size()) +
              " at eps=" + std::to_string(eps);
  }
  ordered_json params;
  params["space"] = fuzmet::space_to_json(space);
  params["sample_size"] = sample.size();
  params["r"] = r;
  params["t"] = t;
  rep.emit("net", params, v, timer.ms());
  return rep.exit_code();
}

int run_oracle(const GlobalOpts& g, const std::string& space_file,
               bool replay, const fuzmet::Resolution& res) {
  Reporter rep(g);
  fuzmet::SpaceSpec space = fuzmet::load_space_file(space_file);
  Timer timer;
  fuzmet::OracleVerdict ov = fuzmet::family_lebesgue_oracle(space);
  fuzmet::Verdict v;
  v.status = ov.status == fuzmet::LebesgueStatus::Unknown
                 ? fuzmet::Status::Inconclusive
                 : fuzmet::Status::Holds;
  v.note = std::string(fuzmet::to_string(ov.status)) +
           (ov.source.empty() ? "" : " [" + ov.source + "]");
  ordered_json params;
  params["space"] = fuzmet::space_to_json(space);
  params["oracle"] = fuzmet::oracle_to_json(ov);
  rep.emit("oracle", params, v, timer.ms());
  if (replay && ov.status != fuzmet::LebesgueStatus::Unknown) {
    Timer t2;
    fuzmet::Verdict cv = fuzmet::certificate_check(space, ov, res);
    ordered_json cparams;
    cparams["certificate"] = fuzmet::to_string(ov.certificate.kind);
    rep.emit("certificate_replay", cparams, cv, t2.ms());
  }
  return rep.exit_code();
}

// the examples reproduction matrix -----------------------------------------

fuzmet::Resolution row_resolution(const std::string& name) {
  fuzmet::Resolution res;
  res.N = 1000;
  if (name == "stationary_ratio" || name == "shifted_ratio") res.N = 10000;
  if (name == "reciprocal_product") res.N = 2000;
  return res;
}

struct MatrixRow {
  std::string name;
  bool ok = false;
  std::string lebesgue;
  std::string certificate;
  std::string replay;
  std::string weak_g;
  std::string compact;
  std::string detail;
};

MatrixRow run_matrix_row(const fuzmet::CatalogRow& row,
                         const std::string& fixture_path) {
  MatrixRow out;
  out.name = row.name;
  fuzmet::SpaceSpec space = fuzmet::load_space_file(fixture_path);

  fuzmet::OracleVerdict ov = fuzmet::family_lebesgue_oracle(space);
  if (ov.status != row.lebesgue) {
    out.lebesgue = fuzmet::to_string(ov.status);
    out.detail = "oracle status does not match the catalog (tampered fixture?)";
    return out;
  }
  out.lebesgue = row.lebesgue == fuzmet::LebesgueStatus::Lebesgue ? "yes" : "no";
  out.certificate = fuzmet::to_string(ov.certificate.kind);
  out.compact = row.compact ? "yes" : "no";
  out.weak_g = row.weak_g_complete ? "yes" : "no";

  fuzmet::Resolution res = row_resolution(row.name);
  fuzmet::Verdict replay = fuzmet::certificate_check(space, ov, res);
  out.replay = fuzmet::to_string(replay.status);
  if (replay.status != fuzmet::Status::Holds) {
    out.detail = "certificate replay failed: " + replay.note;
    return out;
  }

  // weak-G spot checks on the catalogued counterexample families
  if (row.name == "stationary_ratio" || row.name == "shifted_ratio") {
    fuzmet::SequenceSpec nat{fuzmet::Formula{fuzmet::Expr::parse("n")}};
    fuzmet::Verdict gc = fuzmet::g_cauchy_verdict(space, nat, res);
    fuzmet::Verdict cl = fuzmet::cluster_evidence(space, nat, 1.0, res);
    if (gc.status != fuzmet::Status::Holds ||
        cl.status != fuzmet::Status::Fails) {
      out.detail = "weak-G counterexample did not reproduce";
      return out;
    }
  }
  if (row.name == "weak_g_example") {
    fuzmet::SequenceSpec geo{fuzmet::Formula{fuzmet::Expr::parse("1/2^n")}};
    fuzmet::Resolution gres = res;
    gres.N = 256;  // avoid denormal underflow of 1/2^n deep in the window
    fuzmet::Verdict gc = fuzmet::g_cauchy_verdict(space, geo, gres);
    if (gc.status != fuzmet::Status::Fails) {
      out.detail = "geometric sequence should show a consecutive-gap floor";
      return out;
    }
  }
  if (row.name == "ex27") {
    std::vector<double> sample = integer_fraction_sample(200);
    fuzmet::Verdict ls = fuzmet::lebesgue_search(
        space, sample, fuzmet::singleton_cover(sample),
        {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}, {0.1, 1.0, 10.0});
    if (ls.status != fuzmet::Status::Fails) {
      out.detail = "singleton cover unexpectedly refined";
      return out;
    }
  }
  out.ok = true;
  return out;
}

int run_examples(const GlobalOpts& g, const std::string& fixtures_flag,
                 const std::string& out_dir) {
  std::string dir = fixtures_dir(fixtures_flag);
  std::ostream& os = *g.out;
  std::ofstream file_out;
  std::unique_ptr<std::ostream> keep;
  std::ostream* sink = &os;
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    file_out.open(out_dir + "/examples.jsonl");
    if (!file_out) {
      std::cerr << "error: cannot write to " << out_dir << "\n";
      return 3;
    }
  }

  std::vector<MatrixRow> rows;
  for (const auto& cat : fuzmet::catalog()) {
    std::string path = dir + "/" + cat.name + ".json";
    if (!std::filesystem::exists(path)) {
      std::cerr << "error: missing fixture " << path << "\n";
      return 3;
    }
    rows.push_back(run_matrix_row(cat, path));
  }

  // bridge spot check: random formula sequences over the standard family
  fuzmet::DomainSpec line{fuzmet::Interval{
      -std::numeric_limits<double>::infinity(),
      std::numeric_limits<double>::infinity(), true, true}};
  fuzmet::Resolution bres;
  bres.N = 200;
  std::mt19937_64 rng(static_cast<unsigned long long>(g.seed));
  int bridge_ok = 0, bridge_total = 20;
  const std::vector<std::string> pool = {
      "n", "1/n", "n+1/n", "1/2^n", "n/(n+1)", "2*n", "1/(n*n)", "n-1/n"};
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < bridge_total; ++i) {
    fuzmet::SequenceSpec seq{
        fuzmet::Formula{fuzmet::Expr::parse(pool[pick(rng)])}};
    fuzmet::Verdict v = fuzmet::metric_bridge_check(
        fuzmet::MetricKind::Euclidean1D, line, seq, bres);
    if (v.status == fuzmet::Status::Holds) ++bridge_ok;
  }
  bool bridge_pass = bridge_ok == bridge_total;

  // consistency rows over the matrix: Lebesgue => weak-G, and
  // precompact+weak-G => Lebesgue
  bool consistent = true;
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& cat = fuzmet::catalog()[i];
    bool lebesgue = cat.lebesgue == fuzmet::LebesgueStatus::Lebesgue;
    if (lebesgue && !cat.weak_g_complete) consistent = false;
    if (cat.compact && cat.weak_g_complete && !lebesgue) consistent = false;
    if (cat.lebesgue == fuzmet::LebesgueStatus::NotLebesgue && cat.compact)
      consistent = false;
  }

  bool all_ok = bridge_pass && consistent;
  for (const auto& r : rows) all_ok = all_ok && r.ok;

  auto emit = [&](const std::string& line_text) {
    (*sink) << line_text << "\n";
    if (file_out.is_open()) file_out << line_text << "\n";
  };

  if (g.json) {
    for (const auto& r : rows) {
      ordered_json j;
      j["family"] = r.name;
      j["compact"] = r.compact;
      j["lebesgue"] = r.lebesgue;
      j["weak_g"] = r.weak_g;
      j["certificate"] = r.certificate;
      j["replay"] = r.replay;
      j["ok"] = r.ok;
      if (!r.detail.empty()) j["detail"] = r.detail;
      emit(j.dump());
    }
    ordered_json summary;
    summary["check"] = "examples";
    summary["rows"] = rows.size();
    summary["bridge"] = bridge_pass ? "Holds" : "Fails";
    summary["consistent"] = consistent;
    summary["ok"] = all_ok;
    emit(summary.dump());
  } else {
    emit("family               compact  lebesgue  weak-G  certificate              replay");
    for (const auto& r : rows) {
      char line_buf[160];
      std::snprintf(line_buf, sizeof line_buf, "%-20s %-8s %-9s %-7s %-24s %s",
                    r.name.c_str(), r.compact.c_str(), r.lebesgue.c_str(),
                    r.weak_g.c_str(), r.certificate.c_str(), r.replay.c_str());
      emit(line_buf);
      if (!r.detail.empty()) emit("  ! " + r.detail);
    }
    emit(std::string("bridge property: ") + (bridge_pass ? "Holds" : "Fails"));
    emit(std::string("matrix consistency: ") + (consistent ? "ok" : "violated"));
  }

  for (const auto& r : rows) {
    if (!r.ok) {
      std::cerr << "row failed: " << r.name << ": " << r.detail << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy-metric sequence and cover analysis"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--seed", g.seed, "RNG seed for all sampled checks");
  app.add_flag("--json", g.json, "emit JSON-lines reports");
  app.add_flag("--timing", g.timing, "include measured elapsed_ms (breaks "
                                     "byte-reproducibility)");
  app.add_option("--tol", g.tol, "numeric tolerance");
  bool serial = false;
  app.add_flag("--serial", serial, "force the serial scan kernels");

  // shared classify/cluster options
  std::string space_file, seq_json, mode = "cauchy", cover_arg = "singletons";
  std::string sample_arg, b_arg, c_arg, fixtures_flag, out_dir;
  std::vector<double> eps_grid, t_grid, r_grid{0.5}, t_grid_cover{1.0};
  long long k = 0, window = 1000;
  bool distinct = false, replay = false;
  int samples = 1000, sample_count = 100;
  double candidate = 0.0, s_scale = 1.0, net_r = 0.5, net_t = 1.0;

  auto* ax = app.add_subcommand("axioms", "check t-norm and fuzzy-metric axioms");
  ax->add_option("space", space_file, "space spec JSON file")->required();
  ax->add_option("--samples", samples, "random tuples to draw");

  auto* cl = app.add_subcommand("classify", "classify a sequence");
  cl->add_option("space", space_file)->required();
  cl->add_option("seq", seq_json, "sequence spec JSON")->required();
  cl->add_option("--mode", mode, "cauchy|gcauchy|pseudocauchy")->required();
  cl->add_option("--eps", eps_grid, "epsilon grid");
  cl->add_option("--t", t_grid, "t grid");
  cl->add_option("--k", k, "window start");
  cl->add_option("--window", window, "window end N");
  cl->add_flag("--distinct", distinct, "require distinct terms (pseudocauchy)");

  auto* cu = app.add_subcommand("cluster", "cluster-point evidence");
  cu->add_option("space", space_file)->required();
  cu->add_option("seq", seq_json)->required();
  cu->add_option("--candidate", candidate)->required();
  cu->add_option("--eps", eps_grid);
  cu->add_option("--t", t_grid);
  cu->add_option("--k", k);
  cu->add_option("--window", window);

  auto* rf = app.add_subcommand("refine", "ball-refinement / Lebesgue search");
  rf->add_option("space", space_file)->required();
  rf->add_option("--cover", cover_arg, "cover JSON file or 'singletons'");
  rf->add_option("--sample", sample_arg, "JSON array or @file of points");
  rf->add_option("--sample-count", sample_count, "points to draw if no --sample");
  rf->add_option("--r", r_grid, "radius grid");
  rf->add_option("--t", t_grid_cover, "t grid");

  auto* eq = app.add_subcommand("equinormal", "sample sup of M between two sets");
  eq->add_option("space", space_file)->required();
  eq->add_option("--b", b_arg, "JSON array or @file")->required();
  eq->add_option("--c", c_arg, "JSON array or @file")->required();
  eq->add_option("--s", s_scale, "scale s");

  auto* nt = app.add_subcommand("net", "greedy precompact net");
  nt->add_option("space", space_file)->required();
  nt->add_option("--sample", sample_arg);
  nt->add_option("--sample-count", sample_count);
  nt->add_option("--r", net_r);
  nt->add_option("--t", net_t);

  auto* orc = app.add_subcommand("oracle", "catalogued Lebesgue verdict");
  orc->add_option("space", space_file)->required();
  orc->add_flag("--replay", replay, "replay the certificate numerically");
  orc->add_option("--window", window);

  auto* ex = app.add_subcommand("examples", "reproduce the example matrix");
  ex->add_option("--fixtures", fixtures_flag, "fixture directory");
  ex->add_option("--out", out_dir, "also write reports to this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;  // usage errors are exit code 3
  }
  if (serial) fuzmet::set_exec_mode(fuzmet::ExecMode::Serial);

  try {
    if (ax->parsed()) return run_axioms(g, space_file, samples);
    if (cl->parsed()) {
      return run_classify(g, space_file, seq_json, mode,
                          make_resolution(eps_grid, t_grid, k, window, g.tol),
                          distinct);
    }
    if (cu->parsed()) {
      return run_cluster(g, space_file, seq_json, candidate,
                         make_resolution(eps_grid, t_grid, k, window, g.tol));
    }
    if (rf->parsed()) {
      return run_refine(g, space_file, cover_arg, sample_arg, sample_count,
                        r_grid, t_grid_cover);
    }
    if (eq->parsed()) return run_equinormal(g, space_file, b_arg, c_arg, s_scale);
    if (nt->parsed()) {
      return run_net(g, space_file, sample_arg, sample_count, net_r, net_t);
    }
    if (orc->parsed()) {
      return run_oracle(g, space_file, replay,
                        make_resolution({}, {}, 0, window, g.tol));
    }
    if (ex->parsed()) return run_examples(g, fixtures_flag, out_dir);
  } catch (const fuzmet::SpecFormatError& e) {
    std::cerr << "error in field '" << e.field << "': " << e.what() << "\n";
    return 3;
  } catch (const fuzmet::ParseError& e) {
    std::cerr << "expression syntax error: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "malformed JSON: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
