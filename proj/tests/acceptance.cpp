// SPDX-License-Identifier: Apache-2.0
//
// irs-secrecy: secure downlink simulation with an intelligent reflecting surface
// Copyright (C) 2026 The irs-secrecy authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Acceptance run: criteria 1-10, one PASS/FAIL line each.
//
//   acceptance --cache build/acceptance --cli build/tools/irs_secrecy [--only 1,3,5]
//
// The 10000-sample dataset is reused from the cache directory when its
// header matches the default configuration, and generated there otherwise.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "irs/altopt.hpp"
#include "irs/dataset.hpp"
#include "irs/error.hpp"
#include "irs/harness.hpp"
#include "irs/irsopt.hpp"
#include "irs/neural.hpp"
#include "irs/txbf.hpp"

using namespace irs;
namespace fs = std::filesystem;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Context {
  fs::path cache;
  std::string cli;
  std::optional<Dataset> dataset;
  std::vector<sdp::SdpSolution> solved;  // every SDP solved by criteria 2 and 5
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

CVector random_unit(int n, Rng& rng) {
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.complex_normal();
  return v / v.norm();
}

CVector random_phases(int n, Rng& rng) {
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = std::polar(1.0, kTwoPi * rng.uniform());
  return v;
}

const Dataset& dataset(Context& ctx) {
  if (ctx.dataset) return *ctx.dataset;
  ExperimentConfig cfg = ExperimentConfig::from_json(Json::object());
  cfg.out_dir = ctx.cache.string();
  const std::string path = cfg.resolve(cfg.dataset.path);
  bool reuse = false;
  if (fs::exists(path)) {
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    try {
      const DatasetHeader h = parse_header(first);
      reuse = params_to_json(h.params) == params_to_json(cfg.params) && h.count == cfg.dataset.count &&
              h.base_seed == cfg.seed && h.split == cfg.dataset.split && h.max_iter == cfg.altopt.max_iter &&
              h.epsilon == cfg.altopt.epsilon && h.randomization_count == cfg.altopt.randomization_count;
    } catch (const ValidationError&) {
      reuse = false;
    }
  }
  if (!reuse) {
    std::cout << "generating " << cfg.dataset.count << " samples into " << path << "\n" << std::flush;
    gen_dataset(cfg, &std::cerr);
  }
  ctx.dataset = read_dataset(path);
  return *ctx.dataset;
}

// ------------------------------------------------------------------ 1
Outcome scheme_ordering(Context& ctx) {
  ExperimentConfig cfg = ExperimentConfig::from_json(Json::object());
  cfg.out_dir = (ctx.cache / "c1").string();
  cfg.compare.schemes = {kSchemeNoIrs, kSchemeApMev, kSchemeAlternating};
  fs::create_directories(cfg.out_dir);
  const auto t0 = std::chrono::steady_clock::now();
  const CompareResult r = run_comparison(cfg);
  const double minutes = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / 60.0;
  const auto mean = [&](const char* s) { return r.summary.at("schemes").at(s).at("mean").get<double>(); };
  const double alt = mean(kSchemeAlternating);
  const double mev = mean(kSchemeApMev);
  const double none = mean(kSchemeNoIrs);
  return {alt > mev && mev >= none && minutes <= 30.0,
          "means over 200: alternating " + fmt(alt) + " > AP-MEV " + fmt(mev) + " >= no-IRS " + fmt(none) + ", " +
              fmt(minutes) + " min"};
}

// ------------------------------------------------------------------ 2
double grid_optimum(const FractionalQuadratic& fq, int points) {
  const int n = fq.elements();
  CVector phi(n);
  double best = 0.0;
  std::function<void(int)> sweep = [&](int k) {
    if (k == n) {
      best = std::max(best, fq.objective(phi));
      return;
    }
    for (int a = 0; a < points; ++a) {
      phi(k) = std::polar(1.0, kTwoPi * a / points);
      sweep(k + 1);
    }
  };
  sweep(0);
  return best;
}

Outcome phase_step_optimality(Context& ctx) {
  double worst = 1.0;
  int failures = 0;
  for (int i = 0; i < 50; ++i) {
    SystemParams p = SystemParams::defaults();
    p.M = 2;
    p.N = i < 25 ? 1 : 2;
    const std::uint64_t seed = 2000 + static_cast<std::uint64_t>(i);
    Rng rng(seed);
    const ChannelSet ch = sample_channels(p, rng);
    const CVector f = baseline_no_irs(ch, p).f.f;
    const FractionalQuadratic fq = build_fractional(ch, f, p);
    const LiftedSolution sol = solve_relaxation(fq);
    ctx.solved.push_back(sol.sdp);
    Rng draws(derive_seed(seed, kStreamAlternate));
    const double got = fq.objective(gaussian_randomization(sol, fq, 500, draws).phi());
    const double ratio = got / grid_optimum(fq, 720);
    worst = std::min(worst, ratio);
    if (ratio < 0.999) ++failures;
  }
  return {failures == 0, "worst ratio to grid optimum " + fmt(worst) + " over 50 instances (N = 1, 2)"};
}

// ------------------------------------------------------------------ 3
Outcome beamformer_domination(Context&) {
  const SystemParams p = SystemParams::defaults();
  long violations = 0;
  double closest = 0.0;
  for (int i = 0; i < 100; ++i) {
    Rng rng(3000 + static_cast<std::uint64_t>(i));
    const ChannelSet ch = sample_channels(p, rng);
    const RayleighQuotientPair pair = build_rayleigh_pair(ch, random_phases(p.N, rng), p);
    const double best = quotient_value(pair, optimize_beamformer(pair, p.P_t).f);
    for (int t = 0; t < 10000; ++t) {
      // Half on the power sphere, half strictly inside the ball.
      const double radius = t % 2 == 0 ? std::sqrt(p.P_t) : std::sqrt(p.P_t * rng.uniform());
      const double q = quotient_value(pair, (radius * random_unit(p.M, rng)).eval());
      closest = std::max(closest, q / best);
      if (q > best * (1.0 + 1e-12)) ++violations;
    }
  }
  return {violations == 0,
          std::to_string(violations) + " violations in 10^6 draws; best random / optimum " + fmt(closest)};
}

// ------------------------------------------------------------------ 4
Outcome alternating_monotonicity(Context&) {
  const SystemParams p = SystemParams::defaults();
  int non_monotone = 0;
  int not_converged = 0;
  int max_iterations = 0;
  double worst_drop = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t seed = 4000 + static_cast<std::uint64_t>(i);
    Rng rng(seed);
    const ChannelSet ch = sample_channels(p, rng);
    AltOptOptions opts;
    opts.seed = derive_seed(seed, kStreamAlternate);
    const AltOptResult r = alternate(ch, p, opts);
    bool ok = true;
    for (std::size_t k = 1; k < r.trace.size(); ++k) {
      worst_drop = std::max(worst_drop, r.trace[k - 1] - r.trace[k]);
      ok = ok && r.trace[k] >= r.trace[k - 1] - 1e-9;
    }
    if (!ok) ++non_monotone;
    if (!r.converged) ++not_converged;
    max_iterations = std::max(max_iterations, r.iterations);
  }
  return {non_monotone == 0 && not_converged == 0,
          std::to_string(non_monotone) + " non-monotone traces (largest drop " + fmt(worst_drop) + "), " +
              std::to_string(not_converged) + " of 100 not converged within 20 iterations (max " +
              std::to_string(max_iterations) + ")"};
}

// ------------------------------------------------------------------ 5
struct Kkt {
  double gap = 0.0;
  double primal = 0.0;
  double dual = 0.0;
  double complementarity = 0.0;
  double min_eig_x = 0.0;
  double min_eig_s = 0.0;
};

// Residuals recomputed from the returned (X, y, S) and the problem data.
Kkt verify(const sdp::SdpProblem& p, const sdp::SdpSolution& s) {
  Kkt k;
  const double obj = p.C.cwiseProduct(s.X).sum();
  double primal = 0.0;
  RMatrix aty = RMatrix::Zero(p.size(), p.size());
  for (int i = 0; i < p.constraints(); ++i) {
    const RMatrix& a = p.A[static_cast<std::size_t>(i)];
    primal = std::max(primal, std::abs(a.cwiseProduct(s.X).sum() - p.b(i)));
    aty += s.y(i) * a;
  }
  k.gap = std::abs(p.b.dot(s.y) - obj) / (1.0 + std::abs(obj));
  k.primal = primal;
  k.dual = (aty - p.C - s.S).cwiseAbs().maxCoeff() / (1.0 + p.C.cwiseAbs().maxCoeff());
  k.complementarity = s.X.cwiseProduct(s.S).sum() / (1.0 + std::abs(obj));
  k.min_eig_x = Eigen::SelfAdjointEigenSolver<RMatrix>(s.X, Eigen::EigenvaluesOnly).eigenvalues()(0);
  k.min_eig_s = Eigen::SelfAdjointEigenSolver<RMatrix>(s.S, Eigen::EigenvaluesOnly).eigenvalues()(0);
  return k;
}

Outcome sdp_certification(Context& ctx) {
  int kkt_failures = 0;
  Kkt worst;
  for (int i = 0; i < 50; ++i) {
    Rng rng(5000 + static_cast<std::uint64_t>(i));
    sdp::SdpProblem p;
    if (i % 2 == 0) {
      // Unit-diagonal problem with a random symmetric cost.
      const int n = 2 + i % 7;
      RMatrix c(n, n);
      for (double& v : c.reshaped()) v = rng.normal();
      p.C = 0.5 * (c + c.transpose());
      for (int d = 0; d < n; ++d) {
        RMatrix a = RMatrix::Zero(n, n);
        a(d, d) = 1.0;
        p.A.push_back(a);
      }
      p.b = RVector::Ones(n);
    } else {
      SystemParams sp = SystemParams::defaults();
      sp.N = 1 + i % 4;
      const ChannelSet ch = sample_channels(sp, rng);
      p = relaxation_problem(build_fractional(ch, baseline_no_irs(ch, sp).f.f, sp));
    }
    const sdp::SdpSolution s = sdp::solve(p);
    ctx.solved.push_back(s);
    const Kkt k = verify(p, s);
    worst.gap = std::max(worst.gap, k.gap);
    worst.primal = std::max(worst.primal, k.primal);
    worst.dual = std::max(worst.dual, k.dual);
    worst.complementarity = std::max(worst.complementarity, k.complementarity);
    worst.min_eig_x = std::min(worst.min_eig_x, k.min_eig_x);
    worst.min_eig_s = std::min(worst.min_eig_s, k.min_eig_s);
    if (s.status != sdp::SdpStatus::Optimal || k.gap >= 1e-7 || k.primal >= 1e-8 || k.dual >= 1e-8 ||
        k.complementarity >= 1e-7 || k.min_eig_x < -1e-10 || k.min_eig_s < -1e-10) {
      ++kkt_failures;
    }
  }
  int reported_failures = 0;
  for (const sdp::SdpSolution& s : ctx.solved) {
    if (s.status != sdp::SdpStatus::Optimal || std::abs(s.gap) >= 1e-7 * (1.0 + std::abs(s.primal_obj)) ||
        s.primal_residual >= 1e-8) {
      ++reported_failures;
    }
  }
  return {kkt_failures == 0 && reported_failures == 0,
          std::to_string(reported_failures) + " of " + std::to_string(ctx.solved.size()) +
              " solved instances outside tolerance; KKT on 50: gap " + fmt(worst.gap) + ", primal " +
              fmt(worst.primal) + ", dual " + fmt(worst.dual) + ", X.S " + fmt(worst.complementarity)};
}

// ------------------------------------------------------------------ 6
Outcome lifting_equivalence(Context&) {
  const SystemParams p = SystemParams::defaults();
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    Rng rng(6000 + static_cast<std::uint64_t>(i));
    const ChannelSet ch = sample_channels(p, rng);
    const CVector f = std::sqrt(p.P_t * rng.uniform()) * random_unit(p.M, rng);
    const CVector phi = random_phases(p.N, rng);
    const FractionalQuadratic fq = build_fractional(ch, f, p);
    CVector v(p.N + 1);
    v << phi, cplx(1.0);
    const double direct = snr_ratio(ch, f, phi, p);
    worst = std::max(worst, std::abs(fq.objective(phi) - direct) / direct);
    worst = std::max(worst, std::abs(fq.lifted_objective(v * v.adjoint()) - direct) / direct);
  }
  return {worst <= 1e-10, "largest relative deviation " + fmt(worst) + " over 100 pairs"};
}

// ------------------------------------------------------------------ 7
Outcome backprop(Context&) {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    Rng rng(7000 + static_cast<std::uint64_t>(i));
    nn::TrainConfig cfg;
    cfg.hidden.clear();
    const int depth = 1 + i % 3;
    for (int d = 0; d < depth; ++d) cfg.hidden.push_back(3 + static_cast<int>(rng.uniform() * 5));
    cfg.batch_norm = i % 4 != 3;
    cfg.input_bn_epsilon = 1e-5;
    const int in = 2 + i % 5;
    const int out = 1 + i % 3;
    nn::MlpModel m = nn::MlpModel::build(in, out, cfg, rng);
    for (auto& l : m.layers) {
      if (auto* bn = std::get_if<nn::BatchNormLayer>(&l)) {
        for (double& g : bn->gamma) g = 0.5 + rng.uniform();
        for (double& b : bn->beta) b = 0.1 * rng.normal();
      }
      // Nonzero biases keep pre-activations off the ReLU kink for rows where a whole layer is off.
      if (auto* d = std::get_if<nn::DenseLayer>(&l)) {
        for (double& b : d->b) b = 0.1 * rng.normal();
      }
    }
    nn::Matrix x(8, in);
    nn::Matrix t(8, out);
    for (double& v : x.data) v = rng.normal();
    for (double& v : t.data) v = rng.normal();
    worst = std::max(worst, nn::gradient_check(m, x, t, 1e-5));
  }
  return {worst < 1e-4, "largest relative gradient error " + fmt(worst) + " over 20 models"};
}

// ------------------------------------------------------------------ 8
void write_history(const fs::path& dir, const OverfitCase& c) {
  std::ofstream(dir / ("history_" + c.name + ".json"))
      << history_json(c.name, c.history, c.train_size, c.test_size, c.config).dump(2) << "\n";
}

Outcome overfitting(Context& ctx) {
  const Dataset& ds = dataset(ctx);
  nn::TrainConfig base;
  const fs::path dir = ctx.cache / "c8";
  fs::create_directories(dir);
  const OverfitCase small4 = run_overfit_case(ds, 100, 4, 0, base);
  write_history(dir, small4);
  const OverfitCase large4 = run_overfit_case(ds, 9000, 4, 0, base);
  write_history(dir, large4);
  const OverfitCase large2 = run_overfit_case(ds, 9000, 2, 0, base);
  write_history(dir, large2);
  const OverfitCase early2 = run_overfit_case(ds, 9000, 2, 110, base);
  write_history(dir, early2);

  const bool size_trend = large4.final_test_loss() < small4.final_test_loss();
  const bool depth_trend = large2.final_test_loss() <= large4.final_test_loss();
  const bool early = early2.history.epochs.size() == 110 && early2.final_test_loss() <= large2.final_test_loss();
  return {size_trend && depth_trend && early,
          "test MSE 9000/4 " + fmt(large4.final_test_loss()) + " vs 100/4 " + fmt(small4.final_test_loss()) +
              "; 9000/2 " + fmt(large2.final_test_loss()) + "; early stop " +
              std::to_string(early2.history.epochs.size()) + " epochs, " + fmt(early2.final_test_loss())};
}

// ------------------------------------------------------------------ 9
Outcome learned_phases(Context& ctx) {
  const Dataset& ds = dataset(ctx);
  ExperimentConfig cfg = ExperimentConfig::from_json(Json::object());
  const std::vector<nn::Sample> train_set = ds.train_samples();
  const std::vector<nn::Sample> test_set = ds.test_samples();
  const nn::TrainResult tr = nn::train(train_set, test_set, cfg.train);
  nn::save_checkpoint((ctx.cache / "model.json").string(), tr.model, tr.config);

  const std::vector<DatasetRecord> held(ds.records.begin() + static_cast<std::ptrdiff_t>(ds.header.train_count),
                                        ds.records.end());
  const HeldOutReport r = evaluate_held_out(tr.model, cfg.train.encoding, held, ds.header.params);
  const bool pass = r.count == 1000 && r.mean_supervised >= 0.85 * r.mean_no_irs &&
                    r.mean_supervised <= r.mean_alternating + 1e-9;
  return {pass, "held-out " + std::to_string(r.count) + ": supervised " + fmt(r.mean_supervised) + ", no-IRS " +
                    fmt(r.mean_no_irs) + " (ratio " + fmt(r.mean_supervised / r.mean_no_irs) + "), alternating " +
                    fmt(r.mean_alternating)};
}

// ------------------------------------------------------------------ 10
std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome determinism(Context& ctx) {
  const fs::path dir = ctx.cache / "c10";
  fs::remove_all(dir);
  fs::create_directories(dir);
  Json cfg{{"seed", 1}, {"compare", {{"realizations", 20}}}};
  const fs::path model = ctx.cache / "model.json";
  if (fs::exists(model)) {
    cfg["checkpoint"] = model.string();
  } else {
    cfg["compare"]["schemes"] = {kSchemeNoIrs, kSchemeApMev, kSchemeAlternating};
  }
  std::ofstream(dir / "cfg.json") << cfg.dump(2);
  for (const char* run : {"a", "b"}) {
    const std::string cmd = ctx.cli + " compare --config " + (dir / "cfg.json").string() + " --out " +
                            (dir / run).string() + " > " + (dir / run).string() + ".log 2>&1";
    const int status = std::system(cmd.c_str());
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return {false, std::string("compare run ") + run + " failed"};
  }
  const bool csv = slurp(dir / "a" / "results.csv") == slurp(dir / "b" / "results.csv");
  const bool json = slurp(dir / "a" / "summary.json") == slurp(dir / "b" / "summary.json");
  return {csv && json, std::string("results.csv ") + (csv ? "identical" : "differs") + ", summary.json " +
                           (json ? "identical" : "differs") + (fs::exists(model) ? ", all four schemes" : "")};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  Context ctx;
  std::string cache = "acceptance";
  std::vector<int> only;
  app.add_option("--cache", cache, "Directory for the dataset and run outputs");
  app.add_option("--cli", ctx.cli, "Path to the irs_secrecy executable")->required();
  app.add_option("--only", only, "Criteria to run (default: all)")->delimiter(',');
  CLI11_PARSE(app, argc, argv);
  ctx.cache = cache;
  fs::create_directories(ctx.cache);

  using Check = Outcome (*)(Context&);
  // 5 runs after 2 so it also audits the relaxations solved there.
  const std::vector<std::pair<int, Check>> order = {
      {1, scheme_ordering}, {2, phase_step_optimality}, {3, beamformer_domination}, {4, alternating_monotonicity},
      {5, sdp_certification}, {6, lifting_equivalence}, {7, backprop}, {8, overfitting},
      {9, learned_phases}, {10, determinism}};
  const std::set<int> selected(only.begin(), only.end());

  int failed = 0;
  for (const auto& [id, check] : order) {
    if (!selected.empty() && !selected.contains(id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check(ctx);
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail << ") [" << fmt(secs)
              << " s]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
