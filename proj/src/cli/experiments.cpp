// Copyright 2026 The rqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rqc/cli/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "rqc/bounds.hpp"
#include "rqc/channel.hpp"
#include "rqc/gaussian_model.hpp"
#include "rqc/moments.hpp"
#include "rqc/mps.hpp"
#include "rqc/random.hpp"
#include "rqc/spectral.hpp"
#include "rqc/stats.hpp"
#include "rqc/superoperator.hpp"

namespace rqc::cli {
namespace {

// A trial's row plus whether its sample passed the structural checks.
struct TrialRow {
  std::vector<Cell> cells;
  bool invariants_hold = true;
};

using TrialFn = std::function<TrialRow(long)>;

// Runs trials 0..count-1 on `threads` workers. Results come back in trial
// order. On failure, trials after the first failing index are dropped, so
// the kept prefix is the same for any thread count.
void run_trials(long count, unsigned threads, const TrialFn& fn,
                RunReport& report) {
  std::vector<std::optional<TrialRow>> rows(static_cast<std::size_t>(count));
  std::vector<std::string> errors(static_cast<std::size_t>(count));
  std::atomic<long> next{0};
  std::atomic<long> first_failure{std::numeric_limits<long>::max()};

  const auto worker = [&] {
    for (;;) {
      const long t = next.fetch_add(1);
      if (t >= count || t > first_failure.load()) return;
      try {
        rows[static_cast<std::size_t>(t)] = fn(t);
      } catch (const std::exception& e) {
        errors[static_cast<std::size_t>(t)] = e.what();
        long seen = first_failure.load();
        while (t < seen && !first_failure.compare_exchange_weak(seen, t)) {
        }
      }
    }
  };
  const unsigned n_workers =
      static_cast<unsigned>(std::min<long>(std::max(1u, threads), count));
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  const long stop = std::min(first_failure.load(), count);
  for (long t = 0; t < stop; ++t) {
    TrialRow& row = *rows[static_cast<std::size_t>(t)];
    report.invariants_hold = report.invariants_hold && row.invariants_hold;
    report.table.add_row(std::move(row.cells));
  }
  if (stop < count) {
    report.truncated = true;
    report.errors.push_back("trial " + std::to_string(stop) + ": " +
                            errors[static_cast<std::size_t>(stop)]);
  }
}

Cell opt_cell(const std::optional<double>& v) {
  return v ? Cell(*v) : Cell(std::monostate{});
}

Cell flag(bool b) { return Cell(static_cast<std::int64_t>(b ? 1 : 0)); }

// Column of doubles from a finished table (skipping non-double cells).
std::vector<double> column(const Table& table, const std::string& name) {
  const auto it = std::find(table.columns.begin(), table.columns.end(), name);
  std::vector<double> out;
  if (it == table.columns.end()) return out;
  const auto c = static_cast<std::size_t>(it - table.columns.begin());
  for (const auto& row : table.rows) {
    if (const auto* v = std::get_if<double>(&row[c])) out.push_back(*v);
  }
  return out;
}

// Returns the bound value, or nothing where it is undefined (e.g. k < lambda).
std::optional<double> try_bound(const std::function<double()>& f) {
  try {
    return f();
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

nlohmann::json opt_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

Representation resolve_mode(const ExperimentConfig& c, Index d,
                            const SpectralOptions& spectral) {
  switch (c.mode) {
    case Mode::kDense:
      return Representation::kDense;
    case Mode::kMatrixFree:
      return Representation::kMatrixFree;
    case Mode::kAuto:
      break;
  }
  // Dense only pays off when the dense solvers are used.
  const Index big = std::max(c.n * c.n, d * d);
  return big <= spectral.dense_solver_limit ? Representation::kDense
                                            : Representation::kMatrixFree;
}

AnalyzeOptions analyze_options(const ExperimentConfig& c, Index d) {
  AnalyzeOptions o;
  o.spectral.tol = c.tol;
  o.spectral.max_iter = c.max_iter;
  o.representation = resolve_mode(c, d, o.spectral);
  o.second_eigenvalue = c.lambda2;
  o.entropy = c.entropy;
  return o;
}

void run_gap(const ExperimentConfig& c, RunReport& report) {
  report.table.columns = {"trial", "n", "d", "k", "f", "s1", "s2",
                          "restricted_norm", "lambda2_abs", "entropy",
                          "iterations", "converged", "gap_below_resolution",
                          "invariants_hold"};
  const AnalyzeOptions opts = analyze_options(c, c.d);
  run_trials(c.trials, c.threads, [&](long t) {
    Rng rng = make_stream(c.seed, static_cast<std::uint64_t>(t));
    const ChannelSample sample = ChannelSample::draw(c.n, c.d, c.k, rng);
    const SpectralReport r = analyze(sample, opts, rng);
    return TrialRow{{static_cast<std::int64_t>(t), static_cast<std::int64_t>(c.n),
                     static_cast<std::int64_t>(c.d), static_cast<std::int64_t>(c.k),
                     r.f, r.s1, r.s2, r.restricted_norm, opt_cell(r.lambda2_abs),
                     opt_cell(r.fixed_point_entropy),
                     static_cast<std::int64_t>(r.iterations), flag(r.converged),
                     flag(r.gap_below_resolution), flag(r.invariants_hold)},
                    r.invariants_hold};
  }, report);
  const double k = static_cast<double>(c.k);
  const double lambda = c.lambda_realized;
  report.extra["representation"] =
      opts.representation == Representation::kDense ? "dense" : "matrix-free";
  report.extra["overlap_root_limit"] = overlap_root(k, lambda);
  report.extra["g_bound"] = opt_json(try_bound([&] { return g_bound(k, lambda); }));
  report.extra["sv_gap_lower"] =
      opt_json(try_bound([&] { return sv_gap_lower(k, lambda); }));
  if (c.d == c.n) {
    report.extra["ev2_upper"] = opt_json(try_bound([&] { return ev2_upper(k); }));
  }
}

void run_expander(const ExperimentConfig& c, RunReport& report) {
  report.table.columns = {"trial", "n", "k", "lambda2_abs", "entropy",
                          "iterations", "converged", "nonunique_fixed_point",
                          "invariants_hold"};
  AnalyzeOptions opts = analyze_options(c, c.n);
  opts.singular_values = false;
  run_trials(c.trials, c.threads, [&](long t) {
    Rng rng = make_stream(c.seed, static_cast<std::uint64_t>(t));
    const ChannelSample sample = ChannelSample::draw(c.n, c.n, c.k, rng);
    const SpectralReport r = analyze(sample, opts, rng);
    return TrialRow{{static_cast<std::int64_t>(t), static_cast<std::int64_t>(c.n),
                     static_cast<std::int64_t>(c.k), opt_cell(r.lambda2_abs),
                     opt_cell(r.fixed_point_entropy),
                     static_cast<std::int64_t>(r.iterations), flag(r.converged),
                     flag(r.nonunique_fixed_point), flag(r.invariants_hold)},
                    r.invariants_hold};
  }, report);
  const double k = static_cast<double>(c.k);
  report.extra["representation"] =
      opts.representation == Representation::kDense ? "dense" : "matrix-free";
  report.extra["log_k"] = std::log(k);
  report.extra["ev2_upper"] = opt_json(try_bound([&] { return ev2_upper(k); }));
}

void run_moments(const ExperimentConfig& c, RunReport& report) {
  MomentSpec spec{c.p, c.n, c.d, c.k};
  const Rational exact =
      exact_moment_f(spec, ExactMomentOptions{c.allow_order3});
  const std::string num = boost::multiprecision::numerator(exact).str();
  const std::string den = boost::multiprecision::denominator(exact).str();
  const double exact_value = static_cast<double>(exact);
  // Undefined at lambda = k (d = n k), where the isometry is a unitary.
  const std::optional<double> limit =
      try_bound([&] { return limit_moment(c.p, c.k, c.lambda_realized); });

  // Monte Carlo cross-check: one row per draw of f^p.
  report.table.columns = {"trial", "f", "f_pow_p"};
  run_trials(c.trials, c.threads, [&](long t) {
    Rng rng = make_stream(c.seed, static_cast<std::uint64_t>(t));
    const ChannelSample sample = ChannelSample::draw(c.n, c.d, c.k, rng);
    const double f = overlap_f(sample);
    const bool ok = isometry_residual(sample.isometry) < 1e-12 &&
                    trace_preservation_residual(sample.kraus) < 1e-12;
    return TrialRow{{static_cast<std::int64_t>(t), f, std::pow(f, c.p)}, ok};
  }, report);

  const std::vector<double> draws = column(report.table, "f_pow_p");
  const Summary mc = summarize(draws);
  report.extra["p"] = c.p;
  report.extra["n"] = c.n;
  report.extra["d"] = c.d;
  report.extra["k"] = c.k;
  report.extra["lambda_realized"] = c.lambda_realized;
  report.extra["exact_value"] = {{"num", num}, {"den", den}, {"float", exact_value}};
  report.extra["limit_value"] = opt_json(limit);
  report.extra["mc_mean"] = mc.mean;
  report.extra["mc_se"] = mc.se;
  if (mc.se > 0.0) report.extra["mc_z"] = (mc.mean - exact_value) / mc.se;
}

void run_bounds(const ExperimentConfig& c, RunReport& report) {
  report.table.columns = {"k", "lambda", "chi", "g", "sv_gap_lb",
                          "sv_gap_ub", "ev2_ub", "explicit_lb"};
  const double lambda = c.lambda_realized;
  // Integer step count keeps the grid free of accumulated rounding.
  const long steps =
      static_cast<long>(std::floor((c.k_hi - c.k_lo) / c.k_step + 1e-9));
  for (long i = 0; i <= steps; ++i) {
    const double k = c.k_lo + static_cast<double>(i) * c.k_step;
    const BoundSet b = BoundSet::evaluate(k, lambda);
    report.table.add_row({b.k, b.lambda, b.chi, b.g, b.sv_gap_lb, b.sv_gap_ub,
                          opt_cell(b.ev2_ub), b.explicit_lb});
  }
  const auto root = [&](const std::function<double(double)>& fn, double target) {
    return opt_json(try_bound([&] { return threshold(fn, target, c.k_lo, c.k_hi); }));
  };
  report.extra["sv_gap_threshold"] =
      root([&](double k) { return sv_gap_lower(k, lambda); }, 0.0);
  report.extra["explicit_sv_gap_threshold"] =
      root([&](double k) { return explicit_sv_gap_lower(k, lambda); }, 0.0);
  if (lambda == 1.0) {
    report.extra["ev2_threshold"] = root([](double k) { return ev2_upper(k); }, 1.0);
  }
}

void run_mps(const ExperimentConfig& c, RunReport& report) {
  MpsSpec spec;
  spec.bond = c.bond;
  spec.physical = c.k;
  spec.sites = c.sites;
  spec.trials = c.trials;
  spec.depth = c.depth;
  spec.seed = c.seed;
  spec.validate();
  report.table.columns = {"trial", "D", "k", "l", "t", "purity", "entropy",
                          "purity_approx", "tv_gap", "entropy_approx",
                          "max_deviation", "purity_full", "entropy_full",
                          "max_deviation_full", "fixed_point_converged",
                          "invariants_hold"};
  run_trials(c.trials, c.threads, [&](long t) {
    const MpsTrial r = mps_trial(spec, t);
    return TrialRow{{static_cast<std::int64_t>(t),
                     static_cast<std::int64_t>(c.bond),
                     static_cast<std::int64_t>(c.k),
                     static_cast<std::int64_t>(c.sites),
                     static_cast<std::int64_t>(r.depth), r.purity, r.entropy,
                     r.purity_approx, r.tv_gap, r.entropy_approx,
                     r.max_deviation, r.purity_full, r.entropy_full,
                     r.max_deviation_full, flag(r.fixed_point_converged),
                     flag(r.invariants_hold)},
                    r.invariants_hold};
  }, report);
  const double phys = std::pow(static_cast<double>(c.k), c.sites);
  report.extra["purity_target"] = 1.0 / phys;
  report.extra["entropy_target"] = std::log(phys);
}

void run_twirl(const ExperimentConfig& c, RunReport& report) {
  report.table.columns = {"trial", "diag_overlap", "trace_norm_sq"};
  run_trials(c.trials, c.threads, [&](long t) {
    Rng rng = make_stream(c.seed, static_cast<std::uint64_t>(t));
    const TwirlDraw d = twirl_draw(c.m, c.twirl_n, rng);
    return TrialRow{{static_cast<std::int64_t>(t), d.diag_overlap, d.trace_norm_sq}, true};
  }, report);
  const Summary diag = summarize(column(report.table, "diag_overlap"));
  const Summary sq = summarize(column(report.table, "trace_norm_sq"));
  const double denom = static_cast<double>(c.twirl_n * c.twirl_n) - 1.0;
  report.extra["diag_overlap"] = diag.mean;
  report.extra["diag_overlap_se"] = diag.se;
  if (denom > 0.0) {
    report.extra["chi_hat"] = (sq.mean - 1.0) / denom;
    report.extra["chi_hat_se"] = sq.se / denom;
  }
  report.extra["chi_floor"] = chi_finite_floor(c.twirl_n);
  report.extra["chi_limit"] = chi_limit(static_cast<double>(c.m) /
                                        static_cast<double>(c.twirl_n));
  // The flatness statistic needs the full N^2 x N^2 average.
  if (!report.truncated && c.twirl_n > 1 && c.twirl_n <= TwirlOptions{}.flatness_max_n) {
    const TwirlEstimate est =
        estimate_twirl_structure(c.m, c.twirl_n, c.trials, c.seed);
    report.extra["offdiag_flatness"] = opt_json(est.offdiag_flatness);
  }
}

void run_gaussian(const ExperimentConfig& c, RunReport& report) {
  report.table.columns = {"trial", "gaussian_norm", "restricted_norm",
                          "invariants_hold"};
  SpectralOptions spectral;
  spectral.tol = c.tol;
  spectral.max_iter = c.max_iter;
  const Representation rep = resolve_mode(c, c.d, spectral);
  run_trials(c.trials, c.threads, [&](long t) {
    Rng rng = make_stream(c.seed, static_cast<std::uint64_t>(t));
    const double gauss = gaussian_model_norm_draw(c.n, c.d, c.k, rng);
    const ChannelSample sample = ChannelSample::draw(c.n, c.d, c.k, rng);
    const bool ok = isometry_residual(sample.isometry) < 1e-12 &&
                    trace_preservation_residual(sample.kraus) < 1e-12;
    const SuperOperator op(sample.kraus, rep);
    const NormEstimate rn = restricted_norm(op, spectral, rng);
    return TrialRow{{static_cast<std::int64_t>(t), gauss, rn.value, flag(ok)}, ok};
  }, report);

  // chi_{nk,d} from its own seed stream, disjoint from the trial streams.
  const std::uint64_t chi_seed = stream_seed(c.seed, 0xC41ULL << 40);
  TwirlOptions no_flatness;
  no_flatness.flatness_max_n = 0;
  const TwirlEstimate chi =
      estimate_twirl_structure(c.n * c.k, c.d, c.chi_trials, chi_seed, no_flatness);
  const Summary g = summarize(column(report.table, "gaussian_norm"));
  const Summary rn = summarize(column(report.table, "restricted_norm"));
  const double k = static_cast<double>(c.k);
  const double s = 1.0 + std::sqrt(c.lambda_realized);
  report.extra["chi_hat_nk_d"] = chi.chi_hat;
  report.extra["chi_hat_nk_d_se"] = chi.chi_hat_se;
  report.extra["gaussian_mean"] = g.mean;
  report.extra["restricted_norm_mean"] = rn.mean;
  if (chi.chi_hat > 0.0) {
    const double rhs = 2.0 / chi.chi_hat * g.mean;
    report.extra["comparison_rhs"] = rhs;
    report.extra["comparison_holds"] = rn.mean <= rhs;
  }
  report.extra["gaussian_leading_term"] = s * s / std::sqrt(k);
}

}  // namespace

RunReport run_experiment(const ExperimentConfig& config) {
  RunReport report;
  report.config = config;
  const auto start = std::chrono::steady_clock::now();
  try {
    const std::string& sub = config.subcommand;
    if (sub == "gap") {
      run_gap(config, report);
    } else if (sub == "expander") {
      run_expander(config, report);
    } else if (sub == "moments") {
      run_moments(config, report);
    } else if (sub == "bounds") {
      run_bounds(config, report);
    } else if (sub == "mps") {
      run_mps(config, report);
    } else if (sub == "twirl") {
      run_twirl(config, report);
    } else if (sub == "gaussian") {
      run_gaussian(config, report);
    } else {
      report.errors.push_back("unknown subcommand " + sub);
    }
  } catch (const std::exception& e) {
    report.truncated = true;
    report.errors.push_back(e.what());
  }
  report.summarize_columns();
  report.wall_clock_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  const ParseResult parsed = parse_config(argc, argv, out, err);
  if (!parsed.config) return parsed.exit_code;
  const RunReport report = run_experiment(*parsed.config);
  try {
    write_output(parsed.config->output, render(report));
  } catch (const std::exception& e) {
    err << "rqc: " << e.what() << "\n";
    return 1;
  }
  for (const auto& e : report.errors) err << "rqc: " << e << "\n";
  if (!report.invariants_hold) {
    err << "rqc: a per-sample invariant check failed; see the invariants_hold column\n";
  }
  return report.exit_code();
}

}  // namespace rqc::cli
