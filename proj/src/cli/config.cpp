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

#include "rqc/cli/config.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"

namespace rqc::cli {
namespace {

std::string format_number(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

bool uses_channel_dims(const std::string& sub) {
  return sub == "gap" || sub == "gaussian" || sub == "moments";
}

std::uint64_t random_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

void parse_grid(const std::string& grid, ExperimentConfig& c) {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
  char sep1 = 0;
  char sep2 = 0;
  std::istringstream is(grid);
  if (!(is >> lo >> sep1 >> hi >> sep2 >> step) || sep1 != ':' || sep2 != ':' ||
      !is.eof()) {
    throw ConfigError("--k-grid expects lo:hi:step, e.g. 50:500:5");
  }
  c.k_lo = lo;
  c.k_hi = hi;
  c.k_step = step;
}

}  // namespace

std::string version_string() {
#ifdef RQC_VERSION
  const std::string version = RQC_VERSION;
#else
  const std::string version = "0.0.0";
#endif
#ifdef RQC_GIT_REV
  const std::string rev = RQC_GIT_REV;
#else
  const std::string rev = "unknown";
#endif
  return "rqc " + version + " (" + rev + ")";
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["subcommand"] = subcommand;
  if (uses_channel_dims(subcommand) || subcommand == "expander") {
    j["n"] = n;
    j["d"] = d;
    j["k"] = k;
    j["lambda_realized"] = lambda_realized;
    j["lambda_given"] =
        lambda_given ? nlohmann::json(*lambda_given) : nlohmann::json(nullptr);
  }
  if (subcommand == "moments") {
    j["p"] = p;
    j["allow_order3"] = allow_order3;
  }
  if (subcommand == "mps") {
    j["D"] = bond;
    j["k"] = k;
    j["l"] = sites;
    j["t"] = depth;
  }
  if (subcommand == "twirl") {
    j["M"] = m;
    j["N"] = twirl_n;
  }
  if (subcommand == "gaussian") j["chi_trials"] = chi_trials;
  if (subcommand == "bounds") {
    j["k_grid"] = {k_lo, k_hi, k_step};
    j["lambda"] = lambda_realized;
  }
  if (subcommand == "gap" || subcommand == "expander") {
    j["tol"] = tol;
    j["max_iter"] = max_iter;
    j["lambda2"] = lambda2;
    j["entropy"] = entropy;
    j["mode"] = mode == Mode::kAuto    ? "auto"
                : mode == Mode::kDense ? "dense"
                                       : "matrix-free";
  }
  j["trials"] = trials;
  j["seed"] = std::to_string(seed);
  j["seed_source"] = seed_source;
  j["threads"] = threads;
  j["format"] = format == Format::kCsv ? "csv" : "json";
  return j;
}

std::string ExperimentConfig::rerun_command() const {
  std::ostringstream os;
  os << "rqc " << subcommand;
  if (uses_channel_dims(subcommand)) {
    os << " --n " << n << " --d " << d << " --k " << k;
  }
  if (subcommand == "expander") os << " --n " << n << " --k " << k;
  if (subcommand == "moments") {
    os << " --p " << p;
    if (allow_order3) os << " --allow-order3";
  }
  if (subcommand == "mps") {
    os << " --D " << bond << " --k " << k << " --l " << sites;
    if (depth > 0) os << " --t " << depth;
  }
  if (subcommand == "twirl") os << " --M " << m << " --N " << twirl_n;
  if (subcommand == "gaussian") os << " --chi-trials " << chi_trials;
  if (subcommand == "bounds") {
    os << " --k-grid " << format_number(k_lo) << ':' << format_number(k_hi)
       << ':' << format_number(k_step) << " --lambda "
       << format_number(lambda_realized);
  }
  if (subcommand == "gap" || subcommand == "expander") {
    os << " --tol " << format_number(tol) << " --max-iter " << max_iter;
    if (!lambda2) os << " --no-lambda2";
    if (!entropy) os << " --no-entropy";
    if (mode == Mode::kDense) os << " --mode dense";
    if (mode == Mode::kMatrixFree) os << " --mode matrix-free";
  }
  if (subcommand != "bounds") os << " --trials " << trials;
  os << " --seed " << seed << " --threads " << threads << " --format "
     << (format == Format::kCsv ? "csv" : "json");
  return os.str();
}

void validate(ExperimentConfig& c) {
  if (c.trials < 1) throw ConfigError("--trials must be at least 1");
  if (!(c.tol > 0.0)) throw ConfigError("--tol must be positive");
  if (c.max_iter < 1) throw ConfigError("--max-iter must be at least 1");
  const std::string& sub = c.subcommand;
  if (uses_channel_dims(sub) || sub == "expander") {
    if (c.n < 1) throw ConfigError("--n must be at least 1");
    if (c.k < 1) throw ConfigError("--k must be at least 1");
  }
  if (uses_channel_dims(sub)) {
    const bool has_d = c.d > 0;
    if (has_d == c.lambda_given.has_value()) {
      throw ConfigError("give exactly one of --d or --lambda");
    }
    if (c.lambda_given) {
      if (!(*c.lambda_given > 0.0)) throw ConfigError("--lambda must be positive");
      c.d = std::llround(*c.lambda_given * static_cast<double>(c.n));
      if (c.d < 1) {
        throw ConfigError("--lambda too small: round(lambda n) = 0, raise --lambda");
      }
    }
    if (c.d > c.n * c.k) {
      throw ConfigError("d = " + std::to_string(c.d) + " exceeds n k = " +
                        std::to_string(c.n * c.k) +
                        ": no isometry exists; lower --d/--lambda or raise --k");
    }
    c.lambda_realized = static_cast<double>(c.d) / static_cast<double>(c.n);
  }
  if (sub == "expander") {
    c.d = c.n;
    c.lambda_realized = 1.0;
  }
  if (sub == "moments") {
    if (c.p < 1) throw ConfigError("--p must be at least 1");
    const int cap = c.allow_order3 ? 3 : 2;
    if (c.p > cap) {
      throw ConfigError("--p " + std::to_string(c.p) +
                        " exceeds the exact-moment cap " + std::to_string(cap) +
                        (c.allow_order3 ? "" : "; pass --allow-order3 for p = 3"));
    }
    if (c.n * c.k < 2 * c.p) {
      throw ConfigError("n k must be at least 2p for the exact moment");
    }
  }
  if (sub == "mps") {
    if (c.bond < 1 || c.k < 1 || c.sites < 1) {
      throw ConfigError("--D, --k and --l must be at least 1");
    }
    if (c.depth < 0) throw ConfigError("--t must be non-negative");
    double dim = static_cast<double>(c.bond) *
                 std::pow(static_cast<double>(c.k), c.sites);
    if (dim > 4096.0) {
      throw ConfigError("D k^l exceeds the dense budget 4096; lower --l or --D");
    }
  }
  if (sub == "twirl") {
    if (c.twirl_n < 1 || c.m < c.twirl_n) {
      throw ConfigError("twirl needs --M >= --N >= 1");
    }
  }
  if (sub == "gaussian" && c.chi_trials < 1) {
    throw ConfigError("--chi-trials must be at least 1");
  }
  if (sub == "bounds") {
    const double lambda = c.lambda_given.value_or(1.0);
    if (!(c.k_step > 0.0) || !(c.k_lo >= 1.0) || c.k_hi < c.k_lo) {
      throw ConfigError("--k-grid needs 1 <= lo <= hi and step > 0");
    }
    if (!(lambda > 0.0 && lambda < c.k_lo)) {
      throw ConfigError("--lambda must lie in (0, k) for every grid point");
    }
    c.lambda_realized = lambda;
  }
}

ParseResult parse_config(int argc, const char* const* argv, std::ostream& out,
                         std::ostream& err) {
  CLI::App app{"Random quantum channels: moments, spectral gaps, bounds and "
               "MPS experiments"};
  app.name("rqc");
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);

  ExperimentConfig c;
  std::optional<std::uint64_t> seed;
  std::string format = "csv";
  std::string mode = "auto";
  std::string grid;
  double lambda = 0.0;
  unsigned threads = 0;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--trials", c.trials, "Monte Carlo trials");
    sub->add_option("--seed", seed,
                    std::string("Master seed (default: $") + kSeedEnv +
                        ", else random; always echoed in the report)");
    sub->add_option("--threads", threads,
                    "Worker threads (default: hardware parallelism)");
    sub->add_option("-o,--output", c.output, "Output path, '-' for stdout");
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };
  const auto add_dims = [&](CLI::App* sub, bool with_d) {
    sub->add_option("--n", c.n, "Output dimension n")->required();
    sub->add_option("--k", c.k, "Environment dimension k")->required();
    if (with_d) {
      auto* d_opt = sub->add_option("--d", c.d, "Input dimension d");
      auto* l_opt = sub->add_option("--lambda", lambda, "Ratio d / n");
      d_opt->excludes(l_opt);
    }
  };
  const auto add_spectral = [&](CLI::App* sub) {
    sub->add_option("--tol", c.tol, "Relative Lanczos residual");
    sub->add_option("--max-iter", c.max_iter, "Krylov dimension cap");
    sub->add_flag("--no-lambda2{false}", c.lambda2, "Skip |lambda_2|");
    sub->add_flag("--no-entropy{false}", c.entropy,
                  "Skip the fixed point and its entropy");
    sub->add_option("--mode", mode, "auto, dense or matrix-free")
        ->check(CLI::IsMember({"auto", "dense", "matrix-free"}));
  };

  auto* moments = app.add_subcommand("moments", "Exact and limiting E f^p");
  add_dims(moments, true);
  moments->add_option("--p", c.p, "Moment order")->required();
  moments->add_flag("--allow-order3", c.allow_order3, "Permit p = 3");
  add_common(moments);

  auto* gap = app.add_subcommand("gap", "s1, s2, restricted norm, |lambda_2|");
  add_dims(gap, true);
  add_spectral(gap);
  add_common(gap);

  auto* expander =
      app.add_subcommand("expander", "|lambda_2| and fixed-point entropy, d = n");
  add_dims(expander, false);
  add_spectral(expander);
  add_common(expander);

  auto* bounds = app.add_subcommand("bounds", "chi, g and gap bounds over k");
  bounds->add_option("--k-grid", grid, "lo:hi:step")->required();
  bounds->add_option("--lambda", lambda, "Ratio lambda (default 1)");
  add_common(bounds);

  auto* mps = app.add_subcommand("mps", "Reduced states of random TI-MPS");
  mps->add_option("--D", c.bond, "Bond dimension")->required();
  mps->add_option("--k", c.k, "Physical dimension")->required();
  mps->add_option("--l", c.sites, "Sites")->required();
  mps->add_option("--t", c.depth, "Approximation depth (default ceil(5 log D))");
  add_common(mps);

  auto* twirl = app.add_subcommand("twirl", "Twirl of |Y| (x) |conj Y|");
  twirl->add_option("--M", c.m, "Rows M")->required();
  twirl->add_option("--N", c.twirl_n, "Columns N")->required();
  add_common(twirl);

  auto* gaussian =
      app.add_subcommand("gaussian", "Gaussian model norm vs restricted norm");
  add_dims(gaussian, true);
  gaussian->add_option("--chi-trials", c.chi_trials,
                       "Trials for chi_hat_{nk,d}")
      ->default_val(2000);
  add_common(gaussian);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return {std::nullopt, app.exit(e, out, err)};
  } catch (const CLI::CallForAllHelp& e) {
    return {std::nullopt, app.exit(e, out, err)};
  } catch (const CLI::CallForVersion& e) {
    return {std::nullopt, app.exit(e, out, err)};
  } catch (const CLI::ParseError& e) {
    err << "rqc: " << e.what() << "\n";
    return {std::nullopt, 2};
  }

  c.subcommand = app.get_subcommands().front()->get_name();
  CLI::App* sub = app.get_subcommands().front();
  if (sub->get_option_no_throw("--lambda") != nullptr &&
      sub->get_option("--lambda")->count() > 0) {
    c.lambda_given = lambda;
  }
  c.format = format == "json" ? Format::kJson : Format::kCsv;
  c.mode = mode == "dense"         ? Mode::kDense
           : mode == "matrix-free" ? Mode::kMatrixFree
                                   : Mode::kAuto;
  if (seed) {
    c.seed = *seed;
    c.seed_source = "flag";
  } else if (const char* env = std::getenv(kSeedEnv); env && *env) {
    try {
      std::size_t used = 0;
      c.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "rqc: " << kSeedEnv << " must be an unsigned integer\n";
      return {std::nullopt, 2};
    }
    c.seed_source = "env";
  } else {
    c.seed = random_seed();
    c.seed_source = "random";
  }
  c.threads = threads > 0 ? threads
                          : std::max(1u, std::thread::hardware_concurrency());
  try {
    if (c.subcommand == "bounds") parse_grid(grid, c);
    validate(c);
  } catch (const ConfigError& e) {
    err << "rqc " << c.subcommand << ": " << e.what() << "\n";
    return {std::nullopt, 2};
  }
  return {std::move(c), 0};
}

}  // namespace rqc::cli
