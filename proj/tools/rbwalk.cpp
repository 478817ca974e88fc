// Copyright 2026 The rbwalk Authors
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

// Command-line front end: simulate | pdf | moments | confidence | noise | compare.
//
// Parameters come from an optional --config file (flat key=value lines, or a
// previously written manifest JSON) and are overridden by command-line flags.
// Every subcommand writes <subcommand>.manifest.json next to its outputs.
// Exit codes: 0 ok, 2 usage or configuration error, 3 numerical-integrity error.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rbwalk/analytics.hpp"
#include "rbwalk/errors.hpp"
#include "rbwalk/io.hpp"
#include "rbwalk/noise.hpp"
#include "rbwalk/simulator.hpp"
#include "rbwalk/stats.hpp"
#include "rbwalk/version.hpp"
#include "rbwalk/walk.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace rbwalk;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Merged parameter set; values stay as text until a subcommand asks for them.
class Params {
 public:
  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::string text(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw UsageError("missing required parameter '" + key + "'");
    return it->second;
  }
  std::string text(const std::string& key, const std::string& fallback) const {
    return has(key) ? text(key) : fallback;
  }

  double real(const std::string& key) const { return parse_real(key, text(key)); }
  double real(const std::string& key, double fallback) const { return has(key) ? real(key) : fallback; }

  long long integer(const std::string& key) const {
    const std::string v = text(key);
    std::size_t used = 0;
    long long out = 0;
    try {
      out = std::stoll(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != v.size() || v.empty()) throw UsageError("parameter '" + key + "' must be an integer, got '" + v + "'");
    return out;
  }
  long long integer(const std::string& key, long long fallback) const { return has(key) ? integer(key) : fallback; }

  bool flag(const std::string& key) const {
    if (!has(key)) return false;
    const std::string v = text(key);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw UsageError("parameter '" + key + "' must be true or false, got '" + v + "'");
  }

  json to_json() const {
    json j = json::object();
    for (const auto& [k, v] : values_) j[k] = v;
    return j;
  }

 private:
  static double parse_real(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    double out = 0.0;
    try {
      out = std::stod(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != v.size() || v.empty()) throw UsageError("parameter '" + key + "' must be a number, got '" + v + "'");
    return out;
  }

  std::map<std::string, std::string> values_;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

// Flat key=value file ('#' starts a comment) or a manifest JSON, whose
// "parameters" object is used.
void load_config(const std::string& path, Params& params) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();
  if (trim(content).rfind('{', 0) == 0) {
    json j;
    try {
      j = json::parse(content);
    } catch (const json::exception& e) {
      throw UsageError("config " + path + " is not valid JSON: " + e.what());
    }
    if (!j.contains("parameters") || !j["parameters"].is_object())
      throw UsageError("manifest " + path + " has no parameters object");
    for (const auto& [k, v] : j["parameters"].items()) params.set(k, v.is_string() ? v.get<std::string>() : v.dump());
    return;
  }
  std::istringstream lines(content);
  std::string line;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + ":" + std::to_string(number) + ": expected key=value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw UsageError(path + ":" + std::to_string(number) + ": empty key");
    params.set(key, trim(line.substr(eq + 1)));
  }
}

// ---------------------------------------------------------------------------
// Parameter interpretation

NoiseModel noise_model_from(const Params& p) {
  const std::string kind = p.text("model");
  if (kind == "markovian") return noise::Markovian{p.real("sigma")};
  if (kind == "dc") return noise::Dc{p.real("sigma")};
  if (kind == "block") return noise::Block{p.real("sigma"), static_cast<int>(p.integer("block"))};
  if (kind == "fourier") {
    const int modes = static_cast<int>(p.integer("modes"));
    auto psd = noise::FourierPsd::power_law(p.real("exponent"), modes, p.real("omega0"), p.real("amplitude", 1.0),
                                            p.real("gate-time", 1.0));
    if (p.has("target-variance")) {
      if (p.has("amplitude")) throw UsageError("give either amplitude or target-variance, not both");
      psd = calibrate_amplitude(psd, p.real("target-variance"));
    }
    return psd;
  }
  throw UsageError("unknown noise model '" + kind + "' (expected markovian, dc, block or fourier)");
}

json model_json(const NoiseModel& model) {
  json j;
  j["model"] = model_name(model);
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, noise::FourierPsd>) {
          j["weights"] = m.weights;
          j["omega0"] = m.omega0;
          j["amplitude"] = m.amplitude;
          j["gate_time"] = m.gate_time;
        } else {
          j["sigma"] = m.sigma;
          if constexpr (std::is_same_v<T, noise::Block>) j["block"] = m.length;
        }
      },
      model);
  return j;
}

// Closed-form regime for the "regime" parameter; empty for the generic
// regime, which is described by a noise model instead.
std::optional<Regime> regime_from(const Params& p) {
  const std::string kind = p.text("regime");
  const int J = static_cast<int>(p.integer("J"));
  if (kind == "generic") return std::nullopt;
  if (kind == "markovian") return regime::Markovian{J, p.real("sigma"), static_cast<int>(p.integer("n"))};
  if (kind == "dc") return regime::Dc{J, p.real("sigma")};
  if (kind == "block")
    return regime::Block{J, p.real("sigma"), static_cast<int>(p.integer("block")),
                         static_cast<int>(p.integer("n", 0)), p.flag("large-m")};
  throw UsageError("unknown regime '" + kind + "' (expected markovian, dc, block or generic)");
}

// Gamma law for the "regime" parameter. The generic regime derives its law
// from the analytic autocorrelation of the configured noise model.
GammaLaw law_from(const Params& p, std::optional<Regime>* closed_form = nullptr) {
  const std::optional<Regime> r = regime_from(p);
  if (closed_form) *closed_form = r;
  if (!r) {
    const int J = static_cast<int>(p.integer("J"));
    return generic_gamma_params(analytic_autocorrelation(noise_model_from(p), J), J);
  }
  return fidelity_law(*r);
}

json law_json(const GammaLaw& law) {
  return json{{"shape", law.shape}, {"scale", law.scale}, {"offset", law.offset}};
}

json moments_json(const RegimeMoments& m) {
  return json{{"expectation", m.expectation}, {"mode", m.mode}, {"variance", m.variance}, {"skew", m.skew}};
}

// ---------------------------------------------------------------------------
// Output helpers

struct Context {
  std::string subcommand;
  Params params;
  fs::path out_dir;
  std::uint64_t seed = 1;
  int threads = 0;
  std::string started;
  std::vector<std::string> outputs;
  json results = json::object();

  std::ofstream open(const std::string& name) {
    fs::create_directories(out_dir);
    std::ofstream out(out_dir / name);
    if (!out) throw UsageError("cannot write " + (out_dir / name).string());
    outputs.push_back(name);
    return out;
  }

  void write_json(const std::string& name, const json& j) {
    auto out = open(name);
    out << j.dump(2) << '\n';
  }

  void write_manifest() {
    json m;
    m["subcommand"] = subcommand;
    m["software_version"] = kVersion;
    m["master_seed"] = seed;
    m["parameters"] = params.to_json();
    m["outputs"] = outputs;
    m["results"] = results;
    m["started_at"] = started;
    m["finished_at"] = utc_now();
    fs::create_directories(out_dir);
    std::ofstream out(out_dir / (subcommand + ".manifest.json"));
    out << m.dump(2) << '\n';
  }
};

// ---------------------------------------------------------------------------
// Subcommands

void cmd_simulate(Context& ctx) {
  const Params& p = ctx.params;
  const int J = static_cast<int>(p.integer("J"));
  const int k = static_cast<int>(p.integer("k"));
  const int n = static_cast<int>(p.integer("n"));
  const NoiseModel model = noise_model_from(p);
  const std::string mode = p.text("mode", "dephasing");
  ExperimentConfig cfg;
  if (mode == "dephasing") {
    cfg = ExperimentConfig::dephasing(J, k, n, model, ctx.seed);
  } else if (mode == "universal") {
    std::array<std::optional<NoiseModel>, 3> axes;
    const std::string which = p.text("axes", "xyz");
    if (which.empty()) throw UsageError("axes must name at least one of x, y, z");
    for (char c : which) {
      if (c != 'x' && c != 'y' && c != 'z') throw UsageError("axes may only contain x, y and z");
      axes[c - 'x'] = model;
    }
    cfg = ExperimentConfig::universal(J, k, n, axes, ctx.seed);
  } else {
    throw UsageError("mode must be dephasing or universal");
  }
  cfg.validate();

  const FidelityMatrix f = run_experiment(cfg, ctx.threads);
  const std::vector<double> rows = row_average(f);

  {
    auto out = ctx.open("matrix.csv");
    write_matrix_csv(out, f);
  }
  {
    auto out = ctx.open("row_averages.csv");
    write_csv_row(out, std::vector<std::string>{"sequence", "average"});
    for (int i = 0; i < f.k; ++i) write_csv_row(out, std::vector<double>{static_cast<double>(i + 1), rows[i]});
  }
  const Histogram h = freedman_diaconis_histogram(rows);
  {
    auto out = ctx.open("histogram.csv");
    write_csv_row(out, std::vector<std::string>{"lower", "upper", "count", "density"});
    const auto density = h.density();
    for (int b = 0; b < h.bins(); ++b)
      write_csv_row(out, std::vector<double>{h.edges[b], h.edges[b + 1], h.counts[b], density[b]});
  }
  const int paths = static_cast<int>(p.integer("walk-paths", 0));
  if (paths < 0) throw UsageError("walk-paths must be >= 0");
  for (int i = 0; i < std::min(paths, k); ++i) {
    const SequenceSpec seq = experiment_sequence(cfg, i);
    const UniversalRealization noise = experiment_noise(cfg, i, 0);
    auto out = ctx.open("walk_path_" + std::to_string(i + 1) + ".csv");
    write_walk_path_csv(out, walk_path(seq, noise.axes[2]));
  }

  json sidecar;
  sidecar["J"] = J;
  sidecar["k"] = k;
  sidecar["n"] = n;
  sidecar["mode"] = mode_name(cfg.mode);
  sidecar["noise"] = model_json(model);
  if (cfg.mode == ErrorMode::universal) sidecar["axes"] = p.text("axes", "xyz");
  sidecar["master_seed"] = ctx.seed;
  sidecar["seed_scheme"] = "splitmix64 path hash: sequence (master, SEQ, i); noise (master, NOISE, i, j, axis)";
  sidecar["software_version"] = kVersion;
  ctx.write_json("matrix.json", sidecar);

  ctx.results["grand_mean"] = grand_mean(f);
  if (k >= 2) {
    const SampleMoments m = sample_moments(rows);
    ctx.results["row_average_mean"] = m.mean;
    ctx.results["row_average_standard_error"] = m.standard_error;
    ctx.results["row_average_variance"] = m.variance;
    ctx.results["row_average_skew"] = m.skewness;
  }
  ctx.results["histogram"] = json{{"rule", std::string(h.rule)}, {"bins", h.bins()},
                                  {"lower", h.edges.front()}, {"upper", h.edges.back()}, {"width", h.width()}};
}

void cmd_pdf(Context& ctx) {
  const Params& p = ctx.params;
  const double lo = p.real("f-min");
  const double hi = p.real("f-max");
  const double step = p.real("f-step");
  if (!(step > 0.0) || !(hi >= lo)) throw UsageError("need f-min <= f-max and f-step > 0");
  const long long points = static_cast<long long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  if (points > 100'000'000) throw UsageError("F grid is too large");

  std::function<double(double)> density;
  json law_info;
  const std::string kind = p.text("regime");
  if (kind == "dc" && p.has("n")) {
    const int J = static_cast<int>(p.integer("J"));
    const double sigma = p.real("sigma");
    const int n = static_cast<int>(p.integer("n"));
    density = [=](double F) { return dc_finite_n_pdf(F, J, sigma, n); };
    law_info = json{{"form", "dc finite-n product law"}, {"J", J}, {"sigma", sigma}, {"n", n}};
  } else {
    const GammaLaw law = law_from(p);
    density = [law](double F) { return law.pdf(F); };
    law_info = law_json(law);
  }

  std::vector<double> grid(static_cast<std::size_t>(points)), values(grid.size());
  for (long long i = 0; i < points; ++i) {
    grid[i] = lo + static_cast<double>(i) * step;
    values[i] = density(grid[i]);
    if (!std::isfinite(values[i])) throw NumericalError("density is not finite at F = " + format_double(grid[i]));
  }
  double peak = 0.0;
  for (double v : values) peak = std::max(peak, v);
  const bool normalize = p.flag("normalize-mode");
  if (normalize && peak > 0.0)
    for (double& v : values) v /= peak;
  auto out = ctx.open("density.csv");
  write_csv_row(out, std::vector<std::string>{"F", "density"});
  for (std::size_t i = 0; i < grid.size(); ++i) write_csv_row(out, std::vector<double>{grid[i], values[i]});
  ctx.results["law"] = law_info;
  ctx.results["points"] = points;
  ctx.results["normalized_to_mode"] = normalize;
}

void cmd_moments(Context& ctx) {
  const std::optional<Regime> closed = regime_from(ctx.params);
  json j;
  const auto* block = closed ? std::get_if<regime::Block>(&*closed) : nullptr;
  if (block && block->M == 1 && block->n == 0 && !block->large_m) {
    // Block length 1 has closed-form moments but no gamma law without n.
    j["law"] = nullptr;
    j["moments"] = moments_json(regime_moments(*closed));
  } else {
    const GammaLaw law = law_from(ctx.params);
    j["law"] = law_json(law);
    j["moments"] = moments_json(closed ? regime_moments(*closed) : law_moments(law));
  }
  ctx.write_json("moments.json", j);
  ctx.results = j;
}

void cmd_confidence(Context& ctx) {
  const Params& p = ctx.params;
  const GammaLaw law = law_from(p);
  const double gl = p.real("g-lower", 0.1);
  const double gu = p.real("g-upper", 0.1);
  const double eps = p.real("epsilon", 0.01);
  const long long kmin = k_min(law.shape, gl, gu, eps);
  const long long table_max = p.integer("k-max", std::max<long long>(2 * kmin, 10));
  if (table_max < 1) throw UsageError("k-max must be >= 1");
  auto out = ctx.open("confidence.csv");
  write_csv_row(out, std::vector<std::string>{"k", "failure"});
  for (long long k = 1; k <= table_max; ++k)
    write_csv_row(out, std::vector<double>{static_cast<double>(k), confidence_failure(law.shape, gl, gu, k)});
  json j{{"law", law_json(law)}, {"g_lower", gl}, {"g_upper", gu}, {"epsilon", eps}, {"k_min", kmin},
         {"failure_at_k_min", confidence_failure(law.shape, gl, gu, kmin)}};
  if (kmin > 1) j["failure_at_k_min_minus_1"] = confidence_failure(law.shape, gl, gu, kmin - 1);
  ctx.write_json("confidence.json", j);
  ctx.results = j;
  std::cout << "k_min = " << kmin << '\n';
}

void cmd_noise(Context& ctx) {
  const Params& p = ctx.params;
  const int J = static_cast<int>(p.integer("J"));
  const long long count = p.integer("count");
  if (count < 2) throw UsageError("count must be >= 2");
  const NoiseModel model = noise_model_from(p);
  const NoiseSampler sampler(model, J);
  std::vector<NoiseRealization> realizations(static_cast<std::size_t>(count));
  for (long long r = 0; r < count; ++r) {
    Stream rng(noise_seed(ctx.seed, 0, static_cast<int>(r), Axis::Z));
    realizations[r] = sampler.sample(rng);
  }
  {
    auto out = ctx.open("realizations.csv");
    write_realizations_csv(out, realizations);
  }
  const AutocorrelationFn emp = empirical_autocorrelation(realizations);
  const AutocorrelationFn ana = analytic_autocorrelation(model, J);
  auto out = ctx.open("autocorrelation.csv");
  write_csv_row(out, std::vector<std::string>{"k", "empirical", "standard_error", "analytic"});
  for (int k = 0; k < J; ++k)
    write_csv_row(out, std::vector<double>{static_cast<double>(k), emp.values[k], emp.standard_errors[k], ana.values[k]});
  ctx.results["noise"] = model_json(model);
}

void cmd_compare(Context& ctx) {
  const Params& p = ctx.params;
  std::ifstream in(p.text("matrix"));
  if (!in) throw UsageError("cannot open matrix " + p.text("matrix"));
  const FidelityMatrix f = read_matrix_csv(in);
  if (f.k < 2) throw UsageError("compare needs at least two sequences");
  std::optional<Regime> closed;
  const GammaLaw law = law_from(p, &closed);
  const RegimeMoments expected = closed ? regime_moments(*closed) : law_moments(law);
  const std::vector<double> rows = row_average(f);
  const SampleMoments sample = sample_moments(rows);
  const KsResult ks = ks_test(rows, [&](double x) { return law.cdf(x); });
  json j;
  j["k"] = f.k;
  j["n"] = f.n;
  j["law"] = law_json(law);
  j["ks"] = json{{"statistic", ks.statistic}, {"p_value", ks.p_value}};
  j["sample"] = json{{"mean", sample.mean}, {"standard_error", sample.standard_error},
                     {"variance", sample.variance}, {"skew", sample.skewness}};
  j["expected"] = moments_json(expected);
  j["deltas"] = json{{"mean", sample.mean - expected.expectation},
                     {"mean_in_standard_errors", (sample.mean - expected.expectation) / sample.standard_error},
                     {"variance_relative", expected.variance > 0 ? sample.variance / expected.variance - 1.0 : NAN},
                     {"skew", sample.skewness - expected.skew}};
  ctx.write_json("compare.json", j);
  ctx.results = j;
}

struct Command {
  const char* name;
  const char* help;
  std::vector<std::string> options;
  std::vector<std::string> flags;
  void (*run)(Context&);
};

const std::vector<std::string> kNoiseKeys = {"model",  "sigma",     "block",     "exponent",       "modes",
                                             "omega0", "amplitude", "gate-time", "target-variance"};
const std::vector<std::string> kRegimeKeys = {"regime", "J", "sigma", "n", "block"};

std::vector<std::string> join(std::initializer_list<std::vector<std::string>> parts) {
  std::vector<std::string> out;
  for (const auto& part : parts)
    for (const auto& key : part)
      if (std::find(out.begin(), out.end(), key) == out.end()) out.push_back(key);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Command> commands = {
      {"simulate", "Monte Carlo fidelity matrix for k sequences x n noise realizations",
       join({{"J", "k", "n", "mode", "axes", "walk-paths"}, kNoiseKeys}), {}, cmd_simulate},
      {"pdf", "Fidelity density on an F grid",
       join({kRegimeKeys, kNoiseKeys, {"f-min", "f-max", "f-step"}}), {"normalize-mode", "large-m"}, cmd_pdf},
      {"moments", "Gamma-law parameters and moments", join({kRegimeKeys, kNoiseKeys}), {"large-m"}, cmd_moments},
      {"confidence", "Minimal number of sequences for a relative confidence band",
       join({kRegimeKeys, kNoiseKeys, {"g-lower", "g-upper", "epsilon", "k-max"}}), {"large-m"}, cmd_confidence},
      {"noise", "Noise realizations with empirical and analytic autocorrelation",
       join({{"J", "count"}, kNoiseKeys}), {}, cmd_noise},
      {"compare", "Goodness of fit of a fidelity matrix against a gamma law",
       join({{"matrix"}, kRegimeKeys, kNoiseKeys}), {"large-m"}, cmd_compare},
  };

  CLI::App app{"Randomized benchmarking under correlated noise"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  int threads = 0;
  std::string out_dir = ".";
  std::string config;
  app.add_option("--seed", seed, "Master seed");
  app.add_option("--threads", threads, "OpenMP threads (0 = default)");
  app.add_option("--out-dir", out_dir, "Directory for outputs");
  app.add_option("--config", config, "key=value config file or manifest JSON");

  std::map<std::string, std::map<std::string, std::string>> storage;
  std::map<std::string, CLI::App*> subs;
  std::map<std::string, std::map<std::string, CLI::Option*>> handles;
  for (const auto& command : commands) {
    CLI::App* sub = app.add_subcommand(command.name, command.help);
    sub->fallthrough();
    subs[command.name] = sub;
    for (const auto& key : command.options) handles[command.name][key] = sub->add_option("--" + key, storage[command.name][key]);
    for (const auto& key : command.flags) handles[command.name][key] = sub->add_flag("--" + key);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& command : commands) {
      if (!subs[command.name]->parsed()) continue;
      Context ctx;
      ctx.subcommand = command.name;
      ctx.started = utc_now();
      ctx.out_dir = out_dir;
      ctx.threads = threads;
      if (!config.empty()) load_config(config, ctx.params);
      for (const auto& key : command.options)
        if (handles[command.name][key]->count() > 0) ctx.params.set(key, storage[command.name][key]);
      for (const auto& key : command.flags)
        if (handles[command.name][key]->count() > 0) ctx.params.set(key, "true");
      // The seed follows the same precedence as every other parameter.
      if (app.get_option("--seed")->count() > 0)
        ctx.params.set("seed", std::to_string(seed));
      ctx.seed = static_cast<std::uint64_t>(ctx.params.integer("seed", 1));
      ctx.params.set("seed", std::to_string(ctx.seed));
      command.run(ctx);
      ctx.write_manifest();
    }
  } catch (const UsageError& e) {
    std::cerr << "rbwalk: " << e.what() << '\n';
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "rbwalk: invalid input: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "rbwalk: numerical integrity failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "rbwalk: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
