#include "lottery/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "lottery/distribution.hpp"
#include "lottery/errors.hpp"
#include "lottery/evalbench.hpp"
#include "lottery/io.hpp"
#include "lottery/parallel.hpp"
#include "lottery/pipeline.hpp"
#include "lottery/subset_sum.hpp"
#include "lottery/tensor.hpp"

namespace lottery::cli {
namespace {

namespace fs = std::filesystem;
using io::format_double;

constexpr const char* kFileGrammar = R"(File formats
  network.json   {"depth": l, "widths": [d0, ..., dl],
                  "layers": [[row-major d1 x d0 entries], ..., [dl x d(l-1)]]}
  masks.json     same layout, every entry 0 or 1
  config.json    written by calibrate; "C" is read by --config
  CSV files      comma separated, header first:
    sweep        epsilon,delta,n,prob,ci_lo,ci_hi,trials,seed
                 then "# fit,slope=..,intercept=..,r2=.." and "# saturated,<k>"
    report.csv   layer,out_idx,in_idx,branch,target,achieved_error,feasible
    per-weight   layer,out_idx,in_idx,target,achieved_error,subset_size,feasible

Distributions (--dist)
  uniform[:a,b]  normal[:mean,sd]  laplace[:mean,scale]
  product_uniform  half_product_atom

Exit status: 0 ok, 1 invalid input, 2 capacity or convergence limit.)";

struct Options {
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  std::size_t threads = 1;
  std::string out;

  double eps = 0.1;
  double delta = 0.1;
  std::vector<double> eps_list;
  std::optional<double> c;
  std::string config;
  std::string dist = "uniform";
  double lo = -0.5;
  double hi = 0.5;
  std::size_t max_n = kMaxEnumeratedValues;

  std::vector<std::size_t> widths;
  bool no_normalize = false;
  std::string target_path;
  std::string random_path;
  std::string masks_path;
  std::size_t samples = kDefaultSupSamples;
  std::size_t ks_samples = 100000;

  std::vector<double> values;
  double target_value = 0.0;
  std::size_t n = 0;
  std::size_t d = 0;
};

class Echo {
 public:
  explicit Echo(std::string command) { line_ << "config: command=" << command; }
  Echo& add(const std::string& key, const std::string& value) {
    line_ << ' ' << key << '=' << value;
    return *this;
  }
  Echo& add(const std::string& key, double value) { return add(key, format_double(value)); }
  Echo& add(const std::string& key, std::size_t value) { return add(key, std::to_string(value)); }
  template <typename T>
  Echo& add_list(const std::string& key, const std::vector<T>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ',';
      if constexpr (std::is_floating_point_v<T>) {
        s += format_double(xs[i]);
      } else {
        s += std::to_string(xs[i]);
      }
    }
    return add(key, s);
  }
  std::string str() const { return line_.str(); }

 private:
  std::ostringstream line_;
};

void require_open_unit(double x, const char* name) {
  if (!(x > 0 && x < 1)) {
    throw ValidationError(std::string(name) + " must lie in (0, 1), got " + format_double(x));
  }
}

void require_file(const std::string& path, const char* flag) {
  if (path.empty()) throw ValidationError(std::string(flag) + " is required");
  if (!fs::is_regular_file(path)) {
    throw ValidationError(std::string(flag) + " file '" + path + "' does not exist");
  }
}

// Checks that the parent directory of an output file exists.
void require_writable(const std::string& path) {
  if (path.empty()) return;
  const fs::path parent = fs::path(path).parent_path();
  if (!parent.empty() && !fs::is_directory(parent)) {
    throw ValidationError("output directory '" + parent.string() + "' does not exist");
  }
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
  } else {
    io::write_text(o.out, text);
  }
}

double resolve_c(const Options& o) {
  if (o.c && !o.config.empty()) throw ValidationError("--C and --config are mutually exclusive");
  if (o.c) {
    if (!(*o.c > 0) || !std::isfinite(*o.c)) throw ValidationError("--C must be positive");
    return *o.c;
  }
  if (!o.config.empty()) {
    require_file(o.config, "--config");
    try {
      const auto doc = nlohmann::json::parse(io::read_text(o.config));
      const double c = doc.at("C").get<double>();
      if (!(c > 0)) throw ValidationError("config C must be positive");
      return c;
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError("config file '" + o.config + "' lacks a numeric C: " + e.what());
    }
  }
  return kDefaultWidthConstant;
}

void add_common(CLI::App* cmd, Options& o, bool trials) {
  cmd->add_option("--seed", o.seed, "Master seed; every random draw derives from it")
      ->capture_default_str();
  if (trials) cmd->add_option("--trials", o.trials, "Monte-Carlo trials")->capture_default_str();
  cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
}

int cmd_gen(const Options& o, bool target, std::ostream& out, std::ostream& log) {
  if (o.widths.size() < 2) throw ValidationError("--widths needs at least two entries");
  require_writable(o.out);
  const Distribution dist = Distribution::parse(o.dist);
  Echo echo(target ? "gen-target" : "gen-random");
  echo.add_list("widths", o.widths).add("dist", dist.tag()).add("seed", std::to_string(o.seed));
  if (target) echo.add("normalize", std::string(o.no_normalize ? "no" : "yes"));
  log << echo.str() << '\n';

  DenseNetwork net = random_network(o.widths, dist, o.seed);
  if (target && !o.no_normalize) net = normalize_network(net).network;
  const std::string text = io::network_to_json(net);
  if (o.out.empty()) {
    out << text;
  } else {
    io::write_text(o.out, text);
  }
  return kExitOk;
}

std::string prune_summary(const PrunedNetwork& p, const Echo& echo) {
  std::ostringstream s;
  const ApproxReport& r = p.report;
  s << echo.str() << '\n';
  s << "random widths:";
  for (auto w : p.plan.random_widths) s << ' ' << w;
  s << "\nblock sizes:";
  for (auto k : p.plan.block_sizes) s << ' ' << k;
  s << "\nper-layer budget (eps/2l): " << format_double(r.per_layer_budget) << '\n';
  for (std::size_t i = 0; i < r.per_layer_errors.size(); ++i) {
    s << "layer " << i << ": error " << format_double(r.per_layer_errors[i]) << ", "
      << r.layers[i].infeasible_links << " of " << r.layers[i].links.size()
      << " links over budget\n";
  }
  s << "nominal bound: " << format_double(r.theoretical_budget) << '\n';
  s << "achieved bound: " << format_double(r.achieved_bound) << '\n';
  s << "measured sup error (" << r.samples << " sphere samples): "
    << format_double(r.measured_sup_error) << '\n';
  s << "infeasible subset sums: " << r.infeasible_count << '\n';
  s << "within eps: " << (r.measured_sup_error <= p.plan.epsilon ? "yes" : "no") << '\n';
  return s.str();
}

int cmd_prune(const Options& o, std::ostream& out, std::ostream& log) {
  require_file(o.target_path, "--target");
  require_open_unit(o.eps, "--eps");
  require_open_unit(o.delta, "--delta");
  if (o.out.empty()) throw ValidationError("--out (output directory) is required");
  const double c = resolve_c(o);
  const DenseNetwork target = io::read_network(o.target_path);
  std::error_code ec;
  fs::create_directories(o.out, ec);
  if (!fs::is_directory(o.out)) {
    throw ValidationError("cannot create output directory '" + o.out + "'");
  }

  Echo echo("prune");
  echo.add("target", o.target_path)
      .add("eps", o.eps)
      .add("delta", o.delta)
      .add("C", c)
      .add("seed", std::to_string(o.seed))
      .add("samples", o.samples);
  log << echo.str() << " threads=" << o.threads << '\n';

  const PrunedNetwork p = prune_to_approximate(target, o.eps, o.delta, c, o.seed, o.samples);
  const fs::path dir(o.out);
  io::write_network(dir / "random.json", p.random_net);
  io::write_masks(dir / "masks.json", p.masks);
  std::ostringstream csv;
  io::write_link_csv(csv, p.report.layers);
  io::write_text(dir / "report.csv", csv.str());
  const std::string summary = prune_summary(p, echo);
  io::write_text(dir / "summary.txt", summary);
  out << summary;
  return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& log) {
  require_file(o.target_path, "--target");
  require_file(o.random_path, "--random");
  require_writable(o.out);
  const DenseNetwork target = io::read_network(o.target_path);
  const DenseNetwork random = io::read_network(o.random_path);
  MaskSet masks;
  if (o.masks_path.empty()) {
    masks = all_ones_masks(random);
  } else {
    require_file(o.masks_path, "--masks");
    masks = io::read_masks(o.masks_path);
  }
  Echo echo("eval");
  echo.add("target", o.target_path)
      .add("random", o.random_path)
      .add("masks", o.masks_path.empty() ? std::string("all-ones") : o.masks_path)
      .add("samples", o.samples)
      .add("seed", std::to_string(o.seed));
  log << echo.str() << '\n';
  const double e = sup_error_estimate(target, random, masks, o.samples, o.seed);
  emit(o, out, "sup_error," + format_double(e) + "\n");
  return kExitOk;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& log) {
  if (!(o.eps > 0)) throw ValidationError("--eps must be positive");
  std::vector<double> values = o.values;
  Echo echo("solve");
  if (values.empty()) {
    if (o.n == 0) throw ValidationError("give either --values or --n with --dist");
    const Distribution dist = Distribution::parse(o.dist);
    Rng rng = make_rng(o.seed, "solve");
    values.resize(o.n);
    for (double& v : values) v = dist.sample(rng);
    echo.add("n", o.n).add("dist", dist.tag()).add("seed", std::to_string(o.seed));
  } else {
    echo.add_list("values", values);
  }
  echo.add("target", o.target_value).add("eps", o.eps);
  log << echo.str() << '\n';
  const SubsetSelection sel = solve_subset_sum({values, o.target_value, o.eps});
  std::ostringstream s;
  s << "indices,";
  for (std::size_t i = 0; i < sel.indices.size(); ++i) s << (i ? " " : "") << sel.indices[i];
  s << "\nachieved_sum," << format_double(sel.achieved_sum) << "\nabs_error,"
    << format_double(sel.abs_error) << "\nfeasible," << (sel.feasible ? 1 : 0) << '\n';
  emit(o, out, s.str());
  return kExitOk;
}

int cmd_coverage(const Options& o, std::ostream& out, std::ostream& log) {
  if (o.n == 0) throw ValidationError("--n is required and must be at least 1");
  if (!(o.eps > 0)) throw ValidationError("--eps must be positive");
  if (!(o.lo < o.hi)) throw ValidationError("--lo must be below --hi");
  require_writable(o.out);
  const Distribution dist = Distribution::parse(o.dist);
  Echo echo("coverage");
  echo.add("dist", dist.tag())
      .add("n", o.n)
      .add("eps", o.eps)
      .add("lo", o.lo)
      .add("hi", o.hi)
      .add("trials", o.trials)
      .add("seed", std::to_string(o.seed));
  log << echo.str() << '\n';
  const CoverageEstimate est =
      estimate_coverage_probability(dist, o.n, o.eps, o.lo, o.hi, o.trials, o.seed);
  std::ostringstream s;
  s << "prob,ci_lo,ci_hi,successes,trials\n"
    << format_double(est.prob) << ',' << format_double(est.ci95.lo) << ','
    << format_double(est.ci95.hi) << ',' << est.successes << ',' << est.trials << '\n';
  emit(o, out, s.str());
  return kExitOk;
}

CoverageTarget coverage_target(const Options& o) {
  if (!(o.lo < o.hi)) throw ValidationError("--lo must be below --hi");
  if (o.max_n < 1 || o.max_n > kMaxCoverageValues) {
    throw ValidationError("--max-n must lie in [1, " + std::to_string(kMaxCoverageValues) + "]");
  }
  return {o.lo, o.hi, o.max_n};
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& log) {
  if (o.eps_list.empty()) throw ValidationError("--eps needs at least one value");
  for (double e : o.eps_list) require_open_unit(e, "--eps");
  require_open_unit(o.delta, "--delta");
  require_writable(o.out);
  const CoverageTarget target = coverage_target(o);
  const Distribution dist = Distribution::parse(o.dist);
  Echo echo("sweep");
  echo.add("dist", dist.tag())
      .add("delta", o.delta)
      .add_list("eps", o.eps_list)
      .add("lo", o.lo)
      .add("hi", o.hi)
      .add("max_n", o.max_n)
      .add("trials", o.trials)
      .add("seed", std::to_string(o.seed));
  log << echo.str() << '\n';
  const SweepResult sweep = lueker_sweep(o.eps_list, o.delta, dist, o.trials, o.seed, target);
  std::ostringstream csv;
  io::write_sweep_csv(csv, sweep);
  emit(o, out, csv.str());
  return kExitOk;
}

int cmd_calibrate(const Options& o, std::ostream& out, std::ostream& log) {
  require_open_unit(o.eps, "--eps");
  require_open_unit(o.delta, "--delta");
  require_writable(o.out);
  const CoverageTarget target = coverage_target(o);
  const Distribution dist = Distribution::parse(o.dist);
  Echo echo("calibrate");
  echo.add("dist", dist.tag())
      .add("eps", o.eps)
      .add("delta", o.delta)
      .add("lo", o.lo)
      .add("hi", o.hi)
      .add("max_n", o.max_n)
      .add("trials", o.trials)
      .add("seed", std::to_string(o.seed));
  log << echo.str() << '\n';
  const Calibration cal = calibrate_c(o.delta, o.eps, dist, o.trials, o.seed, target);
  nlohmann::json doc;
  doc["C"] = cal.constant_c;
  doc["dist"] = dist.tag();
  doc["eps"] = o.eps;
  doc["delta"] = o.delta;
  doc["lo"] = o.lo;
  doc["hi"] = o.hi;
  doc["minimal_n"] = cal.row.minimal_n;
  doc["prob"] = cal.row.estimate.prob;
  doc["trials"] = o.trials;
  doc["seed"] = o.seed;
  emit(o, out, doc.dump(2) + "\n");
  return kExitOk;
}

int cmd_density(const Options& o, std::ostream& out, std::ostream& log) {
  require_writable(o.out);
  const Distribution dist = Distribution::parse(o.dist);
  Echo echo("density-check");
  echo.add("dist", dist.tag()).add("samples", o.ks_samples).add("seed", std::to_string(o.seed));
  log << echo.str() << '\n';
  const DensityCheck r = density_check(dist, o.ks_samples, o.seed);
  std::ostringstream s;
  if (dist.kind() == Distribution::Kind::kProductUniform ||
      dist.kind() == Distribution::Kind::kHalfProductAtom) {
    s << "pdf(0.5)," << format_double(dist.pdf(0.5)) << '\n';
  }
  s << "integral," << format_double(r.integral) << ",expected," << format_double(r.expected_mass)
    << ",ok," << (r.integral_ok() ? 1 : 0) << '\n'
    << "ks," << format_double(r.ks_statistic) << ",critical_0.01,"
    << format_double(r.ks_critical) << ",ok," << (r.ks_ok() ? 1 : 0) << '\n'
    << "certificate,alpha," << format_double(r.alpha) << ",c," << format_double(r.c)
    << ",grid_min_pdf," << format_double(r.grid_min_pdf) << ",ok,"
    << (r.certificate_ok() ? 1 : 0) << '\n';
  emit(o, out, s.str());
  return kExitOk;
}

int cmd_bounds(const Options& o, std::ostream& out, std::ostream& log) {
  if (o.d == 0) throw ValidationError("--d must be at least 1");
  if (!(o.eps > 0 && o.eps < 0.5)) throw ValidationError("--eps must lie in (0, 1/2)");
  Echo echo("bounds");
  echo.add("d", o.d).add("eps", o.eps);
  log << echo.str() << '\n';
  std::ostringstream s;
  s << "min_width," << format_double(lower_bound_min_width(o.d, o.eps)) << '\n'
    << "min_params," << format_double(lower_bound_min_params(o.d, o.eps)) << '\n';
  emit(o, out, s.str());
  return kExitOk;
}

int cmd_per_weight(const Options& o, std::ostream& out, std::ostream& log) {
  require_file(o.target_path, "--target");
  if (o.n == 0) throw ValidationError("--n is required and must be at least 1");
  if (!(o.eps > 0)) throw ValidationError("--eps must be positive");
  require_writable(o.out);
  const DenseNetwork target = io::read_network(o.target_path);
  const Distribution dist = Distribution::parse(o.dist);
  Echo echo("per-weight");
  echo.add("target", o.target_path)
      .add("n", o.n)
      .add("eps", o.eps)
      .add("dist", dist.tag())
      .add("seed", std::to_string(o.seed));
  log << echo.str() << '\n';
  const auto rows = per_weight_report(target, o.n, o.eps, dist, o.seed);
  std::ostringstream csv;
  io::write_weight_csv(csv, rows);
  emit(o, out, csv.str());
  const auto ok = std::count_if(rows.begin(), rows.end(), [](const WeightRow& r) {
    return r.feasible;
  });
  out << "within eps: " << ok << " of " << rows.size() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Prune random ReLU networks into approximations of a target network by "
               "solving random subset-sum problems.",
               "lottery");
  app.footer(kFileGrammar);
  app.require_subcommand(1, 1);

  auto* gen_target = app.add_subcommand("gen-target", "Random target network, normalized to "
                                                      "spectral norm <= 1 per layer");
  auto* gen_random = app.add_subcommand("gen-random", "Random network with i.i.d. weights");
  for (auto* cmd : {gen_target, gen_random}) {
    cmd->add_option("--widths", o.widths, "Layer widths d0,d1,...")->delimiter(',')->required();
    cmd->add_option("--dist", o.dist, "Weight distribution")->capture_default_str();
    cmd->add_option("--out", o.out, "Output network file (stdout if omitted)");
    add_common(cmd, o, false);
  }
  gen_target->add_flag("--no-normalize", o.no_normalize, "Keep raw weights");

  auto* prune = app.add_subcommand("prune", "Prune a random network to approximate a target");
  prune->add_option("--target", o.target_path, "Target network file")->required();
  prune->add_option("--eps", o.eps, "Approximation error")->capture_default_str();
  prune->add_option("--delta", o.delta, "Failure probability")->capture_default_str();
  prune->add_option("--C", o.c, "Width constant (default 10)");
  prune->add_option("--config", o.config, "Config file from calibrate supplying C");
  prune->add_option("--samples", o.samples, "Sphere samples for the measured error")
      ->capture_default_str();
  prune->add_option("--out", o.out,
                    "Output directory: random.json, masks.json, report.csv, summary.txt")
      ->required();
  add_common(prune, o, false);

  auto* eval = app.add_subcommand("eval", "Sphere-sampled sup error of a masked network");
  eval->add_option("--target", o.target_path, "Target network file")->required();
  eval->add_option("--random", o.random_path, "Random network file")->required();
  eval->add_option("--masks", o.masks_path, "Mask file (all ones if omitted)");
  eval->add_option("--samples", o.samples, "Sphere samples")->capture_default_str();
  eval->add_option("--out", o.out, "Output file");
  add_common(eval, o, false);

  auto* solve = app.add_subcommand("solve", "Exact subset-sum minimization");
  solve->add_option("--values", o.values, "Comma-separated values")->delimiter(',');
  solve->add_option("--n", o.n, "Number of random values (with --dist)");
  solve->add_option("--dist", o.dist, "Value distribution")->capture_default_str();
  solve->add_option("--target", o.target_value, "Target sum")->required();
  solve->add_option("--eps", o.eps, "Tolerance")->capture_default_str();
  solve->add_option("--out", o.out, "Output file");
  add_common(solve, o, false);

  auto* coverage = app.add_subcommand("coverage", "Probability that n draws eps-cover [lo, hi]");
  coverage->add_option("--n", o.n, "Number of values")->required();
  auto* sweep = app.add_subcommand("sweep", "Minimal n against eps; CSV with a log-fit footer");
  auto* calibrate = app.add_subcommand("calibrate", "Empirical width constant C");
  for (auto* cmd : {coverage, sweep, calibrate}) {
    cmd->add_option("--dist", o.dist, "Value distribution")->capture_default_str();
    cmd->add_option("--lo", o.lo, "Interval start")->capture_default_str();
    cmd->add_option("--hi", o.hi, "Interval end")->capture_default_str();
    cmd->add_option("--out", o.out, "Output file");
    add_common(cmd, o, true);
  }
  coverage->add_option("--eps", o.eps, "Coverage radius")->capture_default_str();
  sweep->add_option("--eps", o.eps_list, "Comma-separated radii")->delimiter(',')->required();
  calibrate->add_option("--eps", o.eps, "Coverage radius")->capture_default_str();
  for (auto* cmd : {sweep, calibrate}) {
    cmd->add_option("--delta", o.delta, "Failure probability")->capture_default_str();
    cmd->add_option("--max-n", o.max_n, "Largest n searched")->capture_default_str();
  }

  auto* density = app.add_subcommand("density-check", "Quadrature, KS test and certificate "
                                                      "check of a distribution");
  density->add_option("--dist", o.dist, "Distribution")->capture_default_str();
  density->add_option("--samples", o.ks_samples, "Sampler draws for the KS test")
      ->capture_default_str();
  density->add_option("--out", o.out, "Output file");
  add_common(density, o, false);

  auto* bounds = app.add_subcommand("bounds", "Lower bounds on width and parameter count");
  bounds->add_option("--d", o.d, "Dimension")->required();
  bounds->add_option("--eps", o.eps, "Approximation error")->required();
  bounds->add_option("--out", o.out, "Output file");

  auto* per_weight =
      app.add_subcommand("per-weight", "Approximate each weight by a random subset sum");
  per_weight->add_option("--target", o.target_path, "Target network file")->required();
  per_weight->add_option("--n", o.n, "Coefficients per weight")->required();
  per_weight->add_option("--eps", o.eps, "Tolerance")->capture_default_str();
  per_weight->add_option("--dist", o.dist, "Coefficient distribution")->capture_default_str();
  per_weight->add_option("--out", o.out, "Output CSV (stdout if omitted)");
  add_common(per_weight, o, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  const std::size_t saved_threads = thread_count();
  try {
    set_thread_count(o.threads);
    int status = kExitOk;
    if (gen_target->parsed()) status = cmd_gen(o, true, out, err);
    else if (gen_random->parsed()) status = cmd_gen(o, false, out, err);
    else if (prune->parsed()) status = cmd_prune(o, out, err);
    else if (eval->parsed()) status = cmd_eval(o, out, err);
    else if (solve->parsed()) status = cmd_solve(o, out, err);
    else if (coverage->parsed()) status = cmd_coverage(o, out, err);
    else if (sweep->parsed()) status = cmd_sweep(o, out, err);
    else if (calibrate->parsed()) status = cmd_calibrate(o, out, err);
    else if (density->parsed()) status = cmd_density(o, out, err);
    else if (bounds->parsed()) status = cmd_bounds(o, out, err);
    else if (per_weight->parsed()) status = cmd_per_weight(o, out, err);
    set_thread_count(saved_threads);
    return status;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    set_thread_count(saved_threads);
    return kExitCapacity;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << " (last estimate "
        << format_double(e.last_estimate()) << ")\n";
    set_thread_count(saved_threads);
    return kExitCapacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    set_thread_count(saved_threads);
    return kExitValidation;
  }
}

}  // namespace lottery::cli
