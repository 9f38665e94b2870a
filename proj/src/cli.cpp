// Copyright 2026 The sepcrit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sepcrit/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sepcrit/io.hpp"
#include "sepcrit/mixed_criterion.hpp"
#include "sepcrit/operators.hpp"
#include "sepcrit/oracles.hpp"
#include "sepcrit/pure_criterion.hpp"
#include "sepcrit/zoo.hpp"

namespace sepcrit::cli {

namespace {

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  separable verdict (or success for zoo, sweep, operators)\n"
    "  1  entangled verdict\n"
    "  2  usage or I/O error\n"
    "  3  numerical failure\n";

// Flags shared by the evaluating subcommands.
struct InputOptions {
  std::string file;
  std::string zoo;
  std::vector<int> dims;
  double p = 1.0;
  std::uint64_t seed = 0;
  std::size_t rank = 0;
  std::size_t terms = 4;
};

struct OutputOptions {
  bool json = false;
  std::string format = "text";
  std::string cross_check;  // empty: off
  bool timing = false;
};

struct OptimizerOptions {
  int restarts = 50;
  int evals = 2000;
  double ftol = 1e-10;
  std::string weights = "complex";
  unsigned threads = 0;
};

void add_input(CLI::App* app, InputOptions& in, bool with_file = true, bool with_p = true) {
  if (with_file) app->add_option("--file", in.file, "State file (JSON schema, see docs/)");
  app->add_option("--zoo", in.zoo,
                  "Named state: ghz, w, bell, product, werner, isotropic, ghz_noise, "
                  "random_pure, random_mixed, mixture_of_products");
  app->add_option("--dims", in.dims, "Local dimensions, comma separated (e.g. 2,2,2)")
      ->delimiter(',');
  if (with_p) {
    app->add_option("--p", in.p, "Mixing parameter for werner, isotropic, ghz_noise")
        ->capture_default_str();
  }
  app->add_option("--seed", in.seed, "Seed for random states and the optimizer")
      ->capture_default_str();
  app->add_option("--rank", in.rank, "Rank of random_mixed (0: full)")->capture_default_str();
  app->add_option("--terms", in.terms, "Number of terms of mixture_of_products")
      ->capture_default_str();
}

void add_output(CLI::App* app, OutputOptions& out, bool cross_check = true) {
  app->add_flag("--json", out.json, "Emit JSON (same as --format json)");
  app->add_option("--format", out.format, "Report format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  if (cross_check) {
    app->add_option("--cross-check", out.cross_check,
                    "Append oracle columns (ppt; wootters for 2x2) and flag disagreements")
        ->expected(0, 1)
        ->default_str("ppt")
        ->check(CLI::IsMember({"ppt"}));
  }
  app->add_flag("--timing", out.timing, "Record wall time in reports (breaks byte-identity)");
}

void add_optimizer(CLI::App* app, OptimizerOptions& opt) {
  app->add_option("--restarts", opt.restarts, "Optimizer restarts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--evals", opt.evals, "Objective evaluations per restart")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--ftol", opt.ftol, "Simplex function-value tolerance")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app->add_option("--weights", opt.weights,
                  "Weight domain: complex (per-operator phase) or nonneg (common phase)")
      ->check(CLI::IsMember({"complex", "nonneg"}))
      ->capture_default_str();
  app->add_option("--threads", opt.threads, "Worker threads for restarts (0: all cores)")
      ->capture_default_str();
}

OptimizerConfig make_config(const OptimizerOptions& o, std::uint64_t seed) {
  OptimizerConfig c;
  c.restarts = o.restarts;
  c.max_evals = o.evals;
  c.ftol = o.ftol;
  c.seed = seed;
  c.mode = o.weights == "nonneg" ? WeightMode::NonnegativeCommonPhase : WeightMode::Complex;
  c.threads = o.threads;
  return c;
}

io::Format format_of(const OutputOptions& o) {
  if (o.json) return io::Format::Json;
  if (o.format == "json") return io::Format::Json;
  if (o.format == "csv") return io::Format::CsvRow;
  return io::Format::Text;
}

std::string fmt_p(double p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

zoo::StateSpec zoo_spec(const InputOptions& in, std::optional<double> p = std::nullopt) {
  zoo::StateSpec spec;
  spec.name = zoo::parse_name(in.zoo);
  spec.dims = in.dims;
  spec.p = p.value_or(in.p);
  spec.seed = in.seed;
  spec.rank = in.rank;
  spec.terms = in.terms;
  return spec;
}

std::string zoo_id(const zoo::StateSpec& spec) {
  std::string id = zoo::to_string(spec.name);
  switch (spec.name) {
    case zoo::Name::Werner:
    case zoo::Name::Isotropic:
    case zoo::Name::GhzNoise:
      id += "(p=" + fmt_p(spec.p) + ")";
      break;
    case zoo::Name::Product:
    case zoo::Name::RandomPure:
    case zoo::Name::RandomMixed:
    case zoo::Name::MixtureOfProducts:
      id += "(seed=" + std::to_string(spec.seed) + ")";
      break;
    default:
      break;
  }
  return id;
}

struct Input {
  zoo::State state;
  std::string id;
};

Input load_input(const InputOptions& in, std::ostream& err) {
  if (in.file.empty() == in.zoo.empty()) {
    throw Error("exactly one of --file or --zoo is required");
  }
  if (!in.file.empty()) {
    auto loaded = io::read_state(in.file);
    for (const auto& w : loaded.warnings) err << "warning: " << in.file << ": " << w << "\n";
    return {std::move(loaded.state), loaded.metadata.name.value_or(in.file)};
  }
  const auto spec = zoo_spec(in);
  return {zoo::build(spec), zoo_id(spec)};
}

const SubsystemDims& dims_of(const zoo::State& s) {
  if (const auto* p = std::get_if<PureState>(&s)) return p->dims();
  return std::get<DensityMatrix>(s).dims();
}

DensityMatrix as_mixed(const zoo::State& s) {
  if (const auto* p = std::get_if<PureState>(&s)) return make_density(*p);
  return std::get<DensityMatrix>(s);
}

io::CrossCheck cross_check(const DensityMatrix& rho, bool separable, double tol,
                           std::optional<double> wootters) {
  io::CrossCheck c;
  bool all_ppt = true;
  double min_eig = 0.0;
  const auto n = rho.dims().parties();
  for (std::size_t p = 0; p < n; ++p) {
    const double e = ppt_min_eigenvalue(rho, {p});
    min_eig = p == 0 ? e : std::min(min_eig, e);
    all_ppt = all_ppt && e >= -kPptTol;
  }
  c.ppt = all_ppt;
  c.ppt_min_eigenvalue = min_eig;
  c.wootters = wootters;
  // NPT proves entanglement; PPT proves separability only for 2x2 and 2x3.
  const bool ppt_decisive = n == 2 && rho.dims().total() <= 6;
  c.disagreement = (separable && !all_ppt) || (ppt_decisive && !separable && all_ppt);
  if (wootters) c.disagreement = c.disagreement || ((*wootters > tol) == separable);
  return c;
}

std::vector<std::string> operator_tags(const OperatorFamily& family) {
  std::vector<std::string> tags;
  for (const auto& op : family.operators) tags.push_back(op.tag());
  return tags;
}

bool is_two_qubit(const SubsystemDims& d) {
  return d.parties() == 2 && d[0] == 2 && d[1] == 2;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int check_pure(const InputOptions& in, const OutputOptions& out_opts, double tol,
               std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  auto input = load_input(in, err);
  const auto* state = std::get_if<PureState>(&input.state);
  if (state == nullptr) throw Error("check-pure: input is a mixed state; use check-mixed");
  const auto family = enumerate_family(state->dims());
  const auto report = c_pure(*state, family, tol);

  io::ReportContext ctx;
  ctx.state_id = input.id;
  ctx.dims = state->dims().to_string();
  ctx.seed = in.seed;
  if (!out_opts.cross_check.empty()) {
    std::optional<double> w;
    if (is_two_qubit(state->dims())) w = wootters_pure(*state);
    ctx.cross_check = cross_check(make_density(*state), report.separable, tol, w);
  }
  if (out_opts.timing) ctx.wall_time_s = seconds_since(t0);
  const auto fmt = format_of(out_opts);
  if (fmt == io::Format::CsvRow) out << io::csv_header(ctx.cross_check.has_value()) << "\n";
  out << io::write_report(report, ctx, fmt);
  return report.separable ? kSeparable : kEntangled;
}

MixedCriterionReport evaluate_mixed(const DensityMatrix& rho, const OptimizerConfig& config,
                                    double tol, io::ReportContext& ctx,
                                    const OutputOptions& out_opts) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto family = enumerate_family(rho.dims());
  auto report = c_mixed(rho, family, config, tol);
  ctx.dims = rho.dims().to_string();
  ctx.seed = config.seed;
  ctx.operator_tags = operator_tags(family);
  if (!out_opts.cross_check.empty()) {
    std::optional<double> w;
    if (is_two_qubit(rho.dims())) w = wootters_mixed(rho);
    ctx.cross_check = cross_check(rho, report.separable, tol, w);
  }
  if (out_opts.timing) ctx.wall_time_s = seconds_since(t0);
  return report;
}

int check_mixed(const InputOptions& in, const OutputOptions& out_opts,
                const OptimizerOptions& opt, double tol, std::ostream& out,
                std::ostream& err) {
  auto input = load_input(in, err);
  const auto rho = as_mixed(input.state);
  io::ReportContext ctx;
  ctx.state_id = input.id;
  const auto report = evaluate_mixed(rho, make_config(opt, in.seed), tol, ctx, out_opts);
  const auto fmt = format_of(out_opts);
  if (fmt == io::Format::CsvRow) out << io::csv_header(ctx.cross_check.has_value()) << "\n";
  out << io::write_report(report, ctx, fmt);
  if (!report.converged) {
    err << "note: best restart hit the evaluation budget before meeting ftol\n";
  }
  return report.separable ? kSeparable : kEntangled;
}

int sweep(const InputOptions& in, const OutputOptions& out_opts, const OptimizerOptions& opt,
          const std::string& grid_text, const std::string& out_path, double tol,
          std::ostream& out) {
  if (in.zoo.empty()) throw Error("sweep: --zoo is required");
  const auto name = zoo::parse_name(in.zoo);
  if (name != zoo::Name::Werner && name != zoo::Name::Isotropic &&
      name != zoo::Name::GhzNoise) {
    throw Error("sweep: --zoo must be a parameterized family (werner, isotropic, ghz_noise)");
  }
  const auto grid = parse_grid(grid_text);
  const auto config = make_config(opt, in.seed);

  std::ostringstream csv;
  csv << io::csv_header(!out_opts.cross_check.empty()) << "\n";
  for (double p : grid.points) {
    const auto spec = zoo_spec(in, p);
    const auto rho = zoo::build_mixed(spec);
    io::ReportContext ctx;
    ctx.state_id = zoo_id(spec);
    const auto report = evaluate_mixed(rho, config, tol, ctx, out_opts);
    csv << io::write_report(report, ctx, io::Format::CsvRow);
  }
  if (out_path.empty()) {
    out << csv.str();
  } else {
    std::ofstream f(out_path);
    if (!f) throw Error("cannot write " + out_path);
    f << csv.str();
    if (!f) throw Error("write failed: " + out_path);
    out << "wrote " << grid.points.size() << " rows to " << out_path << "\n";
  }
  return kSeparable;
}

int list_operators(const std::vector<int>& dims_in, const OutputOptions& out_opts,
                   std::ostream& out) {
  if (dims_in.empty()) throw Error("operators: --dims is required");
  const SubsystemDims dims(dims_in);
  const auto family = enumerate_family(dims);
  if (format_of(out_opts) == io::Format::Json) {
    nlohmann::json j;
    j["dims"] = dims.values();
    j["matrix_dimension"] = dims.total();
    j["size"] = family.size();
    j["normalization"] = family.normalization;
    auto ops = nlohmann::json::array();
    for (const auto& op : family.operators) {
      nlohmann::json planes = nlohmann::json::array();
      for (const auto& f : op.factors) {
        if (f.kind == FactorKind::Identity) {
          planes.push_back(nullptr);
        } else {
          planes.push_back({f.plane.a, f.plane.b});
        }
      }
      ops.push_back({{"pattern", op.pattern()},
                     {"abs_count", op.abs_count},
                     {"planes", std::move(planes)},
                     {"tag", op.tag()}});
    }
    j["operators"] = std::move(ops);
    out << j.dump(2) << "\n";
  } else if (format_of(out_opts) == io::Format::CsvRow) {
    out << "index,pattern,abs_count,tag,matrix_dimension\n";
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto& op = family.operators[i];
      out << i << ",\"" << op.pattern() << "\"," << op.abs_count << ",\"" << op.tag() << "\","
          << dims.total() << "\n";
    }
  } else {
    out << "dims " << dims.to_string() << ": " << family.size() << " operators, "
        << dims.total() << "x" << dims.total() << " matrices, normalization "
        << family.normalization << "\n";
    for (std::size_t i = 0; i < family.size(); ++i) {
      out << "  " << i << "  " << family.operators[i].tag() << "\n";
    }
  }
  return kSeparable;
}

struct OracleOptions {
  std::string which;
  std::vector<std::size_t> transpose{0};
  std::size_t samples = 2000;
  std::size_t columns = 0;
};

int run_oracle(const OracleOptions& o, const InputOptions& in, const OutputOptions& out_opts,
               double tol, std::ostream& out, std::ostream& err) {
  auto input = load_input(in, err);
  const auto& dims = dims_of(input.state);
  nlohmann::json j;
  j["oracle"] = o.which;
  j["state_id"] = input.id;
  j["dims"] = dims.to_string();
  bool separable = true;

  auto need_pure = [&]() -> const PureState& {
    const auto* p = std::get_if<PureState>(&input.state);
    if (p == nullptr) throw Error("oracle " + o.which + ": requires a pure state");
    return *p;
  };

  if (o.which == "product") {
    const auto& s = need_pure();
    const auto sv = flattening_second_singular_values(s);
    j["second_singular_values"] = sv;
    separable = is_product(s);
  } else if (o.which == "wootters") {
    double c = 0.0;
    if (const auto* p = std::get_if<PureState>(&input.state)) {
      c = wootters_pure(*p);
    } else {
      c = wootters_mixed(std::get<DensityMatrix>(input.state));
    }
    j["value"] = c;
    separable = c <= tol;
  } else if (o.which == "ppt") {
    const auto rho = as_mixed(input.state);
    const double e = ppt_min_eigenvalue(rho, o.transpose);
    j["transposed"] = o.transpose;
    j["min_eigenvalue"] = e;
    separable = e >= -kPptTol;
  } else if (o.which == "roof") {
    const auto rho = as_mixed(input.state);
    const auto family = enumerate_family(rho.dims());
    const DecompositionSampler sampler(in.seed, o.samples, o.columns);
    const double v = roof_upper_bound(rho, family, sampler);
    j["samples"] = o.samples;
    j["value"] = v;
    separable = v <= tol;
  } else if (o.which == "c2") {
    const double v = compound_tensor_c2(need_pure());
    j["value"] = v;
    separable = v <= tol;
  } else {
    throw Error("unknown oracle '" + o.which + "'");
  }
  j["verdict"] = separable ? "separable" : "entangled";

  if (format_of(out_opts) == io::Format::Json) {
    out << j.dump(2) << "\n";
  } else {
    for (auto it = j.begin(); it != j.end(); ++it) {
      out << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
  }
  return separable ? kSeparable : kEntangled;
}

}  // namespace

Grid parse_grid(const std::string& text) {
  Grid g;
  auto to_double = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw Error("grid: cannot parse '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw Error("grid: cannot parse '" + s + "'");
    return v;
  };
  if (text.empty()) throw Error("grid: empty");

  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3) throw Error("grid: expected start:stop:step");
    const double start = to_double(parts[0]);
    const double stop = to_double(parts[1]);
    const double step = to_double(parts[2]);
    if (!(step > 0.0)) throw Error("grid: step must be positive");
    if (stop < start) throw Error("grid: empty (stop < start)");
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
    for (std::size_t k = 0; k <= n; ++k) g.points.push_back(start + double(k) * step);
    if (std::abs(g.points.back() - stop) <= 1e-9 * step) g.points.back() = stop;
  } else {
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) g.points.push_back(to_double(part));
    for (std::size_t i = 1; i < g.points.size(); ++i) {
      if (!(g.points[i] > g.points[i - 1])) throw Error("grid: values must increase");
    }
  }
  if (g.points.empty()) throw Error("grid: empty");
  return g;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"sepcrit: separability criteria for multipartite quantum states", "sepcrit"};
  app.footer(kExitCodes);
  app.require_subcommand(1);

  InputOptions in;
  OutputOptions out_opts;
  OptimizerOptions opt;
  double tol_pure = kDefaultPureTol;
  double tol_mixed = kDefaultMixedTol;
  double tol_oracle = kDefaultMixedTol;

  auto* pure_cmd = app.add_subcommand("check-pure", "Evaluate the pure-state criterion |C(psi)|");
  add_input(pure_cmd, in);
  add_output(pure_cmd, out_opts);
  pure_cmd->add_option("--tol", tol_pure, "Separability tolerance")->capture_default_str();

  auto* mixed_cmd = app.add_subcommand("check-mixed", "Evaluate the mixed-state criterion C(rho)");
  add_input(mixed_cmd, in);
  add_output(mixed_cmd, out_opts);
  add_optimizer(mixed_cmd, opt);
  mixed_cmd->add_option("--tol", tol_mixed, "Separability tolerance")->capture_default_str();

  std::string zoo_name;
  std::string zoo_out;
  auto* zoo_cmd = app.add_subcommand("zoo", "Write a named state as a JSON state file");
  zoo_cmd->add_option("name", zoo_name, "State name")->required();
  zoo_cmd->add_option("--dims", in.dims, "Local dimensions")->delimiter(',');
  zoo_cmd->add_option("--p", in.p, "Mixing parameter")->capture_default_str();
  zoo_cmd->add_option("--seed", in.seed, "Seed")->capture_default_str();
  zoo_cmd->add_option("--rank", in.rank, "Rank of random_mixed (0: full)")->capture_default_str();
  zoo_cmd->add_option("--terms", in.terms, "Terms of mixture_of_products")->capture_default_str();
  zoo_cmd->add_option("--out", zoo_out, "Output path (default stdout)");

  std::string grid_text;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate C(rho) over a parameter grid, CSV out");
  add_input(sweep_cmd, in, false, false);
  add_optimizer(sweep_cmd, opt);
  sweep_cmd->add_option("--p", grid_text, "Grid start:stop:step or a,b,c")->required();
  sweep_cmd->add_option("--out", sweep_out, "CSV path (default stdout)");
  sweep_cmd->add_option("--cross-check", out_opts.cross_check, "Append oracle columns")
      ->expected(0, 1)
      ->default_str("ppt")
      ->check(CLI::IsMember({"ppt"}));
  sweep_cmd->add_flag("--timing", out_opts.timing, "Fill the wall_time_s column");
  sweep_cmd->add_option("--tol", tol_mixed, "Separability tolerance")->capture_default_str();

  std::vector<int> op_dims;
  auto* ops_cmd = app.add_subcommand("operators", "List the operator family for given dims");
  ops_cmd->add_option("--dims", op_dims, "Local dimensions")->delimiter(',')->required();
  ops_cmd->add_flag("--json", out_opts.json, "Emit JSON");
  ops_cmd->add_option("--format", out_opts.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Run an independent reference check");
  oracle_cmd->add_option("which", oracle.which, "product | wootters | ppt | roof | c2")
      ->required()
      ->check(CLI::IsMember({"product", "wootters", "ppt", "roof", "c2"}));
  add_input(oracle_cmd, in);
  add_output(oracle_cmd, out_opts, false);
  oracle_cmd->add_option("--transpose", oracle.transpose,
                         "ppt: subsystems to transpose, comma separated (0-based)")
      ->delimiter(',');
  oracle_cmd->add_option("--samples", oracle.samples, "roof: sampled decompositions")
      ->capture_default_str();
  oracle_cmd->add_option("--columns", oracle.columns,
                         "roof: decomposition size (0: min(2r, r+4))")
      ->capture_default_str();
  oracle_cmd->add_option("--tol", tol_oracle, "Separability tolerance")->capture_default_str();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSeparable;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSeparable;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (e.get_exit_code() != 0) err << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (pure_cmd->parsed()) return check_pure(in, out_opts, tol_pure, out, err);
    if (mixed_cmd->parsed()) return check_mixed(in, out_opts, opt, tol_mixed, out, err);
    if (sweep_cmd->parsed()) {
      return sweep(in, out_opts, opt, grid_text, sweep_out, tol_mixed, out);
    }
    if (ops_cmd->parsed()) return list_operators(op_dims, out_opts, out);
    if (oracle_cmd->parsed()) return run_oracle(oracle, in, out_opts, tol_oracle, out, err);
    if (zoo_cmd->parsed()) {
      in.zoo = zoo_name;
      const auto spec = zoo_spec(in);
      const auto text = io::write_state(zoo::build(spec), {zoo_id(spec), in.seed});
      if (zoo_out.empty()) {
        out << text;
      } else {
        std::ofstream f(zoo_out);
        if (!f) throw Error("cannot write " + zoo_out);
        f << text;
      }
      return kSeparable;
    }
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace sepcrit::cli
