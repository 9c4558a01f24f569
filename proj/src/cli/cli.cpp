#include "hbt/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hbt/certification.hpp"
#include "hbt/errors.hpp"
#include "hbt/io.hpp"
#include "hbt/solver.hpp"

namespace hbt::cli {
namespace {

using nlohmann::ordered_json;

enum class OutputFormat { Csv, Json };

struct Tolerances {
  double round_trip = 1e-5;
  double inequality = -1.0;  // negative: per-check defaults
  double residual = 1e-6;
  double denom_threshold = 1e-6;
};

struct RunConfig {
  double alpha = 1.0;
  double radius = 12.0;
  int panels = 300;
  int points = 4;
  std::string scheme = "gauss-legendre";
  std::uint64_t seed = 0;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  Tolerances tol;
  std::string format = "csv";
  std::string out_path;

  OutputFormat output_format() const { return format == "json" ? OutputFormat::Json : OutputFormat::Csv; }

  void validate() const {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw InvalidConfig("--alpha must be a finite number >= 0");
    if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidConfig("--radius must be positive");
    if (tol.inequality != -1.0 && !(tol.inequality > 0.0)) throw InvalidConfig("--tol-inequality must be positive");
    for (double t : {tol.round_trip, tol.residual, tol.denom_threshold}) {
      if (!(t > 0.0)) throw InvalidConfig("tolerances must be positive");
    }
    if (jobs < 1) throw InvalidConfig("--jobs must be at least 1");
  }

  GridHandle grid() const { return build_grid(alpha, radius, panels, points, parse_scheme(scheme)); }

  TransformPlan plan() const {
    KernelParams params;
    params.alpha = alpha;
    return build_plan(grid(), params, jobs);
  }
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ordered_json metadata(const RunConfig& c, std::string_view command) {
  ordered_json m;
  m["command"] = command;
  m["alpha"] = c.alpha;
  m["radius"] = c.radius;
  m["panels"] = c.panels;
  m["points"] = c.points;
  m["scheme"] = c.scheme;
  m["seed"] = c.seed;
  m["tolerances"] = {{"round_trip", c.tol.round_trip},
                     {"inequality", c.tol.inequality > 0 ? ordered_json(c.tol.inequality) : ordered_json("default")},
                     {"residual", c.tol.residual},
                     {"denom_threshold", c.tol.denom_threshold}};
  m["timestamp"] = utc_timestamp();
  return m;
}

// Numbers that JSON cannot hold (NaN, infinities) become strings.
ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

ordered_json function_json(std::span<const double> nodes, std::span<const double> values) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < nodes.size(); ++i) rows.push_back({nodes[i], values[i]});
  return rows;
}

/// Writes to --out or to the given stream.
void emit(const RunConfig& c, std::ostream& out, const std::function<void(std::ostream&)>& writer) {
  if (c.out_path.empty()) {
    writer(out);
    return;
  }
  std::ofstream file(c.out_path);
  if (!file) throw InvalidConfig("cannot open output file '" + c.out_path + "'");
  writer(file);
  if (!file) throw InvalidConfig("failed writing '" + c.out_path + "'");
}

SampledFunction load_function(const std::string& spec, const GridHandle& grid) {
  if (!spec.empty() && spec.front() == '@') {
    try {
      return read_function_file(spec.substr(1), grid);
    } catch (const GridMismatch& e) {
      throw ParseError(spec.substr(1) + ": " + e.what());
    }
  }
  return sample(parse_function_spec(spec), grid);
}

void warn_boundary(std::ostream& err, const std::string& name, const SampledFunction& f) {
  const double ratio = boundary_ratio(f);
  if (ratio > kBoundaryDecayThreshold) {
    err << "warning: " << name << " has not decayed at the truncation boundary (ratio " << format_double(ratio)
        << ")\n";
  }
}

int cmd_grid(const RunConfig& c, std::ostream& out) {
  const GridHandle grid = c.grid();
  emit(c, out, [&](std::ostream& os) {
    if (c.output_format() == OutputFormat::Json) {
      ordered_json j;
      j["metadata"] = metadata(c, "grid");
      j["nodes"] = std::vector<double>(grid->nodes().begin(), grid->nodes().end());
      j["weights"] = std::vector<double>(grid->mu_weights().begin(), grid->mu_weights().end());
      os << j.dump(2) << '\n';
      return;
    }
    os << "x,weight\n";
    for (std::size_t i = 0; i < grid->size(); ++i) {
      os << format_double(grid->nodes()[i]) << ',' << format_double(grid->mu_weights()[i]) << '\n';
    }
  });
  return kOk;
}

int cmd_transform(const RunConfig& c, const std::string& input, std::ostream& out, std::ostream& err) {
  const TransformPlan plan = c.plan();
  const SampledFunction f = load_function(input, plan.grid());
  warn_boundary(err, "input", f);
  const SpectralFunction F = forward_transform(plan, f);
  const double rt = round_trip_error(plan, f);
  if (rt > c.tol.round_trip) {
    err << "warning: round-trip error " << format_double(rt) << " exceeds --tol-round-trip\n";
  }
  emit(c, out, [&](std::ostream& os) {
    if (c.output_format() == OutputFormat::Json) {
      ordered_json j;
      j["metadata"] = metadata(c, "transform");
      j["input"] = input;
      j["round_trip_error"] = number(rt);
      j["plancherel_defect"] = number(plancherel_defect(plan, f));
      j["spectrum"] = function_json(plan.grid()->nodes(), F.values);
      os << j.dump(2) << '\n';
      return;
    }
    write_spectral_csv(os, F);
  });
  return kOk;
}

int cmd_convolve(const RunConfig& c, const std::string& f_spec, const std::string& g_spec, std::ostream& out,
                 std::ostream& err) {
  const TransformPlan plan = c.plan();
  const SampledFunction f = load_function(f_spec, plan.grid());
  const SampledFunction g = load_function(g_spec, plan.grid());
  warn_boundary(err, "f", f);
  warn_boundary(err, "g", g);
  const SampledFunction fg = convolve(plan, f, g);
  emit(c, out, [&](std::ostream& os) {
    if (c.output_format() == OutputFormat::Json) {
      ordered_json j;
      j["metadata"] = metadata(c, "convolve");
      j["f"] = f_spec;
      j["g"] = g_spec;
      j["factorization_residual"] = number(factorization_residual(plan, f, g));
      j["convolution"] = function_json(plan.grid()->nodes(), fg.values);
      os << j.dump(2) << '\n';
      return;
    }
    write_function_csv(os, fg);
  });
  return kOk;
}

ordered_json report_row_json(const InequalityReport& row) {
  ordered_json j;
  if (row.triple) {
    j["p"] = row.triple->p;
    j["q"] = row.triple->q;
    j["r"] = row.triple->r;
  } else {
    j["p"] = number(row.p);
    j["q"] = nullptr;
    j["r"] = nullptr;
  }
  j["constant"] = number(row.constant);
  j["lhs"] = number(row.lhs);
  j["rhs"] = number(row.rhs);
  j["ratio"] = number(row.ratio);
  j["prior_ratio"] = std::isnan(row.prior_ratio) ? ordered_json(nullptr) : number(row.prior_ratio);
  j["witness_ids"] = row.witness_ids;
  j["pass"] = row.pass;
  return j;
}

int cmd_certify(const RunConfig& c, const std::string& suite, int trials, std::ostream& out, std::ostream& err) {
  CertificationOptions options;
  options.suite = parse_suite(suite);
  options.trials = trials;
  options.seed = c.seed;
  options.jobs = c.jobs;
  if (c.tol.inequality > 0.0) options.tolerance = c.tol.inequality;
  if (trials < 1) throw InvalidConfig("--trials must be at least 1");
  if (options.suite != Suite::HausdorffYoung && !(c.alpha > 0.0)) {
    throw InvalidConfig("convolution suites require --alpha > 0");
  }

  const TransformPlan plan = c.plan();
  const CertificationResult result = run_certification(plan, options);
  emit(c, out, [&](std::ostream& os) {
    if (c.output_format() == OutputFormat::Json) {
      ordered_json j;
      j["metadata"] = metadata(c, "certify");
      j["suite"] = suite;
      j["trials"] = trials;
      j["rows"] = ordered_json::array();
      for (const auto& row : result.rows) j["rows"].push_back(report_row_json(row));
      j["summary"] = {{"max_ratio", number(result.max_ratio)},
                      {"max_prior_ratio", std::isnan(result.max_prior_ratio) ? ordered_json(nullptr)
                                                                             : number(result.max_prior_ratio)},
                      {"argmax_witness", result.argmax_witness},
                      {"pass", result.all_pass}};
      os << j.dump(2) << '\n';
      return;
    }
    write_certification_csv(os, result);
  });
  if (!result.all_pass) {
    err << "certification failed: max ratio " << format_double(result.max_ratio) << '\n';
    return kCertificationFailed;
  }
  return kOk;
}

int cmd_solve(const RunConfig& c, const std::string& g_spec, const std::string& h_spec,
              const std::string& dump_solution, const std::string& dump_multiplier, std::ostream& out,
              std::ostream& err) {
  if (!(c.alpha > 0.0)) throw InvalidConfig("the integral equation requires --alpha > 0");
  const TransformPlan plan = c.plan();
  const SampledFunction g = load_function(g_spec, plan.grid());
  const SampledFunction h = load_function(h_spec, plan.grid());
  SolverOptions options;
  options.denom_threshold = c.tol.denom_threshold;
  options.residual_tol = c.tol.residual;
  const SolverReport report = solve_integral_equation(plan, g, h, options);

  std::optional<AprioriCheck> bounds;
  if (report.solvable) bounds = check_apriori_bound(report, {{1.5, 1.5, 1.5}});

  const auto dump = [](const std::string& path, const std::optional<SampledFunction>& f) {
    if (path.empty() || !f) return;
    std::ofstream file(path);
    if (!file) throw InvalidConfig("cannot open output file '" + path + "'");
    write_function_csv(file, *f);
  };
  dump(dump_solution, report.solution_f);
  dump(dump_multiplier, report.multiplier_l);

  const auto fields = [&]() {
    std::vector<std::pair<std::string, ordered_json>> kv;
    kv.emplace_back("status", std::string(to_string(report.status)));
    kv.emplace_back("solvable", report.solvable);
    kv.emplace_back("min_denominator", number(report.min_denominator));
    kv.emplace_back("argmin_lambda", number(report.argmin_lambda));
    kv.emplace_back("residual_l1", number(report.residual_l1));
    kv.emplace_back("bound_lhs", number(report.bound_lhs));
    kv.emplace_back("bound_rhs", number(report.bound_rhs));
    if (bounds) {
      kv.emplace_back("apriori_holds", bounds->holds());
      for (const auto& b : bounds->bounds) kv.emplace_back("ratio_" + b.name, number(b.ratio));
    }
    return kv;
  }();

  emit(c, out, [&](std::ostream& os) {
    if (c.output_format() == OutputFormat::Json) {
      ordered_json j;
      j["metadata"] = metadata(c, "solve");
      j["g"] = g_spec;
      j["h"] = h_spec;
      for (const auto& [k, v] : fields) j[k] = v;
      j["warnings"] = report.warnings;
      if (bounds) {
        j["apriori_bounds"] = ordered_json::array();
        for (const auto& b : bounds->bounds) {
          j["apriori_bounds"].push_back({{"name", b.name},
                                         {"lhs", number(b.lhs)},
                                         {"rhs", number(b.rhs)},
                                         {"ratio", number(b.ratio)},
                                         {"holds", b.holds}});
        }
      }
      if (report.solution_f) j["solution_f"] = function_json(plan.grid()->nodes(), report.solution_f->values);
      if (report.multiplier_l) j["multiplier_l"] = function_json(plan.grid()->nodes(), report.multiplier_l->values);
      os << j.dump(2) << '\n';
      return;
    }
    os << "field,value\n";
    for (const auto& [k, v] : fields) {
      os << k << ',';
      if (v.is_boolean()) {
        os << (v.get<bool>() ? "true" : "false");
      } else if (v.is_number()) {
        os << format_double(v.get<double>());
      } else {
        os << v.get<std::string>();
      }
      os << '\n';
    }
  });
  for (const auto& w : report.warnings) err << "warning: " << w << '\n';

  if (report.status == SolveStatus::DenominatorTooSmall) {
    err << "not solvable: min |1 + H g| = " << format_double(report.min_denominator) << " at lambda "
        << format_double(report.argmin_lambda) << " is below the threshold\n";
    return kNotSolvable;
  }
  if (report.status == SolveStatus::ResidualTooLarge) {
    err << "not solvable: residual " << format_double(report.residual_l1) << " exceeds --tol-residual\n";
    return kNotSolvable;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Hartley-Bessel transform toolkit", "hbt"};
  app.fallthrough();
  // "-h" is reserved: solve takes --h for the data function.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.add_option("--alpha", c.alpha, "Kernel and measure parameter alpha >= 0")->capture_default_str();
  app.add_option("--radius", c.radius, "Truncation radius R of [-R, R]")->capture_default_str();
  app.add_option("--panels", c.panels, "Number of quadrature panels")->capture_default_str();
  app.add_option("--points", c.points, "Nodes per panel")->capture_default_str();
  app.add_option("--scheme", c.scheme, "gauss-legendre or trapezoid")->capture_default_str();
  app.add_option("--seed", c.seed, "Seed of certification sweeps")->capture_default_str();
  app.add_option("--jobs", c.jobs, "Worker threads")->capture_default_str();
  app.add_option("--tol-round-trip", c.tol.round_trip, "Round-trip warning threshold")->capture_default_str();
  app.add_option("--tol-inequality", c.tol.inequality, "Inequality slack (default: per check)");
  app.add_option("--tol-residual", c.tol.residual, "Solver residual tolerance")->capture_default_str();
  app.add_option("--tol-denom-threshold", c.tol.denom_threshold, "Smallest admissible |1 + H g|")
      ->capture_default_str();
  app.add_option("--format", c.format, "Report format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--out", c.out_path, "Output file (default: stdout)");

  auto* grid_cmd = app.add_subcommand("grid", "Print quadrature nodes and mu_alpha weights");

  std::string input;
  auto* transform_cmd = app.add_subcommand("transform", "Hartley-Bessel transform of a function");
  auto* in_opt = transform_cmd->add_option("--family,--input,input", input, "Function spec or @file.csv");
  in_opt->required();

  std::string f_spec, g_spec, h_spec;
  auto* convolve_cmd = app.add_subcommand("convolve", "Convolution f * g");
  convolve_cmd->add_option("--f,f", f_spec, "First factor")->required();
  convolve_cmd->add_option("--g,g", g_spec, "Second factor")->required();

  std::string suite;
  int trials = 200;
  auto* certify_cmd = app.add_subcommand("certify", "Seeded inequality sweep");
  certify_cmd->add_option("--suite,suite", suite, "hausdorff_young, young or banach_l1")->required();
  certify_cmd->add_option("--trials", trials, "Number of trials")->capture_default_str();

  std::string dump_solution, dump_multiplier;
  auto* solve_cmd = app.add_subcommand("solve", "Solve f + f * g = g * h");
  solve_cmd->add_option("--g", g_spec, "Kernel function g")->required();
  solve_cmd->add_option("--h", h_spec, "Data function h")->required();
  solve_cmd->add_option("--dump-solution", dump_solution, "Write f as function CSV");
  solve_cmd->add_option("--dump-multiplier", dump_multiplier, "Write l as function CSV");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    c.validate();
    if (grid_cmd->parsed()) return cmd_grid(c, out);
    if (transform_cmd->parsed()) return cmd_transform(c, input, out, err);
    if (convolve_cmd->parsed()) return cmd_convolve(c, f_spec, g_spec, out, err);
    if (certify_cmd->parsed()) return cmd_certify(c, suite, trials, out, err);
    if (solve_cmd->parsed()) return cmd_solve(c, g_spec, h_spec, dump_solution, dump_multiplier, out, err);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const GridMismatch& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const NonConvergence& e) {
    err << "non-convergence: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const Error& e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace hbt::cli
