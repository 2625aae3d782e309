#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "weno/cli.hpp"
#include "weno/errors.hpp"
#include "weno/metrics.hpp"
#include "weno/studies.hpp"

namespace weno {

namespace fs = std::filesystem;

namespace {

struct RawOptions {
  std::string problem, cfl_rule = "fixed", recon = "characteristic", out, study;
  std::vector<std::string> schemes;
  std::vector<int> ns;
  std::vector<double> snapshots;
  int ny = 0, p = 2, jobs = 0;
  double cfl = 0, t_end = -1, eps = 1e-40, J = 1.5, theta = 0.1;
  bool imr = false;
  long inject = -1;
};

void add_step_options(CLI::App* sub, RawOptions& o) {
  sub->add_option("--cfl", o.cfl, "CFL number (fixed rule)");
  sub->add_option("--cfl-rule", o.cfl_rule, "fixed | dx23 (CFL = dx^(2/3))");
  sub->add_option("--t-end", o.t_end, "final time");
  sub->add_option("--eps", o.eps, "weight epsilon")->capture_default_str();
  sub->add_option("--p", o.p, "weight power")->capture_default_str();
  sub->add_option("--nip-J", o.J, "NIP exponent")->capture_default_str();
  sub->add_option("--nip-theta", o.theta, "NIP local-indicator weight")->capture_default_str();
  sub->add_option("--recon", o.recon, "characteristic | componentwise");
  sub->add_option("--out", o.out, std::string("output directory (default $") + kOutputDirEnv + " or ./wenobench_out)");
  sub->add_option("--jobs", o.jobs, "worker threads for independent cases (0 = all cores)");
}

std::vector<SchemeId> parse_schemes(const std::vector<std::string>& names) {
  std::vector<SchemeId> v;
  for (const auto& n : names) v.push_back(parse_scheme(n));
  return v;
}

std::string resolve_out_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
  return "wenobench_out";
}

fs::path ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path probe = fs::path(dir) / ".wenobench_probe";
  std::ofstream test(probe);
  if (ec || !test) throw UsageError("output directory '" + dir + "' is not writable");
  test.close();
  fs::remove(probe, ec);
  return dir;
}

std::string format_value(double v) {
  if (std::isnan(v)) return "NA";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return buf;
}

std::ofstream open_or_throw(const fs::path& p) {
  std::ofstream os(p);
  if (!os) throw UsageError("cannot write " + p.string());
  return os;
}

ProblemSpec spec_for(const RunConfig& c) {
  ProblemSpec s = problem_spec(c.problem);
  if (c.t_end >= 0) s.t_end = c.t_end;
  return s;
}

struct CaseOutcome {
  int code = 0;
  std::string message;
};

CaseOutcome run_one(const RunConfig& c, SchemeId id, const fs::path& dir) {
  const ProblemSpec spec = spec_for(c);
  const StepConfig sc = c.step_config(id);
  const int n = c.ns.front();
  std::string stem = problem_name(c.problem) + "_" + scheme_name(id) + "_N" + std::to_string(n);
  if (spec.is_2d()) stem += "x" + std::to_string(c.ny > 0 ? c.ny : n);
  const auto names = component_names(spec.system);

  Field f = init_problem(spec, n, c.ny);
  std::vector<double> stops;
  for (double ts : c.snapshot_times)
    if (ts > 0 && ts < sc.t_end) stops.push_back(ts);
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
  stops.push_back(sc.t_end);

  std::vector<std::string> written;
  long steps = 0;
  double t = 0;
  auto observer = [&](Field& u, long s, double) {
    if (c.inject_nan_step >= 0 && steps + s == c.inject_nan_step)
      u(0, u.nx() / 2, u.grid().is_2d() ? u.ny() / 2 : 0) = std::numeric_limits<double>::quiet_NaN();
  };
  try {
    for (double stop : stops) {
      StepConfig seg = sc;
      seg.t_end = stop - t;
      const RunResult r = evolve(f, seg, spec.system, observer);
      steps += r.steps;
      t = stop;
      if (!f.interior_finite()) throw SolverDiverged("non-finite cell average", -1, t);
      if (stop != sc.t_end) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "_t%g.field.csv", stop);
        const fs::path p = dir / (stem + buf);
        write_field_csv(f, p.string(), names);
        written.push_back(p.filename().string());
      }
    }
  } catch (const std::runtime_error& e) {
    if (!dynamic_cast<const SolverDiverged*>(&e) && !dynamic_cast<const UnphysicalState*>(&e) &&
        !dynamic_cast<const InvalidWeights*>(&e))
      throw;
    auto os = open_or_throw(dir / (stem + ".FAILED"));
    os << "diverged: " << e.what() << "\n";
    os << "partial artifacts:";
    for (const auto& w : written) os << " " << w;
    os << "\n";
    return {3, scheme_name(id) + ": diverged: " + e.what()};
  }

  write_field_csv(f, (dir / (stem + ".field.csv")).string(), names);

  if (!spec.is_2d() && spec.id != ProblemId::critical_recon) {
    TableRow row{scheme_name(id), n, f.dx(), 0, std::nan(""), 0, std::nan(""), std::nan(""), std::nan("")};
    const ErrorReport e = error_norms(f, spec, t);
    row.l1 = e.l1;
    row.linf = e.linf;
    auto os = open_or_throw(dir / (stem + ".errors.csv"));
    write_table_csv(os, {row});
  }

  {
    auto os = open_or_throw(dir / (stem + ".oscillation.csv"));
    os << "scheme,N,lower,upper,overshoot,undershoot,tv\n";
    double lower, upper;
    std::vector<double> slice;
    if (spec.is_2d()) {
      slice = row_slice(f, 0, f.ny() / 2);
      lower = 0;
      upper = std::numeric_limits<double>::infinity();
    } else {
      slice = row_slice(f, 0);
      const auto b = initial_bounds(spec);
      lower = b.lower;
      upper = b.upper;
    }
    const auto m = oscillation_metric(slice, lower, upper, spec.bc == Boundary::periodic);
    os << scheme_name(id) << "," << n << "," << format_value(lower) << "," << format_value(upper) << ","
       << format_value(m.overshoot) << "," << format_value(m.undershoot) << "," << format_value(m.tv) << "\n";
  }

  if (c.imr) {
    auto os = open_or_throw(dir / (stem + ".imr.csv"));
    write_imr_csv(os, imr_sample(f, sc));
  }

  std::ostringstream msg;
  msg << scheme_name(id) << ": " << steps << " steps to t = " << t << ", wrote " << stem << ".*";
  return {0, msg.str()};
}

}  // namespace

StepConfig RunConfig::step_config(SchemeId scheme) const {
  const ProblemSpec spec = problem_spec(problem);
  StepConfig s = default_step_config(spec, scheme);
  if (t_end >= 0) s.t_end = t_end;
  s.rule = rule == CflRule::dx_to_two_thirds ? rule : s.rule;
  if (cfl > 0) {
    s.rule = CflRule::fixed;
    s.cfl = cfl;
  }
  s.eps = eps;
  s.p = p;
  s.nip_J = nip_J;
  s.nip_theta = nip_theta;
  s.recon = recon;
  return s;
}

RunConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"WENO benchmark runner"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file; [run], [sweep] or [table] sections");
  RawOptions o;

  auto* run = app.add_subcommand("run", "evolve one case per scheme and export artifacts");
  run->add_option("--problem", o.problem, "problem id")->required();
  run->add_option("--scheme", o.schemes, "scheme name(s)")->required()->delimiter(',');
  run->add_option("--n", o.ns, "cells along x")->required();
  run->add_option("--ny", o.ny, "cells along y (2D)");
  run->add_option("--snapshot-times", o.snapshots, "extra field snapshots")->delimiter(',');
  run->add_flag("--imr", o.imr, "write weight scatter at the final time");
  run->add_option("--inject-nan-step", o.inject, "poison one cell after this step (testing)");
  add_step_options(run, o);

  auto* sweep = app.add_subcommand("sweep", "resolution ladder with orders and increased errors");
  sweep->add_option("--problem", o.problem, "problem id")->required();
  sweep->add_option("--scheme", o.schemes, "scheme name(s)")->required()->delimiter(',');
  sweep->add_option("--n", o.ns, "resolutions")->required()->delimiter(',');
  add_step_options(sweep, o);

  auto* table = app.add_subcommand("table", "regenerate a study table");
  table->add_option("--study", o.study, "study id")->required();
  table->add_option("--scheme", o.schemes, "restrict to these schemes")->delimiter(',');
  table->add_option("--n", o.ns, "override the resolution ladder")->delimiter(',');
  add_step_options(table, o);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig c;
  const CLI::App* sub = app.get_subcommands().front();
  c.command = sub == run ? Command::run : sub == sweep ? Command::sweep : Command::table;

  if (c.command == Command::table) {
    StudyConfig def = default_study(o.study);  // validates the id
    c.study = def.id;
    c.problem = ProblemId::slp;
  } else {
    c.problem = parse_problem(o.problem);
  }
  c.schemes = parse_schemes(o.schemes);
  c.ns = o.ns;
  for (int n : c.ns)
    if (n < 7) throw UsageError("--n must be at least 7");
  if (c.command == Command::run && c.ns.size() != 1) throw UsageError("run takes a single --n; use sweep for a ladder");
  if (o.ny < 0 || (o.ny > 0 && o.ny < 7)) throw UsageError("--ny must be at least 7");
  c.ny = o.ny;

  if (o.cfl_rule == "fixed") {
    c.rule = CflRule::fixed;
  } else if (o.cfl_rule == "dx23") {
    c.rule = CflRule::dx_to_two_thirds;
    if (o.cfl != 0) throw UsageError("--cfl conflicts with --cfl-rule dx23");
  } else {
    throw UsageError("unknown --cfl-rule '" + o.cfl_rule + "'; valid: fixed dx23");
  }
  if (o.cfl < 0) throw UsageError("--cfl must be positive");
  c.cfl = o.cfl;
  c.t_end = o.t_end;
  if (!(o.eps > 0)) throw UsageError("--eps must be positive");
  if (o.p < 1) throw UsageError("--p must be at least 1");
  if (!(o.J > 0)) throw UsageError("--nip-J must be positive");
  c.eps = o.eps;
  c.p = o.p;
  c.nip_J = o.J;
  c.nip_theta = o.theta;
  if (o.recon == "characteristic") c.recon = ReconVars::characteristic;
  else if (o.recon == "componentwise") c.recon = ReconVars::componentwise;
  else throw UsageError("unknown --recon '" + o.recon + "'; valid: characteristic componentwise");
  c.out_dir = resolve_out_dir(o.out);
  c.snapshot_times = o.snapshots;
  c.imr = o.imr;
  c.jobs = o.jobs;
  c.inject_nan_step = o.inject;
  return c;
}

int cmd_run(const RunConfig& c, std::ostream& log, std::ostream& diag) {
  const fs::path dir = ensure_dir(c.out_dir);
  std::vector<CaseOutcome> out(c.schemes.size());
  parallel_for(static_cast<int>(out.size()), c.jobs, [&](int k) { out[k] = run_one(c, c.schemes[k], dir); });
  int code = 0;
  for (const auto& o : out) {
    (o.code == 0 ? log : diag) << o.message << "\n";
    code = std::max(code, o.code);
  }
  return code;
}

int cmd_sweep(const RunConfig& c, std::ostream& log) {
  const fs::path dir = ensure_dir(c.out_dir);
  const ProblemSpec spec = spec_for(c);
  const auto rows = run_sweep(spec, c.schemes, c.ns, c.step_config(SchemeId{}), c.jobs);
  const fs::path p = dir / (problem_name(c.problem) + "_sweep.csv");
  auto os = open_or_throw(p);
  write_table_csv(os, rows);
  log << "wrote " << p.string() << " (" << rows.size() << " rows)\n";
  return 0;
}

int cmd_table(const RunConfig& c, std::ostream& log) {
  const fs::path dir = ensure_dir(c.out_dir);
  StudyConfig s = default_study(c.study);
  if (!c.schemes.empty()) s.schemes = c.schemes;
  if (!c.ns.empty()) s.ns = c.ns;
  if (c.t_end >= 0) s.t_end = c.t_end;
  s.jobs = c.jobs;
  s.step.eps = c.eps;
  s.step.p = c.p;
  s.step.nip_J = c.nip_J;
  s.step.nip_theta = c.nip_theta;
  s.step.recon = c.recon;
  const auto rows = run_table(s);
  const fs::path p = dir / ("table_" + s.id + ".csv");
  auto os = open_or_throw(p);
  write_table_csv(os, rows);
  log << "wrote " << p.string() << " (" << rows.size() << " rows)\n";
  return 0;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig c = parse_config(args);
    switch (c.command) {
      case Command::run: return cmd_run(c, out, err);
      case Command::sweep: return cmd_sweep(c, out);
      case Command::table: return cmd_table(c, out);
    }
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const NoExactSolution& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const SolverDiverged& e) {
    err << "diverged: " << e.what() << "\n";
    return 3;
  } catch (const UnphysicalState& e) {
    err << "diverged: " << e.what() << "\n";
    return 3;
  } catch (const InvalidWeights& e) {
    err << "diverged: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace weno
