#include "weno/studies.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "weno/errors.hpp"

namespace weno {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct StudyDef {
  const char* id;
  ProblemId problem;
  std::vector<int> ns;
  double t_end;
};

const std::vector<StudyDef>& study_defs() {
  static const std::vector<StudyDef> defs = {
      {"critical", ProblemId::critical_recon, {80, 160, 320, 640}, 0.0},
      {"euler_ic1", ProblemId::euler_sine, {10, 20, 40, 80, 160, 320}, 2.0},
      {"euler_ic2", ProblemId::euler_nonpoly_sine, {10, 20, 40, 80, 160, 320}, 2.0},
      {"high_crit", ProblemId::high_crit, {300}, 300.0},
      {"slp_long", ProblemId::slp, {200, 400, 800}, 200.0},
      {"square_long", ProblemId::square_wave, {200, 400, 800}, 200.0},
  };
  return defs;
}

const StudyDef& find_study(std::string_view id) {
  for (const auto& d : study_defs())
    if (id == d.id) return d;
  std::string msg = "unknown study '" + std::string(id) + "'; valid:";
  for (const auto& d : study_defs()) msg += std::string(" ") + d.id;
  throw UsageError(msg);
}

std::vector<SchemeId> full_roster() {
  std::vector<SchemeId> v = {{Base::ilw, false}, {Base::js, false}, {Base::m, false}};
  for (Base b : kZTypeBases) {
    v.push_back({b, false});
    v.push_back({b, true});
  }
  return v;
}

std::string format_value(double v) {
  if (std::isnan(v)) return "NA";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

}  // namespace

StepConfig default_step_config(const ProblemSpec& spec, SchemeId scheme) {
  StepConfig c;
  c.scheme = scheme;
  c.t_end = spec.t_end;
  switch (spec.id) {
    case ProblemId::slp:
    case ProblemId::square_wave: c.rule = CflRule::fixed; c.cfl = 0.1; break;
    case ProblemId::high_crit:
    case ProblemId::euler_sine:
    case ProblemId::euler_nonpoly_sine:
    case ProblemId::critical_recon: c.rule = CflRule::dx_to_two_thirds; break;
    case ProblemId::riemann2d_cfg9:
    case ProblemId::shock_vortex: c.rule = CflRule::fixed; c.cfl = 0.5; break;
  }
  return c;
}

CaseResult run_case(const ProblemSpec& spec, const StepConfig& cfg, int nx, int ny, const StepObserver& observer) {
  CaseResult r;
  r.field = init_problem(spec, nx, ny);
  r.run = evolve(r.field, cfg, spec.system, observer);
  if (!spec.is_2d() && spec.id != ProblemId::critical_recon) {
    r.error = error_norms(r.field, spec, r.run.t);
    r.has_error = true;
  }
  return r;
}

void parallel_for(int count, int workers, const std::function<void(int)>& job) {
  if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min(workers, std::max(count, 1));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex m;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(m);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<std::string> valid_study_ids() {
  std::vector<std::string> v;
  for (const auto& d : study_defs()) v.emplace_back(d.id);
  return v;
}

StudyConfig default_study(std::string_view id) {
  const auto& d = find_study(id);
  StudyConfig s;
  s.id = d.id;
  s.ns = d.ns;
  s.t_end = d.t_end;
  s.schemes = full_roster();
  return s;
}

namespace {

/// Shared table assembly: `measure(id, n)` returns the error report of one case.
std::vector<TableRow> assemble(const std::vector<SchemeId>& schemes, const std::vector<int>& ns, int jobs,
                               bool dx_from_n, const std::function<ErrorReport(SchemeId, int)>& measure) {
  if (schemes.empty()) return {};
  // Baseline first so every row can report increased errors.
  std::vector<SchemeId> runs = {SchemeId{Base::ilw, false}};
  for (const auto& s : schemes)
    if (std::find(runs.begin(), runs.end(), s) == runs.end()) runs.push_back(s);

  const int nn = static_cast<int>(ns.size());
  std::vector<ErrorReport> err(runs.size() * ns.size());
  parallel_for(static_cast<int>(err.size()), jobs, [&](int k) { err[k] = measure(runs[k / nn], ns[k % nn]); });

  std::vector<double> nd(ns.begin(), ns.end());
  std::vector<TableRow> rows;
  for (const auto& s : schemes) {
    const int si = static_cast<int>(std::find(runs.begin(), runs.end(), s) - runs.begin());
    std::vector<double> e1, einf;
    for (int i = 0; i < nn; ++i) {
      e1.push_back(err[si * nn + i].l1);
      einf.push_back(err[si * nn + i].linf);
    }
    const auto o1 = convergence_orders(e1, nd), oinf = convergence_orders(einf, nd);
    for (int i = 0; i < nn; ++i) {
      const auto& r = err[si * nn + i];
      const auto chi = increased_errors(r, err[i]);
      rows.push_back({scheme_name(s), ns[i], dx_from_n ? 1.0 / ns[i] : r.h, r.l1, o1[i], r.linf, oinf[i],
                      chi.chi1, chi.chi_inf});
    }
  }
  return rows;
}

}  // namespace

std::vector<TableRow> run_sweep(const ProblemSpec& spec, const std::vector<SchemeId>& schemes,
                                const std::vector<int>& ns, const StepConfig& base, int jobs) {
  if (spec.is_2d()) throw NoExactSolution("sweeps need a problem with an exact solution");
  if (spec.id == ProblemId::critical_recon) {
    return assemble(schemes, ns, jobs, true, [](SchemeId id, int n) {
      ErrorReport r;
      r.n = n;
      r.h = 1.0 / n;
      r.linf = critical_point_error(id, r.h);
      r.l1 = kNaN;
      return r;
    });
  }
  return assemble(schemes, ns, jobs, false, [&](SchemeId id, int n) {
    StepConfig cfg = base;
    cfg.scheme = id;
    return run_case(spec, cfg, n).error;
  });
}

std::vector<TableRow> run_table(const StudyConfig& study) {
  const auto& def = find_study(study.id);
  const ProblemSpec spec = problem_spec(def.problem);
  StepConfig base = study.step;
  const StepConfig rules = default_step_config(spec, base.scheme);
  base.rule = rules.rule;
  base.cfl = rules.cfl;
  base.t_end = study.t_end >= 0 ? study.t_end : def.t_end;
  return run_sweep(spec, study.schemes, study.ns.empty() ? def.ns : study.ns, base, study.jobs);
}

void write_imr_csv(std::ostream& os, const std::vector<ImrSample>& samples) {
  os << "substencil,omega_js,omega_x\n";
  char buf[96];
  for (const auto& s : samples) {
    std::snprintf(buf, sizeof buf, "%d,%.9e,%.9e\n", s.substencil, s.omega_js, s.omega_x);
    os << buf;
  }
}

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << "scheme,N,dx,L1,L1_order,Linf,Linf_order,chi1,chi_inf\n";
  for (const auto& r : rows) {
    os << r.scheme << "," << r.n << "," << format_value(r.dx) << "," << format_value(r.l1) << ","
       << format_value(r.l1_order) << "," << format_value(r.linf) << "," << format_value(r.linf_order) << ","
       << format_value(r.chi1) << "," << format_value(r.chi_inf) << "\n";
  }
}

}  // namespace weno
