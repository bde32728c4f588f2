#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wsbvp/benchmarks.hpp"
#include "wsbvp/solvers.hpp"

namespace wsbvp {

enum class WaveletMethod { HWQA, HWNA, HeWQA, HeWNA };

inline const std::vector<WaveletMethod> &all_methods() {
  static const std::vector<WaveletMethod> m{WaveletMethod::HWNA, WaveletMethod::HeWNA, WaveletMethod::HWQA,
                                            WaveletMethod::HeWQA};
  return m;
}

inline std::string to_string(WaveletMethod m) {
  switch (m) {
  case WaveletMethod::HWQA: return "HWQA";
  case WaveletMethod::HWNA: return "HWNA";
  case WaveletMethod::HeWQA: return "HeWQA";
  case WaveletMethod::HeWNA: return "HeWNA";
  }
  return "?";
}

inline std::optional<WaveletMethod> parse_method(const std::string &s) {
  for (auto m : all_methods())
    if (to_string(m) == s) return m;
  return std::nullopt;
}

inline BasisFamily family_of(WaveletMethod m) {
  return (m == WaveletMethod::HWQA || m == WaveletMethod::HWNA) ? BasisFamily::Haar : BasisFamily::Hermite;
}

inline Method method_of(WaveletMethod m) {
  return (m == WaveletMethod::HWQA || m == WaveletMethod::HeWQA) ? Method::QA : Method::NA;
}

enum class OutputFormat { Table, Csv, Json };

struct RunSpec {
  std::string problem;
  int arrhenius_n = 1;
  std::optional<double> k_g; // overrides the problem's shape factor
  std::vector<WaveletMethod> methods;
  std::vector<unsigned> resolutions;
  /// Interpret each resolution as a shared grid level J: Haar at J, Hermite with M = 2^{J+1}.
  bool shared_level = false;
  double tol = 1e-12;
  int max_iter = 50;
  std::optional<double> init_const;
  std::vector<double> init_list;
  OutputFormat format = OutputFormat::Table;
};

/// One solve of the run matrix.
struct RunEntry {
  WaveletMethod method;
  unsigned resolution;
  SolveResult result;
  Vector grid;
  Vector values;
  std::optional<ErrorNorms> norms;
};

struct ReportRow {
  double grid_point = 0.0;
  std::vector<double> values; // one per method
  std::optional<double> exact;
  std::vector<double> abs_error; // empty without an exact solution
};

struct RunOutcome {
  std::vector<RunEntry> entries;
  bool all_converged = true;
};

inline BasisSpec basis_for(WaveletMethod m, unsigned resolution, bool shared_level) {
  const BasisFamily fam = family_of(m);
  if (fam == BasisFamily::Hermite && shared_level) return {fam, 2u << resolution};
  return {fam, resolution};
}

inline std::optional<BenchmarkCase> benchmark_for(const RunSpec &spec) {
  auto bc = make_benchmark(spec.problem, spec.arrhenius_n, spec.k_g.value_or(1.0));
  if (bc && spec.k_g && spec.problem != "arrhenius") {
    if (spec.problem == "membrane") bc = make_membrane(*spec.k_g);
    else bc->problem.k_g = *spec.k_g;
  }
  return bc;
}

inline SolverConfig config_for(const RunSpec &spec, const BenchmarkCase &bc, WaveletMethod m, unsigned resolution) {
  SolverConfig cfg;
  cfg.method = method_of(m);
  cfg.basis = basis_for(m, resolution, spec.shared_level);
  cfg.tol = spec.tol;
  cfg.max_iter = spec.max_iter;
  const std::size_t n = cfg.basis.size();
  if (!spec.init_list.empty()) cfg.initial_vector = spec.init_list;
  else if (spec.init_const) cfg.initial_vector.assign(n, *spec.init_const);
  else cfg.initial_vector = bc.default_init.nodes(n);
  return cfg;
}

/// Runs every (method, resolution) pair; order is method-major as given.
/// Independent solves run concurrently, results are collected in order.
inline RunOutcome execute(const RunSpec &spec, const BenchmarkCase &bc) {
  struct Job {
    WaveletMethod method;
    unsigned resolution;
    std::future<SolveResult> result;
  };
  std::vector<Job> jobs;
  for (auto m : spec.methods)
    for (unsigned r : spec.resolutions) {
      const SolverConfig cfg = config_for(spec, bc, m, r);
      cfg.basis.validate();
      jobs.push_back({m, r, std::async(std::launch::async, [&bc, cfg] { return solve(bc.problem, cfg); })});
    }

  RunOutcome out;
  for (auto &job : jobs) {
    RunEntry e{job.method, job.resolution, job.result.get(), {}, {}, {}};
    e.grid = report_grid(*e.result.system);
    e.values = values_on(e.result, e.grid);
    if (bc.problem.exact) e.norms = error_norms(e.grid, e.values, *bc.problem.exact);
    out.all_converged = out.all_converged && e.result.converged;
    out.entries.push_back(std::move(e));
  }
  return out;
}

/// Rows over the union of the entries' report grids, values reconstructed per method.
inline std::vector<ReportRow> build_rows(const std::vector<const RunEntry *> &entries, const BenchmarkCase &bc) {
  Vector grid;
  for (const auto *e : entries) grid.insert(grid.end(), e->grid.begin(), e->grid.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<ReportRow> rows;
  for (double t : grid) {
    ReportRow row{t, {}, {}, {}};
    if (bc.problem.exact) row.exact = (*bc.problem.exact)(t);
    for (const auto *e : entries) {
      const double v = e->result.at(t).y;
      row.values.push_back(v);
      if (row.exact) row.abs_error.push_back(std::abs(v - *row.exact));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace detail {
inline std::string fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}
} // namespace detail

inline void write_table(std::ostream &os, const RunSpec &spec, const BenchmarkCase &bc, const RunOutcome &run) {
  for (unsigned r : spec.resolutions) {
    std::vector<const RunEntry *> group;
    for (const auto &e : run.entries)
      if (e.resolution == r) group.push_back(&e);
    os << "# problem=" << bc.problem.name << " k_g=" << detail::fmt(bc.problem.k_g, 9) << " resolution=" << r
       << (spec.shared_level ? " (shared level)" : "") << "\n";
    os << "t";
    for (const auto *e : group) os << '\t' << to_string(e->method);
    if (bc.problem.exact) {
      os << "\tExact";
      for (const auto *e : group) os << "\terr_" << to_string(e->method);
    }
    os << '\n';
    for (const auto &row : build_rows(group, bc)) {
      os << detail::fmt(row.grid_point, 9);
      for (double v : row.values) os << '\t' << detail::fmt(v, 9);
      if (row.exact) {
        os << '\t' << detail::fmt(*row.exact, 9);
        for (double v : row.abs_error) os << '\t' << detail::fmt(v, 9);
      }
      os << '\n';
    }
    for (const auto *e : group) {
      if (e->norms)
        os << "# " << to_string(e->method) << " L_inf=" << detail::fmt(e->norms->linf, 9)
           << " L2=" << detail::fmt(e->norms->l2, 9) << '\n';
      os << "# " << to_string(e->method) << " iterations=" << e->result.iterations
         << " converged=" << (e->result.converged ? "yes" : "no") << '\n';
      if (!e->result.converged)
        os << "# warning: " << to_string(e->method) << " did not converge: " << e->result.diagnostic << '\n';
    }
  }
}

/// Long format, one line per (method, resolution, grid point), 17 significant digits.
inline void write_csv(std::ostream &os, const BenchmarkCase &bc, const RunOutcome &run) {
  os << "problem,method,resolution,grid_point,value,exact,abs_error,converged\n";
  for (const auto &e : run.entries)
    for (std::size_t j = 0; j < e.grid.size(); ++j) {
      os << bc.problem.name << ',' << to_string(e.method) << ',' << e.resolution << ','
         << detail::fmt(e.grid[j], 17) << ',' << detail::fmt(e.values[j], 17) << ',';
      if (bc.problem.exact) {
        const double ex = (*bc.problem.exact)(e.grid[j]);
        os << detail::fmt(ex, 17) << ',' << detail::fmt(std::abs(e.values[j] - ex), 17);
      } else {
        os << ',';
      }
      os << ',' << (e.result.converged ? 1 : 0) << '\n';
    }
}

inline nlohmann::json to_json(const BenchmarkCase &bc, const RunEntry &e) {
  nlohmann::json j{{"problem", bc.problem.name},
                   {"method", to_string(e.method)},
                   {"resolution", e.resolution},
                   {"grid", e.grid},
                   {"values", e.values},
                   {"iterations", e.result.iterations},
                   {"converged", e.result.converged}};
  if (e.norms) {
    j["l_inf"] = e.norms->linf;
    j["l2"] = e.norms->l2;
  }
  if (!e.result.converged) j["warning"] = e.result.diagnostic;
  return j;
}

/// A single solve is written as one object, several as an array of objects.
inline void write_json(std::ostream &os, const BenchmarkCase &bc, const RunOutcome &run) {
  if (run.entries.size() == 1) {
    os << to_json(bc, run.entries.front()).dump(2) << '\n';
    return;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto &e : run.entries) arr.push_back(to_json(bc, e));
  os << arr.dump(2) << '\n';
}

/// Exit codes: 0 all solves converged, 1 invalid request, 2 some solve did not converge.
inline int run(const RunSpec &spec, std::ostream &out, std::ostream &err) {
  auto bc = benchmark_for(spec);
  if (!bc) {
    err << "unknown problem '" << spec.problem << "'; expected one of:";
    for (const auto &k : problem_keys()) err << ' ' << k;
    err << '\n';
    return 1;
  }
  if (spec.methods.empty() || spec.resolutions.empty()) {
    err << "need at least one method and one resolution\n";
    return 1;
  }
  RunOutcome outcome;
  try {
    for (auto m : spec.methods)
      for (unsigned r : spec.resolutions) {
        const SolverConfig cfg = config_for(spec, *bc, m, r);
        cfg.basis.validate();
        if (cfg.initial_vector.size() != cfg.basis.size())
          throw std::invalid_argument("initial vector has " + std::to_string(cfg.initial_vector.size()) +
                                      " entries but " + to_string(m) + " at resolution " + std::to_string(r) +
                                      " needs " + std::to_string(cfg.basis.size()));
      }
    outcome = execute(spec, *bc);
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const SingularMatrixError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  switch (spec.format) {
  case OutputFormat::Table: write_table(out, spec, *bc, outcome); break;
  case OutputFormat::Csv: write_csv(out, *bc, outcome); break;
  case OutputFormat::Json: write_json(out, *bc, outcome); break;
  }
  if (!outcome.all_converged) {
    err << "warning: at least one solve did not converge\n";
    return 2;
  }
  return 0;
}

struct SweepRow {
  unsigned resolution = 0;
  std::optional<double> linf; // error vs exact, or successive self-difference
  std::optional<double> l2;
  int iterations = 0;
  bool converged = false;
};

struct Sweep {
  bool self_difference = false;
  std::vector<SweepRow> rows;
  std::optional<bool> monotone_decrease; // set when at least two values exist
};

/// Error (or successive-resolution difference when there is no exact solution) per resolution.
inline Sweep convergence_sweep(const RunSpec &spec) {
  auto bc = benchmark_for(spec);
  if (!bc) throw std::invalid_argument("unknown problem '" + spec.problem + "'");
  if (spec.methods.size() != 1) throw std::invalid_argument("sweep takes exactly one method");
  const RunOutcome run = execute(spec, *bc);

  Sweep sw;
  sw.self_difference = !bc->problem.exact.has_value();
  const RunEntry *prev = nullptr;
  for (const auto &e : run.entries) {
    SweepRow row{e.resolution, {}, {}, e.result.iterations, e.result.converged};
    if (e.norms) {
      row.linf = e.norms->linf;
      row.l2 = e.norms->l2;
    } else if (prev) {
      const Vector coarse = values_on(prev->result, e.grid);
      double m = 0.0, sq = 0.0;
      for (std::size_t j = 0; j < e.grid.size(); ++j) {
        const double d = std::abs(e.values[j] - coarse[j]);
        m = std::max(m, d);
        sq += d * d;
      }
      row.linf = m;
      row.l2 = std::sqrt(sq);
    }
    sw.rows.push_back(row);
    prev = &e;
  }

  std::vector<double> seq;
  for (const auto &r : sw.rows)
    if (r.linf) seq.push_back(*r.linf);
  if (seq.size() >= 2) {
    bool dec = true;
    for (std::size_t j = 1; j < seq.size(); ++j) dec = dec && seq[j] < seq[j - 1];
    sw.monotone_decrease = dec;
  }
  return sw;
}

inline void write_sweep_csv(std::ostream &os, const Sweep &sw) {
  os << (sw.self_difference ? "resolution,self_diff_inf,self_diff_l2,iterations,converged\n"
                            : "resolution,L_inf,L2,iterations,converged\n");
  for (const auto &r : sw.rows) {
    os << r.resolution << ',' << (r.linf ? detail::fmt(*r.linf, 17) : "") << ','
       << (r.l2 ? detail::fmt(*r.l2, 17) : "") << ',' << r.iterations << ',' << (r.converged ? 1 : 0) << '\n';
  }
  if (sw.monotone_decrease) os << "# monotone_decrease=" << (*sw.monotone_decrease ? "yes" : "no") << '\n';
}

/// CSV plot data for one method over a list of resolutions. Exit codes as run().
inline int emit_convergence_sweep(const RunSpec &spec, std::ostream &out, std::ostream &err) {
  if (!benchmark_for(spec)) {
    err << "unknown problem '" << spec.problem << "'\n";
    return 1;
  }
  Sweep sw;
  try {
    sw = convergence_sweep(spec);
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  write_sweep_csv(out, sw);
  for (const auto &r : sw.rows)
    if (!r.converged) return 2;
  return 0;
}

} // namespace wsbvp
